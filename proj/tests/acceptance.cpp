#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cog/development.hpp"
#include "cog/fixtures.hpp"
#include "cog/functoriality.hpp"
#include "cog/io.hpp"
#include "cog/overgroups.hpp"

using namespace cog;

namespace {

constexpr std::size_t kBudget = 20000;

// Collects failures of one criterion; the detail line reports the counts.
struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 20) failures.push_back(what);
    if (!ok && failures.size() >= 20) failures.back() = what + " (and more)";
  }
};

int failed = 0;

void criterion(int n, const std::string& title, const std::function<std::string(Tally&)>& body) {
  Tally t;
  std::string detail;
  try {
    detail = body(t);
  } catch (const std::exception& e) {
    t.failures.push_back(std::string("exception: ") + e.what());
  }
  bool ok = t.failures.empty();
  if (!ok) ++failed;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " [" << t.checks << " checks";
  if (!detail.empty()) std::cout << "; " << detail;
  std::cout << "]\n";
  for (const auto& f : t.failures) std::cout << "    " << f << "\n";
  std::cout.flush();
}

ActionPtr restricted(const ActionPtr& full, const PermGroup& h) {
  return std::make_shared<const ScwolAction>(full->restrict_to(h));
}

ScwolPtr subdivided(const ScwolPtr& s) { return std::make_shared<const Scwol>(barycentric_subdivision(*s)); }

// Closed subsets of a small group, found by brute force over all subsets.
std::vector<std::set<Perm>> subgroups_by_subsets(const PermGroup& g) {
  const auto& el = g.elements();
  std::size_t n = el.size();
  std::vector<std::set<Perm>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); mask += 2) {  // element 0 is the identity
    std::set<Perm> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.insert(el[i]);
    bool closed = true;
    for (const auto& a : s) {
      for (const auto& b : s)
        if (!s.count(a * b)) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

// No element sends the initial vertex of an edge to its terminal vertex, and
// elements fixing an initial vertex fix the edge.
bool acts_without_inversions(const ScwolAction& act, const std::set<Perm>& elements) {
  const Scwol& s = act.scwol();
  for (const auto& g : elements)
    for (int e = 0; e < s.num_edges(); ++e) {
      int gi = act.vertex(g, s.initial(e));
      if (gi == s.terminal(e)) return false;
      if (gi == s.initial(e) && act.edge(g, e) != e) return false;
    }
  return true;
}

// Sum over vertex orbits of 1 / |stabilizer|, by listing orbits.
Rational covolume_by_orbits(const ScwolAction& act) {
  const Scwol& s = act.scwol();
  std::vector<char> seen(static_cast<std::size_t>(s.num_vertices()), 0);
  Rational total = 0;
  for (int v = 0; v < s.num_vertices(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    long long stab = 0;
    for (const auto& g : act.group().elements()) {
      int w = act.vertex(g, v);
      seen[static_cast<std::size_t>(w)] = 1;
      stab += w == v;
    }
    total += Rational(1, stab);
  }
  return total;
}

// L(g.x) = Lambda(g).L(x) for every group element and every cell.
bool equivariant_everywhere(const ScwolMorphism& l, const ScwolAction& a, const ScwolAction& b, const GroupHom& lambda) {
  const Scwol& s = a.scwol();
  for (const auto& g : a.group().elements()) {
    Perm lg = lambda(g);
    for (int v = 0; v < s.num_vertices(); ++v)
      if (l.vertex(a.vertex(g, v)) != b.vertex(lg, l.vertex(v))) return false;
    for (int e = 0; e < s.num_edges(); ++e)
      if (l.edge(a.edge(g, e)) != b.edge(lg, l.edge(e))) return false;
  }
  return true;
}

// Bijective on vertices and edges, compatible with i, t and composition in both directions.
bool scwol_isomorphism_by_hand(const ScwolMorphism& l) {
  const Scwol& s = *l.source();
  const Scwol& t = *l.target();
  if (s.num_vertices() != t.num_vertices() || s.num_edges() != t.num_edges()) return false;
  if (std::set<int>(l.vertex_map().begin(), l.vertex_map().end()).size() != static_cast<std::size_t>(t.num_vertices()))
    return false;
  if (std::set<int>(l.edge_map().begin(), l.edge_map().end()).size() != static_cast<std::size_t>(t.num_edges()))
    return false;
  for (int e = 0; e < s.num_edges(); ++e)
    if (t.initial(l.edge(e)) != l.vertex(s.initial(e)) || t.terminal(l.edge(e)) != l.vertex(s.terminal(e))) return false;
  if (s.composable_pairs().size() != t.composable_pairs().size()) return false;
  for (auto [a, b] : s.composable_pairs())
    if (t.compose(l.edge(a), l.edge(b)) != l.edge(*s.compose(a, b))) return false;
  return true;
}

bool same_scwol_morphism(const ScwolMorphism& a, const ScwolMorphism& b) {
  return a.vertex_map() == b.vertex_map() && a.edge_map() == b.edge_map();
}

std::string join_sizes(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

struct Family {
  std::string name;
  ActionPtr full;
};

std::vector<Family> scwol_families() {
  return {
      {"segment", fixtures::automorphism_action(fixtures::segment())},
      {"path2", fixtures::automorphism_action(fixtures::path2())},
      {"tripod", fixtures::tripod_s3()},
      {"hexagon", fixtures::automorphism_action(fixtures::hexagon())},
      {"triangle", fixtures::automorphism_action(fixtures::triangle())},
      {"tetrahedron", fixtures::automorphism_action(fixtures::tetrahedron())},
      {"octahedron", fixtures::automorphism_action(fixtures::octahedron())},
      {"subdivided triangle", fixtures::automorphism_action(subdivided(fixtures::triangle()))},
      {"subdivided tetrahedron", fixtures::automorphism_action(subdivided(fixtures::tetrahedron()))},
  };
}

// Overgroups of the trivial group on the tripod with their coverings; shared by several criteria.
struct TripodAudit {
  OvergroupContext ctx;
  std::vector<PermGroup> overgroups;
  std::vector<CoveringClass> classes;
};

const TripodAudit& tripod_audit() {
  static const TripodAudit audit = [] {
    auto full = fixtures::tripod_s3();
    TripodAudit a{make_context(full, PermGroup::trivial(full->group().degree()), kBudget), {}, {}};
    a.overgroups = enumerate_overgroups(a.ctx);
    for (const auto& g : a.overgroups) a.classes.push_back(map_a(a.ctx, g));
    return a;
  }();
  return audit;
}

void criterion_1() {
  criterion(1, "overgroups of the trivial group on the tripod match coverings", [](Tally& t) {
    const TripodAudit& a = tripod_audit();
    const ScwolAction& full = *a.ctx.full;
    // Oracle: closed subsets of Aut acting without inversions.
    std::set<std::set<Perm>> oracle;
    for (const auto& s : subgroups_by_subsets(full.group()))
      if (acts_without_inversions(full, s)) oracle.insert(s);
    std::set<std::set<Perm>> found;
    for (const auto& g : a.overgroups) found.insert(std::set<Perm>(g.elements().begin(), g.elements().end()));
    t.expect(full.group().order() == 6, "Aut(tripod) has order 6");
    t.expect(oracle.size() == 6, "oracle finds 6 subgroups");
    t.expect(a.overgroups.size() == 6, "enumerate_overgroups returns 6 subgroups");
    t.expect(found == oracle, "enumerated subgroups equal the oracle");
    Rational base_volume = covolume_by_orbits(*a.ctx.base.action);
    t.expect(base_volume == Rational(7), "covolume of the trivial group is 7");
    std::vector<std::size_t> sheets;
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
      const CoveringClass& c = a.classes[i];
      std::string tag = "overgroup of order " + std::to_string(c.overgroup.order());
      t.expect(c.covering.covering, tag + ": map_a gives a covering");
      t.expect(c.covering.sheets.has_value(), tag + ": sheet count defined");
      std::size_t n = c.covering.sheets.value_or(0);
      sheets.push_back(n);
      std::size_t index = c.overgroup.order() / a.ctx.gamma.order();
      Rational ratio = base_volume / covolume_by_orbits(*c.target.action);
      t.expect(n == index, tag + ": sheets equal the index");
      t.expect(ratio == Rational(static_cast<long long>(n)), tag + ": sheets equal the covolume ratio");
      t.expect(covolume(*c.target.action) == covolume_by_orbits(*c.target.action), tag + ": covolume matches orbit count");
      t.expect(map_b(a.ctx, c) == c.overgroup, tag + ": b(a(G')) = G'");
    }
    t.expect(join_sizes(sheets) == "{1,2,2,2,3,6}", "sheet multiset " + join_sizes(sheets));
    for (std::size_t i = 0; i < a.classes.size(); ++i)
      for (std::size_t j = i + 1; j < a.classes.size(); ++j) {
        CoveringComparison cmp = isomorphic_coverings(a.ctx, a.classes[i], a.classes[j]);
        t.expect(!cmp.by_subgroup && !cmp.by_triangle,
                 "coverings " + std::to_string(i) + " and " + std::to_string(j) + " are not isomorphic");
      }
    AuditReport rep = bijection_audit(a.ctx, 7);
    t.expect(rep.ok(), "bijection_audit: " + rep.report.summary());
    return "sheets " + join_sizes(sheets);
  });
}

void criterion_2() {
  criterion(2, "induced complexes satisfy the axioms and twist mutations are caught", [](Tally& t) {
    std::mt19937 rng(2024);
    auto families = scwol_families();
    std::vector<std::vector<PermGroup>> subs;
    for (const auto& f : families) subs.push_back(all_subgroups(f.full->group()));
    std::size_t accepted = 0, draws = 0;
    std::set<std::pair<std::size_t, std::size_t>> distinct;
    while (accepted < 200 && draws < 5000) {
      ++draws;
      std::size_t fi = rng() % families.size();
      std::size_t si = rng() % subs[fi].size();
      auto act = restricted(families[fi].full, subs[fi][si]);
      if (!validate_action(*act).ok()) continue;
      ++accepted;
      distinct.insert({fi, si});
      Quotient q = quotient_scwol(*act);
      ActionQuotient aq = induce(act, random_choices(*act, q, rng));
      Report r = validate_cog(*aq.cog);
      t.expect(r.ok(), families[fi].name + " subgroup " + subs[fi][si].describe() + ": " + r.summary());
    }
    t.expect(accepted >= 200, "200 pairs acting without inversions were drawn");

    auto sub = fixtures::automorphism_action(subdivided(fixtures::tetrahedron()));
    PermGroup best = maximal_subgroups_without_inversions(*sub).back();
    CogPtr c = induce(restricted(sub, best)).cog;
    std::vector<std::pair<int, int>> pairs;
    for (auto p : c->scwol().composable_pairs())
      if (c->local(c->scwol().terminal(p.first)).order() > 1) pairs.push_back(p);
    t.expect(!pairs.empty(), "mutable twists exist");
    std::size_t detected = 0;
    const std::size_t trials = 50;
    for (std::size_t k = 0; k < trials && !pairs.empty(); ++k) {
      auto [a, b] = pairs[rng() % pairs.size()];
      const PermGroup& g = c->local(c->scwol().terminal(a));
      Perm z = g.element(1 + rng() % (g.order() - 1));
      Report r = validate_cog(c->with_twist(a, b, c->twist(a, b) * z));
      bool caught = !r.ok() && !r.findings.front().witness.empty();
      detected += caught;
      t.expect(caught, "mutation of twist (" + c->scwol().edge_id(a) + "," + c->scwol().edge_id(b) + ") not detected");
    }
    return std::to_string(accepted) + " pairs (" + std::to_string(distinct.size()) + " distinct), " +
           std::to_string(detected) + "/" + std::to_string(trials) + " mutations detected";
  });
}

void criterion_3() {
  criterion(3, "developments recover their complexes and the comparison map is an isomorphism", [](Tally& t) {
    std::size_t runs = 0;
    auto check_recovery = [&](const GroupMorphism& phi, const std::string& tag) {
      Development d = develop(phi);
      Recovery r = recover_cog(d);
      t.expect(r.report.ok(), tag + ": " + r.report.summary());
      t.expect(is_isomorphism(r.theta), tag + ": comparison morphism is an isomorphism");
      t.expect(validate_cog_morphism(r.theta).ok(), tag + ": comparison morphism is valid");
      const Scwol& y = phi.source->scwol();
      const Scwol& z = r.induced.cog->scwol();
      t.expect(y.num_vertices() == z.num_vertices() && y.num_edges() == z.num_edges(), tag + ": same quotient size");
      for (int v = 0; v < y.num_vertices(); ++v)
        t.expect(phi.source->local(v).order() == r.induced.cog->local(r.theta.over.vertex(v)).order(),
                 tag + ": local group orders");
      ++runs;
      return d;
    };
    CogPtr d3 = fixtures::d3seg();
    check_recovery(fixtures::d3seg_into_s3(d3), "D3SEG");
    for (CogPtr c : {fixtures::z2_point(), fixtures::z2_segment()})
      check_recovery(finite_cover(c, canonical_tree(c->scwol()), kBudget).dev.phi, "Z/2 complex");
    std::vector<ActionPtr> fulls{fixtures::automorphism_action(fixtures::segment()), fixtures::flip(),
                                 fixtures::tripod_s3()};
    std::size_t phi_ones = 0;
    for (const auto& full : fulls)
      for (const auto& h : all_subgroups(full->group())) {
        auto act = restricted(full, h);
        if (!validate_action(*act).ok()) continue;
        ActionQuotient aq = induce(act);
        std::string tag = full->scwol().vertex_id(0) + " family, order " + std::to_string(h.order());
        Development d = check_recovery(aq.canonical(), tag);
        ScwolMorphism p = phi_one(aq, d);
        t.expect(scwol_isomorphism_by_hand(p), tag + ": phi_1 is a scwol isomorphism");
        t.expect(equivariant_everywhere(p, *d.action, *aq.action, GroupHom::identity(aq.action->group())),
                 tag + ": phi_1 is equivariant");
        ++phi_ones;
      }
    return std::to_string(runs) + " recoveries, " + std::to_string(phi_ones) + " phi_1 maps";
  });
}

void criterion_4() {
  criterion(4, "the segment of two Z/2 over S3", [](Tally& t) {
    CogPtr c = fixtures::d3seg();
    Development d = develop(fixtures::d3seg_into_s3(c));
    t.expect(d.scwol->num_vertices() == 12, "12 vertices, got " + std::to_string(d.scwol->num_vertices()));
    t.expect(d.scwol->num_edges() == 12, "12 edges, got " + std::to_string(d.scwol->num_edges()));
    // Oracle: |S3| / |G_s| summed over vertices, and over edges with the trivial group.
    t.expect(6 / 2 + 6 / 2 + 6 == 12 && 6 + 6 == 12, "coset counts");
    t.expect(is_connected(*d.scwol), "development is connected");
    t.expect(simple_connectivity(*d.scwol, kBudget) == Certificate::No, "development is not simply connected");

    TreeData tree = make_tree(c->scwol(), {0, 1}, 0);
    Pi1Presentation p = pi1_presentation(*c, tree);
    Abelianization ab = abelianization(p.simplified.presentation);
    Abelianization raw = abelianization(p.raw);
    t.expect(ab.torsion == std::vector<long long>{2, 2} && ab.free_rank == 0, "abelianization " + ab.format());
    t.expect(raw.torsion == ab.torsion && raw.free_rank == ab.free_rank, "raw presentation agrees");

    const Presentation& s = p.simplified.presentation;
    t.expect(s.num_generators() == 2, "two generators survive");
    Word x{letter(0, 1)};
    t.expect(!todd_coxeter(s, {x}, kBudget).complete, "cosets of one vertex group exceed the budget");
    Presentation dihedral = s;
    dihedral.relators.push_back({letter(0, 1), letter(1, 1), letter(0, 1), letter(1, 1), letter(0, 1), letter(1, 1)});
    CosetEnumeration e = todd_coxeter(dihedral, {}, kBudget);
    t.expect(e.complete && e.index() == 6, "(xy)^3 gives 6 cosets, got " + std::to_string(e.index()));
    // Oracle: the reflections (0 1) and (1 2) generate S3, and <x> has index 3.
    PermGroup s3(3, {Perm({1, 0, 2}), Perm({0, 2, 1})});
    t.expect(s3.order() == 6, "two reflections generate a group of order 6");
    CosetEnumeration ex = todd_coxeter(dihedral, {x}, kBudget);
    t.expect(ex.complete && ex.index() == 3, "<x> has index 3 in the dihedral group");
    return "12 vertices, 12 edges, abelianization " + ab.format();
  });
}

void criterion_5() {
  criterion(5, "induced maps of the tripod coverings", [](Tally& t) {
    const TripodAudit& a = tripod_audit();
    const FiniteCover& src = a.ctx.cover;
    int s0 = a.ctx.basepoint();
    ScwolMorphism id = ScwolMorphism::identity(a.ctx.full->base());
    std::size_t runs = 0;
    for (const auto& c : a.classes) {
      std::string tag = "overgroup of order " + std::to_string(c.overgroup.order());
      const InducedPair& p = c.induced;
      t.expect(p.report.ok(), tag + ": " + p.report.summary());
      std::set<Perm> image;
      for (const auto& g : src.pi1.group().elements()) image.insert(p.lambda(g));
      t.expect(image.size() == src.pi1.group().order(), tag + ": Lambda is injective");
      t.expect(scwol_isomorphism_by_hand(p.l), tag + ": L is a scwol isomorphism");
      t.expect(equivariant_everywhere(p.l, *src.dev.action, *c.target_cover.dev.action, p.lambda), tag + ": L is equivariant");
      t.expect(p.u[static_cast<std::size_t>(s0)].is_identity(), tag + ": u at the basepoint is trivial");
      std::vector<Perm> k = default_transfer(a.ctx.base, c.target, id);
      Report lemma = main_lemma_check(a.ctx.base, c.target, id, GroupHom::inclusion(a.ctx.gamma, c.overgroup), k,
                                      src.pi1.tree(), c.target_cover.pi1.tree());
      t.expect(lemma.ok(), tag + ": main lemma " + lemma.summary());
      ++runs;
    }
    std::size_t chains = 0;
    for (const auto& first : a.classes)
      for (const auto& top : a.overgroups) {
        if (!first.overgroup.is_subgroup_of(top)) continue;
        auto ctx2 = make_context(a.ctx.full, first.target, first.target_cover.pi1.tree(), kBudget);
        CoveringClass second = map_a(ctx2, top);
        InducedPair direct = induced_maps(compose(first.morphism, second.morphism), src, second.target_cover);
        bool groups = true, cells = true;
        for (const auto& g : src.pi1.group().elements())
          groups = groups && direct.lambda(g) == second.induced.lambda(first.induced.lambda(g));
        ScwolMorphism both = first.induced.l.then(second.induced.l);
        cells = same_scwol_morphism(direct.l, both);
        std::string tag = "chain " + std::to_string(first.overgroup.order()) + " <= " + std::to_string(top.order());
        t.expect(groups, tag + ": Lambda of the composite");
        t.expect(cells, tag + ": L of the composite");
        t.expect(direct.u[static_cast<std::size_t>(s0)].is_identity(), tag + ": u at the basepoint is trivial");
        ++chains;
      }
    return std::to_string(runs) + " coverings, " + std::to_string(chains) + " composable chains";
  });
}

CogMorphism broken_fixture() {
  std::filesystem::path file = std::filesystem::path(COG_DATA_DIR) / "tripod_cover_broken.json";
  return io::morphism_from_json(io::load_json(file), io::Loader::for_file(file));
}

struct NamedMorphism {
  std::string name;
  CogMorphism m;
};

void criterion_6() {
  criterion(6, "local star bijections agree with the coset clause", [](Tally& t) {
    std::vector<NamedMorphism> ms;
    const TripodAudit& a = tripod_audit();
    for (const auto& c : a.classes) ms.push_back({"tripod covering " + std::to_string(c.overgroup.order()), c.morphism});
    auto oct = fixtures::automorphism_action(fixtures::octahedron());
    auto octx = make_context(oct, fixtures::antipodal_subgroup(oct), kBudget);
    for (const auto& g : enumerate_overgroups(octx))
      ms.push_back({"octahedron covering " + std::to_string(g.order()), map_a(octx, g).morphism});
    for (CogPtr c : {fixtures::d3seg(), fixtures::z2_segment(), fixtures::z2_point()})
      ms.push_back({"identity", identity_morphism(c)});
    auto aq = induce(fixtures::tripod_s3());
    ms.push_back({"recovery", recover_cog(develop(aq.canonical())).theta});
    ms.push_back({"broken fixture", broken_fixture()});

    // Broken variants: one edge element multiplied by a target group element, kept when still a morphism.
    std::size_t originals = ms.size();
    for (std::size_t i = 0; i < originals; ++i) {
      const CogMorphism m = ms[i].m;
      const std::string name = ms[i].name;
      const Scwol& y = m.source->scwol();
      for (int e = 0; e < y.num_edges(); ++e) {
        const PermGroup& g = m.target->local(m.target->scwol().terminal(m.over.edge(e)));
        for (std::size_t j = 1; j < std::min<std::size_t>(g.order(), 3); ++j) {
          CogMorphism mut = m;
          mut.edge[static_cast<std::size_t>(e)] = g.element(j) * m.edge[static_cast<std::size_t>(e)];
          if (!validate_cog_morphism(mut).ok()) continue;
          ms.push_back({name + " mutated at " + y.edge_id(e), mut});
        }
      }
    }
    std::size_t vertices = 0, agree = 0, clause_false = 0;
    for (const auto& nm : ms) {
      CoveringReport cov = is_covering(nm.m);
      for (int s = 0; s < nm.m.source->scwol().num_vertices(); ++s) {
        auto it = cov.vertex_clause.find(s);
        bool clause = it != cov.vertex_clause.end() && it->second;
        StarReport st = local_star_bijection(nm.m, s);
        bool star = st.well_defined && st.bijective;
        ++vertices;
        clause_false += !clause;
        agree += clause == star;
        t.expect(clause == star, nm.name + " at " + nm.m.source->scwol().vertex_id(s));
      }
    }
    t.expect(clause_false > 0, "some variants fail the coset clause");
    return std::to_string(ms.size()) + " morphisms, " + std::to_string(agree) + "/" + std::to_string(vertices) +
           " vertices agree, " + std::to_string(clause_false) + " failing the clause";
  });
}

void criterion_7() {
  criterion(7, "kernels of the universal cover action computed two ways", [](Tally& t) {
    std::size_t runs = 0, induced = 0;
    auto compare = [&](CogPtr c, const std::string& tag, bool from_action) {
      FiniteCover f = finite_cover(c, canonical_tree(c->scwol()), kBudget);
      PermGroup direct = kernel_of_action(f);
      PermGroup search = maximal_invariant_normal_subgroup(f);
      PermGroup via_rep = f.dev.action->representation().kernel();
      t.expect(direct == search, tag + ": kernels differ");
      t.expect(direct == via_rep, tag + ": kernel of the cell representation");
      if (from_action) {
        t.expect(direct.order() == 1, tag + ": kernel is trivial");
        ++induced;
      }
      ++runs;
      return direct.order();
    };
    t.expect(compare(fixtures::z2_point(), "Z/2 point", false) == 2, "Z/2 point has kernel Z/2");
    t.expect(compare(fixtures::z2_segment(), "Z/2 segment", false) == 2, "Z/2 segment has kernel Z/2");
    compare(fixtures::trivial_complex(fixtures::triangle()), "trivial triangle", false);
    std::vector<ActionPtr> fulls{fixtures::tripod_s3(), fixtures::flip(),
                                 fixtures::automorphism_action(fixtures::segment()),
                                 fixtures::automorphism_action(fixtures::triangle()),
                                 fixtures::automorphism_action(fixtures::octahedron())};
    for (const auto& full : fulls)
      for (const auto& h : all_subgroups(full->group())) {
        auto act = restricted(full, h);
        if (!validate_action(*act).ok()) continue;
        compare(induce(act).cog, "action of order " + std::to_string(h.order()), true);
      }
    return std::to_string(runs) + " complexes, " + std::to_string(induced) + " from actions";
  });
}

void criterion_8() {
  criterion(8, "conjugating a free group into H", [](Tally& t) {
    std::size_t solved = 0, skipped = 0;
    auto run = [&](const ActionPtr& full, const PermGroup& h, const PermGroup& gamma, const std::string& tag) {
      PermGroup gh = g_sub_h(*full, h);
      if (!gamma.is_subgroup_of(gh)) {
        ++skipped;
        return;
      }
      ConjugacyResult r = conjugacy_solve(full, h, gamma, kBudget);
      t.expect(r.conjugates_into_h && r.preserves_orbits, tag + ": reported post-checks");
      t.expect(r.g_h == gh, tag + ": G_H");
      t.expect(gh.contains(r.g), tag + ": g lies in G_H");
      t.expect(conjugate(gamma, r.g).is_subgroup_of(h), tag + ": g Gamma g^-1 <= H");
      bool orbits = true;
      for (int x = 0; x < full->scwol().num_cells(); ++x) {
        bool found = false;
        for (const auto& k : h.elements()) found = found || full->cells(k)[x] == full->cells(r.g)[x];
        orbits = orbits && found;
      }
      t.expect(orbits, tag + ": g preserves every H-orbit");
      t.expect(conjugacy_oracle(full, h, gamma).has_value(), tag + ": oracle finds a conjugator");
      ++solved;
    };
    auto tripod = fixtures::tripod_s3();
    PermGroup trivial = PermGroup::trivial(tripod->group().degree());
    PermGroup rot = fixtures::tripod_rotation(tripod);
    PermGroup gh = g_sub_h(*tripod, rot);
    t.expect(gh == tripod->group() && gh.order() == 6, "G_H of the rotation is S3");
    for (const auto& h : all_subgroups(tripod->group()))
      if (validate_action(*restricted(tripod, h)).ok()) run(tripod, h, trivial, "tripod, H of order " + std::to_string(h.order()));
    auto oct = fixtures::automorphism_action(fixtures::octahedron());
    PermGroup anti = fixtures::antipodal_subgroup(oct);
    for (const auto& h : all_subgroups(oct->group()))
      if (validate_action(*restricted(oct, h)).ok()) run(oct, h, anti, "octahedron, H " + h.describe());
    return std::to_string(solved) + " admissible pairs solved, " + std::to_string(skipped) + " with Gamma outside G_H";
  });
}

void criterion_9() {
  criterion(9, "fundamental group invariants do not depend on the maximal tree", [](Tally& t) {
    std::vector<std::pair<std::string, CogPtr>> cs{{"D3SEG", fixtures::d3seg()},
                                                   {"Z/2 segment", fixtures::z2_segment()},
                                                   {"Z/2 point", fixtures::z2_point()},
                                                   {"trivial hexagon", fixtures::trivial_complex(fixtures::hexagon())},
                                                   {"trivial triangle", fixtures::trivial_complex(fixtures::triangle())},
                                                   {"trivial path", fixtures::trivial_complex(fixtures::path2())}};
    std::vector<ActionPtr> fulls{fixtures::tripod_s3(), fixtures::flip(),
                                 fixtures::automorphism_action(fixtures::triangle()),
                                 fixtures::automorphism_action(fixtures::octahedron())};
    for (const auto& full : fulls)
      for (const auto& h : all_subgroups(full->group())) {
        auto act = restricted(full, h);
        if (!validate_action(*act).ok()) continue;
        cs.push_back({full->scwol().vertex_id(0) + " family, order " + std::to_string(h.order()), induce(act).cog});
      }
    std::size_t complexes = 0, trees = 0;
    const std::size_t tc_budget = 5000;
    for (const auto& [name, c] : cs) {
      const Scwol& y = c->scwol();
      if (y.num_vertices() - 1 > 8) continue;
      ++complexes;
      std::optional<std::pair<std::vector<long long>, int>> ab0;
      std::optional<std::pair<bool, std::size_t>> tc0;
      std::optional<std::optional<std::vector<std::size_t>>> idx0;
      for (const auto& edges : all_spanning_trees(y, 100000)) {
        ++trees;
        TreeData tree = make_tree(y, edges, 0);
        Pi1Presentation p = pi1_presentation(*c, tree);
        Abelianization ab = abelianization(p.simplified.presentation);
        CosetEnumeration e = todd_coxeter(p.simplified.presentation, {}, tc_budget);
        std::pair<bool, std::size_t> tc{e.complete, e.complete ? e.index() : 0};
        auto idx = vertex_subgroup_indices(*c, tree, tc_budget);
        if (!ab0) {
          ab0 = std::make_pair(ab.torsion, ab.free_rank);
          tc0 = tc;
          idx0 = idx;
          continue;
        }
        t.expect(ab0->first == ab.torsion && ab0->second == ab.free_rank, name + ": abelianization " + ab.format());
        t.expect(*tc0 == tc, name + ": coset enumeration result");
        t.expect(*idx0 == idx, name + ": vertex subgroup indices");
      }
    }
    return std::to_string(complexes) + " complexes, " + std::to_string(trees) + " maximal trees";
  });
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  return failed == 0 ? 0 : 1;
}
