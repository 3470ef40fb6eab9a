#include "cog/overgroups.hpp"

#include <functional>
#include <map>

namespace cog {

namespace {

ActionPtr restricted(const ActionPtr& full, const PermGroup& h) {
  return std::make_shared<const ScwolAction>(full->restrict_to(h));
}

// Element of the realized group acting on the development by the given cell permutation.
std::map<Perm, Perm> by_cells(const FiniteCover& f) {
  std::map<Perm, Perm> out;
  for (const auto& g : f.pi1.group().elements()) out.emplace(f.dev.action->cells(g), g);
  return out;
}

}  // namespace

OvergroupContext make_context(ActionPtr full, const PermGroup& gamma, std::size_t budget) {
  auto act = restricted(full, gamma);
  Report r = validate_action(*act);
  if (!r.ok()) throw PreconditionFailed("subgroup acts with inversions: " + r.summary());
  ActionQuotient aq = induce(act);
  return make_context(std::move(full), aq, canonical_tree(aq.cog->scwol()), budget);
}

OvergroupContext make_context(ActionPtr full, const ActionQuotient& aq, const TreeData& t, std::size_t budget) {
  FiniteCover cover = finite_cover(aq.cog, t, budget);
  ActionIso ident = lambda_t(aq, cover);
  if (!ident.report.ok()) throw PreconditionFailed("universal cover does not match X: " + ident.report.summary());
  return OvergroupContext{std::move(full), aq.action->group(), aq, std::move(cover), std::move(ident)};
}

std::vector<PermGroup> enumerate_overgroups(const OvergroupContext& ctx) {
  std::vector<PermGroup> out;
  for (const auto& h : all_subgroups(ctx.full->group()))
    if (ctx.gamma.is_subgroup_of(h) && validate_action(*restricted(ctx.full, h)).ok()) out.push_back(h);
  return out;
}

CoveringClass map_a(const OvergroupContext& ctx, const PermGroup& overgroup, std::mt19937* rng) {
  if (!ctx.gamma.is_subgroup_of(overgroup)) throw NotSubgroup("overgroup does not contain the base group");
  auto act = restricted(ctx.full, overgroup);
  Report r = validate_action(*act);
  if (!r.ok()) throw PreconditionFailed("overgroup acts with inversions: " + r.summary());
  Quotient q = quotient_scwol(*act);
  int x0 = ctx.base.choices.vertex_lift[static_cast<std::size_t>(ctx.basepoint())];
  std::vector<int> lifts;
  for (const auto& o : q.vertex_orbits) lifts.push_back(rng ? o[(*rng)() % o.size()] : o.front());
  lifts[static_cast<std::size_t>(q.projection.vertex(x0))] = x0;
  ActionQuotient tgt = induce(act, choices_for_lifts(*act, q, lifts));
  ScwolMorphism id = ScwolMorphism::identity(ctx.full->base());
  std::vector<Perm> k = default_transfer(ctx.base, tgt, id);
  if (!k[static_cast<std::size_t>(ctx.basepoint())].is_identity()) throw Error("basepoint transfer element is not trivial");
  CogMorphism m = induced_morphism(ctx.base, tgt, id, GroupHom::inclusion(ctx.gamma, overgroup), k);
  CoveringReport cov = is_covering(m);
  TreeData tp = canonical_tree(tgt.cog->scwol(), m.over.vertex(ctx.basepoint()));
  FiniteCover fp = finite_cover(tgt.cog, tp);
  InducedPair p = induced_maps(m, ctx.cover, fp);
  return CoveringClass{overgroup, std::move(tgt), std::move(m), std::move(cov), std::move(fp), std::move(p)};
}

PermGroup map_b(const OvergroupContext& ctx, const CoveringClass& c) {
  if (kernel_of_action(c.target_cover).order() != 1)
    throw PreconditionFailed("target complex of groups is not faithful");
  Perm m = cell_perm(ctx.identification.tilde_l.inverse().then(c.induced.l));
  std::vector<Perm> gens;
  for (const auto& x : c.target_cover.pi1.group().generators())
    gens.push_back(m.inverse() * c.target_cover.dev.action->cells(x) * m);
  PermGroup b(ctx.full->group().degree(), gens);
  if (!b.is_subgroup_of(ctx.full->group())) throw Error("conjugated group is not made of automorphisms");
  return b;
}

CoveringComparison isomorphic_coverings(const OvergroupContext& ctx, const CoveringClass& a, const CoveringClass& b) {
  CoveringComparison out;
  out.by_subgroup = map_b(ctx, a) == map_b(ctx, b);
  ScwolMorphism l = a.induced.l.inverse().then(b.induced.l);
  Perm c = cell_perm(l);
  auto lookup = by_cells(b.target_cover);
  std::vector<Perm> imgs;
  for (const auto& x : a.target_cover.pi1.group().generators()) {
    auto it = lookup.find(c * a.target_cover.dev.action->cells(x) * c.inverse());
    if (it == lookup.end()) return out;
    imgs.push_back(it->second);
  }
  try {
    GroupHom lambda(a.target_cover.pi1.group(), b.target_cover.pi1.group(), imgs);
    Reconstruction rec = reconstruct_morphism(l, lambda, a.target_cover, b.target_cover);
    if (!rec.report.ok() || !is_isomorphism(rec.morphism)) return out;
    InducedPair p = induced_maps(rec.morphism, a.target_cover, b.target_cover);
    out.by_triangle = a.induced.l.then(p.l) == b.induced.l && a.induced.lambda.then(p.lambda) == b.induced.lambda;
  } catch (const NotWellDefined&) {
  } catch (const PreconditionFailed&) {
  }
  return out;
}

AuditReport bijection_audit(const OvergroupContext& ctx, unsigned seed) {
  AuditReport out;
  std::mt19937 rng(seed);
  Rational base_volume = covolume(*ctx.base.action);
  std::vector<CoveringClass> classes;
  for (const auto& h : enumerate_overgroups(ctx)) {
    CoveringClass c = map_a(ctx, h);
    AuditEntry e;
    e.overgroup = h;
    e.index = h.order() / ctx.gamma.order();
    e.sheets = c.covering.sheets.value_or(0);
    e.covolume_ratio = base_volume / covolume(*restricted(ctx.full, h));
    std::string tag = "overgroup of order " + std::to_string(h.order());
    if (!c.covering.covering) out.report.add("not_covering", tag + ": " + c.covering.report.summary());
    if (e.sheets != e.index) out.report.add("sheets", tag);
    if (e.covolume_ratio != Rational(static_cast<long long>(e.index))) out.report.add("covolume_ratio", tag);
    PermGroup b = map_b(ctx, c);
    e.roundtrip = b == h;
    if (!e.roundtrip) out.report.add("b_after_a", tag);
    CoveringComparison back = isomorphic_coverings(ctx, c, map_a(ctx, b));
    e.class_roundtrip = back.by_subgroup && back.by_triangle;
    if (!e.class_roundtrip) out.report.add("a_after_b", tag);
    CoveringComparison perturbed = isomorphic_coverings(ctx, c, map_a(ctx, h, &rng));
    e.choice_independent = perturbed.by_subgroup && perturbed.by_triangle;
    if (!e.choice_independent) out.report.add("choice_dependence", tag);
    e.criteria_agree = back.agree() && perturbed.agree();
    out.entries.push_back(e);
    classes.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      CoveringComparison cmp = isomorphic_coverings(ctx, classes[i], classes[j]);
      if (cmp.by_subgroup || cmp.by_triangle) {
        out.pairwise_distinct = false;
        out.report.add("not_distinct", std::to_string(i) + "," + std::to_string(j));
      }
      if (!cmp.agree()) {
        out.entries[i].criteria_agree = out.entries[j].criteria_agree = false;
        out.report.add("criteria_disagree", std::to_string(i) + "," + std::to_string(j));
      }
    }
  return out;
}

namespace {

void check_conjugacy_input(const ActionPtr& full, const PermGroup& h, const PermGroup& gamma, const PermGroup& gh) {
  if (!h.is_subgroup_of(full->group())) throw NotSubgroup("H is not a group of automorphisms of X");
  if (!gamma.is_subgroup_of(gh)) throw NotInGH("Gamma does not preserve the H-orbits");
  const Scwol& x = full->scwol();
  for (const auto& g : gamma.elements()) {
    if (g.is_identity()) continue;
    Perm c = full->cells(g);
    for (int cell = 0; cell < c.degree(); ++cell)
      if (c[cell] == cell) {
        int n = x.num_vertices();
        throw NotFree("element " + g.cycles() + " fixes " + (cell < n ? x.vertex_id(cell) : x.edge_id(cell - n)));
      }
  }
}

}  // namespace

ConjugacyResult conjugacy_solve(const ActionPtr& full, const PermGroup& h, const PermGroup& gamma, std::size_t budget) {
  PermGroup gh = g_sub_h(*full, h);
  check_conjugacy_input(full, h, gamma, gh);
  auto act_h = restricted(full, h);
  Report r = validate_action(*act_h);
  if (!r.ok()) throw PreconditionFailed("H acts with inversions: " + r.summary());
  ActionQuotient qa = induce(act_h);
  ActionQuotient qb = induce(restricted(full, gamma));
  ScwolMorphism id = ScwolMorphism::identity(full->base());
  // The quotient by G_H can have more edge orbits than the quotient by H; the
  // covering through G_H is then skipped and the search runs unguided.
  auto act_gh = restricted(full, gh);
  Quotient q_gh = quotient_scwol(*act_gh);
  std::optional<CogMorphism> via_gh;
  if (q_gh.scwol->num_edges() == qa.quotient.scwol->num_edges()) {
    ActionQuotient qa_gh = induce(act_gh, qa.choices);
    via_gh = induced_morphism(qb, qa_gh, id, GroupHom::inclusion(gamma, gh), default_transfer(qb, qa_gh, id));
  }
  std::vector<int> over_v, over_e;
  for (int v = 0; v < qb.quotient.scwol->num_vertices(); ++v)
    over_v.push_back(qa.quotient.projection.vertex(qb.choices.vertex_lift[static_cast<std::size_t>(v)]));
  for (int e = 0; e < qb.quotient.scwol->num_edges(); ++e) over_e.push_back(qa.quotient.projection.edge(qb.lift_edge(e)));
  ScwolMorphism over(qb.quotient.scwol, qa.quotient.scwol, over_v, over_e);

  const ComplexOfGroups& a = *qa.cog;
  const ComplexOfGroups& b = *qb.cog;
  const Scwol& sb = b.scwol();
  const Scwol& sa = a.scwol();
  CogMorphism m{qb.cog, qa.cog, over, {}, std::vector<Perm>(static_cast<std::size_t>(sb.num_edges()))};
  for (int v = 0; v < sb.num_vertices(); ++v)
    m.local.emplace_back(b.local(v), a.local(m.over.vertex(v)), std::vector<Perm>{});
  // Elements g_b in the H-local groups, chosen edge by edge with the cocycle
  // condition and distinct cosets enforced as soon as they can be tested.
  std::vector<std::vector<Perm>> candidates;
  std::vector<CosetIndex> cosets;
  for (int e = 0; e < sb.num_edges(); ++e) {
    const PermGroup& target = a.local(sa.terminal(m.over.edge(e)));
    std::vector<Perm> cand;
    std::optional<Perm> hint;
    if (via_gh && target.contains(via_gh->edge[static_cast<std::size_t>(e)])) hint = via_gh->edge[static_cast<std::size_t>(e)];
    if (hint) cand.push_back(*hint);
    for (const auto& g : target.elements())
      if (!hint || g != *hint) cand.push_back(g);
    candidates.push_back(std::move(cand));
    cosets.emplace_back(target, a.psi(m.over.edge(e)).image());
  }
  std::vector<std::vector<std::pair<int, int>>> pairs_at(static_cast<std::size_t>(sb.num_edges()));
  for (auto [x, y] : sb.composable_pairs()) {
    int xy = *sb.compose(x, y);
    pairs_at[static_cast<std::size_t>(std::max({x, y, xy}))].push_back({x, y});
  }
  std::vector<std::size_t> label(static_cast<std::size_t>(sb.num_edges()));
  std::function<bool(int)> assign = [&](int e) {
    if (e == sb.num_edges()) return is_covering(m).covering;
    for (const auto& g : candidates[static_cast<std::size_t>(e)]) {
      m.edge[static_cast<std::size_t>(e)] = g;
      label[static_cast<std::size_t>(e)] = cosets[static_cast<std::size_t>(e)].label(g);
      bool ok = true;
      for (int f = 0; f < e && ok; ++f)
        if (sb.terminal(f) == sb.terminal(e) && m.over.edge(f) == m.over.edge(e) &&
            label[static_cast<std::size_t>(f)] == label[static_cast<std::size_t>(e)])
          ok = false;
      for (auto [x, y] : pairs_at[static_cast<std::size_t>(e)]) {
        if (!ok) break;
        int xy = *sb.compose(x, y);
        int lx = m.over.edge(x), ly = m.over.edge(y);
        ok = m.edge[static_cast<std::size_t>(xy)] ==
             m.edge[static_cast<std::size_t>(x)] * a.psi(lx)(m.edge[static_cast<std::size_t>(y)]) * a.twist(lx, ly);
      }
      if (ok && assign(e + 1)) return true;
    }
    return false;
  };
  if (!assign(0)) throw Error("no covering of the H-complex by the Gamma-complex was found");

  FiniteCover fb = finite_cover(qb.cog, canonical_tree(sb), budget);
  FiniteCover fa = finite_cover(qa.cog, canonical_tree(sa, m.over.vertex(0)), budget);
  ActionIso ib = lambda_t(qb, fb);
  ActionIso ia = lambda_t(qa, fa);
  InducedPair p = induced_maps(m, fb, fa);
  ConjugacyResult out;
  out.g = cell_perm(ib.tilde_l.inverse().then(p.l).then(ia.tilde_l));
  out.g_h = gh;
  out.conjugates_into_h = full->group().contains(out.g);
  for (const auto& x : gamma.generators())
    if (!h.contains(out.g * x * out.g.inverse())) out.conjugates_into_h = false;
  out.preserves_orbits = gh.contains(out.g);
  return out;
}

std::optional<Perm> conjugacy_oracle(const ActionPtr& full, const PermGroup& h, const PermGroup& gamma) {
  PermGroup gh = g_sub_h(*full, h);
  check_conjugacy_input(full, h, gamma, gh);
  for (const auto& g : gh.elements()) {
    bool ok = true;
    for (const auto& x : gamma.generators())
      if (!h.contains(g * x * g.inverse())) { ok = false; break; }
    if (ok) return g;
  }
  return std::nullopt;
}

}  // namespace cog
