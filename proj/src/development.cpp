#include "cog/development.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace cog {

namespace {

std::string padded(std::size_t k, std::size_t total) {
  std::string digits = std::to_string(total ? total - 1 : 0);
  std::string s = std::to_string(k);
  return std::string(digits.size() - std::min(digits.size(), s.size()), '0') + s;
}

}  // namespace

int Development::vertex_at(const Perm& g, int s) const {
  return vertex_of[static_cast<std::size_t>(s)][vertex_cosets[static_cast<std::size_t>(s)].label(g)];
}

int Development::edge_at(const Perm& g, int a) const {
  int ia = projection.target()->initial(a);
  return edge_of[static_cast<std::size_t>(a)][vertex_cosets[static_cast<std::size_t>(ia)].label(g)];
}

Perm Development::vertex_rep(int x) const {
  auto [s, k] = vertex_key[static_cast<std::size_t>(x)];
  return vertex_cosets[static_cast<std::size_t>(s)].cosets()[k].rep;
}

Perm Development::edge_rep(int e) const {
  auto [a, k] = edge_key[static_cast<std::size_t>(e)];
  int ia = projection.target()->initial(a);
  return vertex_cosets[static_cast<std::size_t>(ia)].cosets()[k].rep;
}

Development develop(const GroupMorphism& phi) {
  Report r = validate_group_morphism(phi);
  if (!r.ok()) throw NotWellDefined("not a morphism to a group: " + r.summary());
  const ComplexOfGroups& c = *phi.source;
  const Scwol& y = c.scwol();
  const PermGroup& g = phi.group;
  Development d;
  d.phi = phi;
  for (int s = 0; s < y.num_vertices(); ++s) d.vertex_cosets.emplace_back(g, phi.local[static_cast<std::size_t>(s)].image());
  ScwolData data;
  auto vname = [&](int s, std::size_t k) {
    return y.vertex_id(s) + "@" + padded(k, d.vertex_cosets[static_cast<std::size_t>(s)].count());
  };
  auto ename = [&](int a, std::size_t k) {
    return y.edge_id(a) + "@" + padded(k, d.vertex_cosets[static_cast<std::size_t>(y.initial(a))].count());
  };
  for (int s = 0; s < y.num_vertices(); ++s)
    for (std::size_t k = 0; k < d.vertex_cosets[static_cast<std::size_t>(s)].count(); ++k) data.vertices.push_back(vname(s, k));
  for (int a = 0; a < y.num_edges(); ++a) {
    const auto& cs = d.vertex_cosets[static_cast<std::size_t>(y.initial(a))];
    Perm ha_inv = phi.edge[static_cast<std::size_t>(a)].inverse();
    for (std::size_t k = 0; k < cs.count(); ++k) {
      const Perm& rep = cs.cosets()[k].rep;
      std::size_t tk = d.vertex_cosets[static_cast<std::size_t>(y.terminal(a))].label(rep * ha_inv);
      data.edges.push_back({ename(a, k), vname(y.initial(a), k), vname(y.terminal(a), tk)});
    }
  }
  for (auto [a, b] : y.composable_pairs()) {
    const auto& cs = d.vertex_cosets[static_cast<std::size_t>(y.initial(b))];
    Perm hb_inv = phi.edge[static_cast<std::size_t>(b)].inverse();
    for (std::size_t k = 0; k < cs.count(); ++k) {
      std::size_t left = d.vertex_cosets[static_cast<std::size_t>(y.initial(a))].label(cs.cosets()[k].rep * hb_inv);
      data.compositions.push_back({ename(a, left), ename(b, k), ename(*y.compose(a, b), k)});
    }
  }
  auto scwol = std::make_shared<const Scwol>(Scwol::build(data));
  d.scwol = scwol;
  d.vertex_of.resize(static_cast<std::size_t>(y.num_vertices()));
  d.edge_of.resize(static_cast<std::size_t>(y.num_edges()));
  d.vertex_key.resize(static_cast<std::size_t>(scwol->num_vertices()));
  d.edge_key.resize(static_cast<std::size_t>(scwol->num_edges()));
  std::vector<int> vproj(static_cast<std::size_t>(scwol->num_vertices())), eproj(static_cast<std::size_t>(scwol->num_edges()));
  for (int s = 0; s < y.num_vertices(); ++s)
    for (std::size_t k = 0; k < d.vertex_cosets[static_cast<std::size_t>(s)].count(); ++k) {
      int x = scwol->vertex_index(vname(s, k));
      d.vertex_of[static_cast<std::size_t>(s)].push_back(x);
      d.vertex_key[static_cast<std::size_t>(x)] = {s, k};
      vproj[static_cast<std::size_t>(x)] = s;
    }
  for (int a = 0; a < y.num_edges(); ++a)
    for (std::size_t k = 0; k < d.vertex_cosets[static_cast<std::size_t>(y.initial(a))].count(); ++k) {
      int e = scwol->edge_index(ename(a, k));
      d.edge_of[static_cast<std::size_t>(a)].push_back(e);
      d.edge_key[static_cast<std::size_t>(e)] = {a, k};
      eproj[static_cast<std::size_t>(e)] = a;
    }
  d.projection = ScwolMorphism(scwol, c.base(), vproj, eproj);
  std::vector<Perm> cells;
  int nv = scwol->num_vertices();
  for (const auto& x : g.generators()) {
    std::vector<int> img(static_cast<std::size_t>(scwol->num_cells()));
    for (int v = 0; v < nv; ++v)
      img[static_cast<std::size_t>(v)] = d.vertex_at(x * d.vertex_rep(v), d.vertex_key[static_cast<std::size_t>(v)].first);
    for (int e = 0; e < scwol->num_edges(); ++e)
      img[static_cast<std::size_t>(nv + e)] = nv + d.edge_at(x * d.edge_rep(e), d.edge_key[static_cast<std::size_t>(e)].first);
    cells.emplace_back(img);
  }
  d.action = std::make_shared<const ScwolAction>(scwol, g, cells);
  return d;
}

Recovery recover_cog(const Development& d) {
  const ComplexOfGroups& c = *d.phi.source;
  const Scwol& y = c.scwol();
  Quotient q = quotient_scwol(*d.action);
  const Perm& one = d.phi.group.identity();
  std::vector<int> fv, fe;
  Choices ch;
  ch.vertex_lift.assign(static_cast<std::size_t>(q.scwol->num_vertices()), -1);
  ch.edge_element.assign(static_cast<std::size_t>(q.scwol->num_edges()), one);
  for (int s = 0; s < y.num_vertices(); ++s) {
    int x = d.vertex_at(one, s);
    fv.push_back(q.projection.vertex(x));
    ch.vertex_lift[static_cast<std::size_t>(fv.back())] = x;
  }
  for (int a = 0; a < y.num_edges(); ++a) {
    fe.push_back(q.projection.edge(d.edge_at(one, a)));
    ch.edge_element[static_cast<std::size_t>(fe.back())] = d.phi.edge[static_cast<std::size_t>(a)];
  }
  Recovery r;
  r.induced = induce(d.action, ch);
  r.theta = CogMorphism{d.phi.source, r.induced.cog, ScwolMorphism(c.base(), r.induced.quotient.scwol, fv, fe), {}, {}};
  for (int s = 0; s < y.num_vertices(); ++s) {
    std::vector<Perm> imgs;
    for (const auto& x : c.local(s).generators()) imgs.push_back(d.phi.apply(s, x));
    r.theta.local.emplace_back(c.local(s), r.induced.cog->local(fv[static_cast<std::size_t>(s)]), imgs);
  }
  for (int a = 0; a < y.num_edges(); ++a) r.theta.edge.push_back(one);
  r.report.merge(validate_cog_morphism(r.theta), "theta_");
  if (!is_isomorphism(r.theta)) r.report.add("not_isomorphism", "recovered complex differs from the input");
  if (r.report.ok()) {
    GroupMorphism back = compose(r.theta, r.induced.canonical());
    for (int s = 0; s < y.num_vertices(); ++s)
      if (!(back.local[static_cast<std::size_t>(s)] == d.phi.local[static_cast<std::size_t>(s)])) r.report.add("local_map", y.vertex_id(s));
    for (int a = 0; a < y.num_edges(); ++a)
      if (back.edge[static_cast<std::size_t>(a)] != d.phi.edge[static_cast<std::size_t>(a)]) r.report.add("edge_element", y.edge_id(a));
  }
  return r;
}

ScwolMorphism phi_one(const ActionQuotient& aq, const Development& d) {
  const ScwolAction& act = *aq.action;
  std::vector<int> vm, em;
  for (int x = 0; x < d.scwol->num_vertices(); ++x) {
    auto [s, k] = d.vertex_key[static_cast<std::size_t>(x)];
    vm.push_back(act.vertex(d.vertex_rep(x), aq.choices.vertex_lift[static_cast<std::size_t>(s)]));
  }
  for (int e = 0; e < d.scwol->num_edges(); ++e) {
    auto [a, k] = d.edge_key[static_cast<std::size_t>(e)];
    em.push_back(act.edge(d.edge_rep(e), aq.lift_edge(a)));
  }
  return ScwolMorphism(d.scwol, act.base(), vm, em);
}

namespace {

PartialBall build_ball(const ComplexOfGroups& c, const TreeData& t, std::size_t budget, int max_radius) {
  const Scwol& y = c.scwol();
  Pi1Presentation p = pi1_presentation(c, t);
  const Presentation& sp = p.simplified.presentation;
  auto word_of = [&](int raw) { return p.simplified.substitution[static_cast<std::size_t>(raw)]; };
  auto element_word = [&](int s, const Perm& g) {
    int gen = p.generator_of(s, c.local(s).index_of(g));
    return gen < 0 ? Word{} : word_of(gen);
  };
  std::vector<CosetEnumeration> tables;
  for (int s = 0; s < y.num_vertices(); ++s) {
    std::vector<Word> sub;
    for (const auto& g : c.local(s).generators()) sub.push_back(element_word(s, g));
    tables.push_back(todd_coxeter(sp, sub, budget));
  }
  using Key = std::pair<int, int>;  // (base cell, row)
  std::map<Key, int> dist;
  std::map<Key, Word> rep;
  std::map<Key, std::vector<std::pair<Key, Key>>> adj;  // vertex -> (edge key, other vertex)
  std::map<Key, std::pair<Key, Key>> edge_ends;         // edge -> (initial, terminal)
  std::deque<Key> queue;
  Key start{t.basepoint, 0};
  dist[start] = 0;
  rep[start] = {};
  queue.push_back(start);
  int achieved = -1;
  int failed_at = max_radius + 1;
  // Breadth first; neighbours of every vertex at distance <= achieved are known.
  while (!queue.empty()) {
    Key v = queue.front();
    queue.pop_front();
    int dv = dist[v];
    if (dv > max_radius || dv >= failed_at) break;
    bool ok = true;
    auto add = [&](Key e, Key ini, Key ter, Key other, const Word& w) {
      edge_ends[e] = {ini, ter};
      adj[v].push_back({e, other});
      if (!dist.count(other)) {
        dist[other] = dv + 1;
        rep[other] = w;
        queue.push_back(other);
      }
    };
    const Word& g = rep[v];
    for (int a : y.out_edges(v.first)) {
      Word w = concat(g, inverse(word_of(p.edge_generator[static_cast<std::size_t>(a)])));
      int row = tables[static_cast<std::size_t>(y.terminal(a))].trace(0, w);
      if (row < 0) { ok = false; break; }
      Key ter{y.terminal(a), row};
      add({a, v.second}, v, ter, ter, w);
    }
    for (int a : y.in_edges(v.first)) {
      if (!ok) break;
      CosetIndex cs(c.local(v.first), c.psi(a).image());
      for (const auto& co : cs.cosets()) {
        Word w = concat(concat(g, element_word(v.first, co.rep)), word_of(p.edge_generator[static_cast<std::size_t>(a)]));
        int row = tables[static_cast<std::size_t>(y.initial(a))].trace(0, w);
        if (row < 0) { ok = false; break; }
        Key ini{y.initial(a), row};
        add({a, row}, ini, v, ini, w);
      }
    }
    if (!ok) {
      failed_at = dv;
      continue;
    }
    achieved = std::max(achieved, dv);
  }
  int radius = std::min(failed_at - 1, max_radius);
  radius = std::max(radius, 0);
  for (; radius >= 0; --radius) {
    ScwolData data;
    std::set<Key> verts, edges;
    for (const auto& [k, dd] : dist)
      if (dd <= radius) verts.insert(k);
    auto vid = [&](Key k) { return y.vertex_id(k.first) + "@" + std::to_string(k.second); };
    auto eid = [&](Key k) { return y.edge_id(k.first) + "@" + std::to_string(k.second); };
    for (const auto& k : verts) data.vertices.push_back(vid(k));
    for (const auto& [e, ends] : edge_ends)
      if (verts.count(ends.first) && verts.count(ends.second) && edges.insert(e).second)
        data.edges.push_back({eid(e), vid(ends.first), vid(ends.second)});
    for (const auto& e1 : edges)
      for (const auto& e2 : edges) {
        if (edge_ends[e1].first != edge_ends[e2].second) continue;
        auto ab = y.compose(e1.first, e2.first);
        if (!ab) continue;
        Key prod{*ab, e2.second};
        if (edges.count(prod)) data.compositions.push_back({eid(e1), eid(e2), eid(prod)});
      }
    if (!validate_scwol(data).ok()) continue;
    PartialBall b;
    b.radius = radius;
    b.ball = std::make_shared<const Scwol>(Scwol::build(data));
    return b;
  }
  PartialBall b;
  b.ball = std::make_shared<const Scwol>(Scwol::build({{y.vertex_id(t.basepoint) + "@0"}, {}, {}}));
  return b;
}

}  // namespace

std::variant<FiniteCover, PartialBall> universal_cover(CogPtr c, const TreeData& t, std::size_t budget, int max_radius) {
  auto pi1 = FundamentalGroup::realize(c, t, budget);
  if (pi1) return FiniteCover{*pi1, develop(pi1->iota())};
  return build_ball(*c, t, budget, max_radius);
}

FiniteCover finite_cover(CogPtr c, const TreeData& t, std::size_t budget) {
  auto pi1 = FundamentalGroup::realize(c, t, budget);
  if (!pi1) throw BudgetExceeded("coset enumeration of the fundamental group exceeded the budget");
  return FiniteCover{*pi1, develop(pi1->iota())};
}

std::optional<std::vector<std::size_t>> vertex_subgroup_indices(const ComplexOfGroups& c, const TreeData& t,
                                                                std::size_t budget) {
  Pi1Presentation p = pi1_presentation(c, t);
  std::vector<std::size_t> out;
  for (int s = 0; s < c.scwol().num_vertices(); ++s) {
    std::vector<Word> sub;
    for (const auto& g : c.local(s).generators()) {
      int gen = p.generator_of(s, c.local(s).index_of(g));
      if (gen >= 0) sub.push_back(p.simplified.substitution[static_cast<std::size_t>(gen)]);
    }
    CosetEnumeration e = todd_coxeter(p.simplified.presentation, sub, budget);
    if (!e.complete) return std::nullopt;
    out.push_back(e.index());
  }
  return out;
}

DevelopabilityResult is_developable(CogPtr c, int cap, std::size_t budget) {
  DevelopabilityResult res;
  if (cap <= 0) {
    res.method = "search disabled";
    return res;
  }
  TreeData t = canonical_tree(c->scwol());
  if (auto pi1 = FundamentalGroup::realize(c, t, budget)) {
    if (pi1->iota().injective_on_local_groups()) {
      res.answer = Certificate::Yes;
      res.witness = pi1->iota();
      res.method = "fundamental group";
      return res;
    }
    res.method = "fundamental group is finite but a local group does not inject";
    return res;
  }
  // Bounded search for a morphism into a small symmetric group.
  Pi1Presentation p = pi1_presentation(*c, t);
  const Presentation& sp = p.simplified.presentation;
  const std::size_t max_tuples = 2000000;
  std::size_t tried = 0;
  for (int n = 1; n <= cap; ++n) {
    PermGroup sn = PermGroup::symmetric(n);
    std::size_t k = static_cast<std::size_t>(sp.num_generators());
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
      if (++tried > max_tuples) {
        res.method = "search limit reached";
        return res;
      }
      std::vector<Perm> imgs;
      for (std::size_t j = 0; j < k; ++j) imgs.push_back(sn.element(idx[j]));
      bool rel_ok = true;
      for (const auto& r : sp.relators)
        if (!evaluate(r, imgs, n).is_identity()) { rel_ok = false; break; }
      if (rel_ok) {
        GroupMorphism m{c, sn, {}, {}};
        bool inj = true;
        for (int s = 0; s < c->scwol().num_vertices() && inj; ++s) {
          std::vector<Perm> li;
          for (const auto& g : c->local(s).generators()) {
            int gen = p.generator_of(s, c->local(s).index_of(g));
            li.push_back(gen < 0 ? sn.identity() : evaluate(p.simplified.substitution[static_cast<std::size_t>(gen)], imgs, n));
          }
          m.local.emplace_back(c->local(s), sn, li);
          inj = m.local.back().injective();
        }
        if (inj) {
          for (int a = 0; a < c->scwol().num_edges(); ++a)
            m.edge.push_back(evaluate(p.simplified.substitution[static_cast<std::size_t>(p.edge_generator[static_cast<std::size_t>(a)])], imgs, n));
          if (validate_group_morphism(m).ok()) {
            res.answer = Certificate::Yes;
            res.witness = m;
            res.method = "search in S" + std::to_string(n);
            return res;
          }
        }
      }
      std::size_t j = 0;
      while (j < k && ++idx[j] == sn.order()) idx[j++] = 0;
      if (j == k) break;
    }
  }
  res.method = "no injective morphism into S_n for n <= " + std::to_string(cap);
  return res;
}

StarReport local_star_bijection(const CogMorphism& m, int s) {
  const ComplexOfGroups& c = *m.source;
  const ComplexOfGroups& d = *m.target;
  const Scwol& y = c.scwol();
  const Scwol& z = d.scwol();
  int ts = m.over.vertex(s);
  StarReport out;
  // Upward chains ending at the vertex, each decorated with a coset of the composite.
  auto upper_chains = [](const Scwol& sc, int v) {
    std::vector<std::vector<int>> res;
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& cur) {
      res.push_back(cur);
      for (int e : sc.in_edges(sc.initial(cur.back()))) {
        cur.push_back(e);
        rec(cur);
        cur.pop_back();
      }
    };
    for (int a : sc.in_edges(v)) {
      std::vector<int> cur{a};
      rec(cur);
    }
    return res;
  };
  auto lower_chains = [](const Scwol& sc, int v) {
    std::vector<std::vector<int>> res{{}};
    std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& cur, int at) {
      for (int e : sc.out_edges(at)) {
        cur.insert(cur.begin(), e);
        res.push_back(cur);
        rec(cur, sc.terminal(e));
        cur.erase(cur.begin());
      }
    };
    std::vector<int> cur;
    rec(cur, v);
    return res;
  };
  auto composite = [](const Scwol& sc, const std::vector<int>& ch) {
    int acc = ch.front();
    for (std::size_t j = 1; j < ch.size(); ++j) acc = *sc.compose(acc, ch[j]);
    return acc;
  };
  auto src_up = upper_chains(y, s);
  auto tgt_up = upper_chains(z, ts);
  std::map<std::vector<int>, std::size_t> tgt_chain_index;
  std::vector<CosetIndex> tgt_cosets;
  std::size_t tgt_upper = 1;
  for (std::size_t j = 0; j < tgt_up.size(); ++j) {
    tgt_chain_index[tgt_up[j]] = j;
    tgt_cosets.emplace_back(d.local(ts), d.psi(composite(z, tgt_up[j])).image());
    tgt_upper += tgt_cosets.back().count();
  }
  std::size_t src_upper = 1;
  std::set<std::pair<std::size_t, std::size_t>> hit;
  bool injective = true;
  const GroupHom& ls = m.local[static_cast<std::size_t>(s)];
  for (const auto& ch : src_up) {
    int cc = composite(y, ch);
    CosetIndex cs(c.local(s), c.psi(cc).image());
    src_upper += cs.count();
    std::vector<int> image;
    for (int e : ch) image.push_back(m.over.edge(e));
    auto it = tgt_chain_index.find(image);
    if (it == tgt_chain_index.end()) {
      out.well_defined = false;
      continue;
    }
    const CosetIndex& tc = tgt_cosets[it->second];
    const Perm& lc = m.edge[static_cast<std::size_t>(cc)];
    for (const auto& co : cs.cosets()) {
      std::set<std::size_t> labels;
      for (const auto& g : co.members) labels.insert(tc.label(ls(g) * lc));
      if (labels.size() != 1) out.well_defined = false;
      std::size_t lab = *labels.begin();
      for (const auto& h : c.local(s).generators()) {
        std::size_t moved = tc.label(ls(h * co.rep) * lc);
        if (moved != tc.label(ls(h) * ls(co.rep) * lc)) out.equivariant = false;
      }
      if (!hit.insert({it->second, lab}).second) injective = false;
    }
  }
  auto src_low = lower_chains(y, s);
  auto tgt_low = lower_chains(z, ts);
  std::set<std::vector<int>> low_images;
  for (const auto& ch : src_low) {
    std::vector<int> image;
    for (int e : ch) image.push_back(m.over.edge(e));
    low_images.insert(image);
  }
  bool lower_bijective = low_images.size() == src_low.size() && src_low.size() == tgt_low.size();
  out.source_size = src_upper * src_low.size();
  out.target_size = tgt_upper * tgt_low.size();
  out.bijective = out.well_defined && injective && lower_bijective && src_upper == tgt_upper;
  return out;
}

PermGroup kernel_of_action(const FiniteCover& f) { return f.dev.action->representation().kernel(); }

PermGroup maximal_invariant_normal_subgroup(const FiniteCover& f) {
  const GroupMorphism& iota = f.pi1.iota();
  std::vector<PermGroup> images;
  for (const auto& h : iota.local) images.push_back(h.image());
  PermGroup inter = images.empty() ? PermGroup::trivial(f.pi1.group().degree()) : images.front();
  for (const auto& im : images) inter = intersection(inter, im);
  PermGroup best = PermGroup::trivial(inter.degree());
  for (const auto& n : all_subgroups(inter)) {
    bool ok = true;
    for (const auto& im : images)
      if (!is_normal(im, n)) { ok = false; break; }
    for (const auto& e : iota.edge) {
      if (!ok) break;
      if (!(conjugate(n, e) == n)) ok = false;
    }
    if (ok && n.order() > best.order()) best = n;
  }
  return best;
}

}  // namespace cog
