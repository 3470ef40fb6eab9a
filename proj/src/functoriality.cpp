#include "cog/functoriality.hpp"

#include <deque>
#include <map>

namespace cog {

FgWord kappa(const ComplexOfGroups& c, const TreeData& t, const FgLetter& x) {
  const Scwol& y = c.scwol();
  if (!x.is_edge) {
    const FgWord& p = t.path[static_cast<std::size_t>(x.index)];
    return concat(concat(p, {x}), inverse(p));
  }
  FgLetter plus = x;
  plus.sign = 1;
  FgWord w = concat(concat(t.path[static_cast<std::size_t>(y.terminal(x.index))], {plus}),
                    inverse(t.path[static_cast<std::size_t>(y.initial(x.index))]));
  return x.sign > 0 ? w : inverse(w);
}

namespace {

Perm raw_image(const FundamentalGroup& f, const FgLetter& x) {
  if (x.is_edge) return x.sign > 0 ? f.edge(x.index) : f.edge(x.index).inverse();
  return f.local(x.index, f.cog()->local(x.index).element(x.element));
}

}  // namespace

GroupHom extend_from_raw(const FundamentalGroup& f, const PermGroup& target,
                         const std::function<Perm(const FgLetter&)>& image) {
  std::vector<std::pair<Perm, Perm>> gens;
  for (const auto& x : f.presentation().label) gens.push_back({raw_image(f, x), image(x)});
  std::map<Perm, Perm> img;
  img.emplace(f.group().identity(), target.identity());
  std::deque<Perm> queue{f.group().identity()};
  while (!queue.empty()) {
    Perm x = queue.front();
    queue.pop_front();
    Perm ix = img.at(x);
    for (const auto& [s, t] : gens) {
      Perm y = x * s;
      if (img.emplace(y, ix * t).second) queue.push_back(y);
    }
  }
  std::vector<Perm> images;
  for (const auto& g : f.group().generators()) {
    auto it = img.find(g);
    if (it == img.end()) throw NotWellDefined("raw generators do not generate the fundamental group");
    images.push_back(it->second);
  }
  GroupHom h(f.group(), target, images);
  for (const auto& [s, t] : gens)
    if (h(s) != t) throw NotWellDefined("generator images do not respect the relations");
  return h;
}

ActionIso lambda_t(const ActionQuotient& aq, const FiniteCover& f) {
  const ScwolAction& act = *aq.action;
  if (simple_connectivity(act.scwol()) != Certificate::Yes)
    throw PreconditionFailed("the scwol acted on is not certified simply connected");
  const ComplexOfGroups& c = *f.pi1.cog();
  const Scwol& y = c.scwol();
  const TreeData& t = f.pi1.tree();
  GroupMorphism canon = aq.canonical();
  ActionIso out;
  for (int s = 0; s < y.num_vertices(); ++s) out.h.push_back(evaluate(t.path[static_cast<std::size_t>(s)], canon));
  auto hs = [&](int s) { return out.h[static_cast<std::size_t>(s)]; };
  out.lambda = extend_from_raw(f.pi1, act.group(), [&](const FgLetter& x) {
    if (!x.is_edge) return hs(x.index) * c.local(x.index).element(x.element) * hs(x.index).inverse();
    Perm e = hs(y.terminal(x.index)) * aq.choices.edge_element[static_cast<std::size_t>(x.index)] *
             hs(y.initial(x.index)).inverse();
    return x.sign > 0 ? e : e.inverse();
  });
  const Development& d = f.dev;
  std::vector<int> vm, em;
  for (int x = 0; x < d.scwol->num_vertices(); ++x) {
    int s = d.vertex_key[static_cast<std::size_t>(x)].first;
    vm.push_back(act.vertex(out.lambda(d.vertex_rep(x)) * hs(s), aq.choices.vertex_lift[static_cast<std::size_t>(s)]));
  }
  for (int e = 0; e < d.scwol->num_edges(); ++e) {
    int a = d.edge_key[static_cast<std::size_t>(e)].first;
    em.push_back(act.edge(out.lambda(d.edge_rep(e)) * hs(y.initial(a)), aq.lift_edge(a)));
  }
  out.tilde_l = ScwolMorphism(d.scwol, aq.action->base(), vm, em);
  if (!out.lambda.injective() || !out.lambda.surjective()) out.report.add("lambda_not_isomorphism", "");
  if (!out.tilde_l.is_isomorphism()) out.report.add("development_map_not_isomorphism", "");
  out.report.merge(check_equivariant(out.tilde_l, *d.action, act, out.lambda), "equivariance_");
  return out;
}

InducedPair induced_maps(const CogMorphism& m, const FiniteCover& src, const FiniteCover& tgt) {
  const ComplexOfGroups& c = *m.source;
  const Scwol& y = c.scwol();
  const Scwol& yp = m.target->scwol();
  const TreeData& t = src.pi1.tree();
  if (tgt.pi1.tree().basepoint != m.over.vertex(t.basepoint))
    throw BasepointConditionFailed("target tree is not based at the image of the source basepoint");
  const FundamentalGroup& fp = tgt.pi1;
  auto letter = [&](const FgLetter& x) {
    if (!x.is_edge) return fp.local(m.over.vertex(x.index), m.apply(x.index, c.local(x.index).element(x.element)));
    int la = m.over.edge(x.index);
    Perm e = fp.local(yp.terminal(la), m.edge[static_cast<std::size_t>(x.index)]) * fp.edge(la);
    return x.sign > 0 ? e : e.inverse();
  };
  auto eval = [&](const FgWord& w) {
    Perm p = fp.group().identity();
    for (const auto& x : w) p = p * letter(x);
    return p;
  };
  InducedPair out;
  for (int s = 0; s < y.num_vertices(); ++s) out.u.push_back(eval(t.path[static_cast<std::size_t>(s)]));
  if (!out.u[static_cast<std::size_t>(t.basepoint)].is_identity()) out.report.add("basepoint_correction", "u at the basepoint is not 1");
  out.lambda = extend_from_raw(src.pi1, fp.group(), [&](const FgLetter& x) { return eval(kappa(c, t, x)); });
  const Development& d = src.dev;
  const Development& dp = tgt.dev;
  std::vector<int> vm, em;
  for (int x = 0; x < d.scwol->num_vertices(); ++x) {
    int s = d.vertex_key[static_cast<std::size_t>(x)].first;
    vm.push_back(dp.vertex_at(out.lambda(d.vertex_rep(x)) * out.u[static_cast<std::size_t>(s)], m.over.vertex(s)));
  }
  for (int e = 0; e < d.scwol->num_edges(); ++e) {
    int a = d.edge_key[static_cast<std::size_t>(e)].first;
    em.push_back(dp.edge_at(out.lambda(d.edge_rep(e)) * out.u[static_cast<std::size_t>(y.initial(a))], m.over.edge(a)));
  }
  out.l = ScwolMorphism(d.scwol, dp.scwol, vm, em);
  out.report.merge(check_equivariant(out.l, *d.action, *dp.action, out.lambda), "equivariance_");
  return out;
}

Report main_lemma_check(const ActionQuotient& src, const ActionQuotient& tgt, const ScwolMorphism& l,
                        const GroupHom& lambda, const std::vector<Perm>& k, const TreeData& t, const TreeData& tp) {
  Report r;
  int s0 = t.basepoint;
  int x0 = l.vertex(src.choices.vertex_lift[static_cast<std::size_t>(s0)]);
  int ls0 = tgt.quotient.projection.vertex(x0);
  if (!k[static_cast<std::size_t>(s0)].is_identity()) r.add("hypothesis", "k at the basepoint is not 1");
  if (x0 != tgt.choices.vertex_lift[static_cast<std::size_t>(ls0)])
    r.add("hypothesis", "L does not send the basepoint lift to the chosen lift of its image");
  if (tp.basepoint != ls0) r.add("hypothesis", "target tree is not based at the image of the basepoint");
  if (!r.ok()) return r;
  CogMorphism m = induced_morphism(src, tgt, l, lambda, k);
  FiniteCover f = finite_cover(src.cog, t);
  FiniteCover fp = finite_cover(tgt.cog, tp);
  ActionIso a = lambda_t(src, f);
  ActionIso ap = lambda_t(tgt, fp);
  InducedPair p = induced_maps(m, f, fp);
  r.merge(a.report, "source_");
  r.merge(ap.report, "target_");
  r.merge(p.report, "induced_");
  for (const auto& g : f.pi1.group().elements())
    if (ap.lambda(p.lambda(g)) != lambda(a.lambda(g))) {
      r.add("group_square", "fails at a fundamental group element");
      break;
    }
  for (int x = 0; x < f.dev.scwol->num_vertices(); ++x)
    if (ap.tilde_l.vertex(p.l.vertex(x)) != l.vertex(a.tilde_l.vertex(x))) r.add("scwol_square", f.dev.scwol->vertex_id(x));
  for (int e = 0; e < f.dev.scwol->num_edges(); ++e)
    if (ap.tilde_l.edge(p.l.edge(e)) != l.edge(a.tilde_l.edge(e))) r.add("scwol_square", f.dev.scwol->edge_id(e));
  return r;
}

ThetaCheck theta_check(const FiniteCover& f) {
  ThetaCheck out{recover_cog(f.dev), {}, {}};
  out.report.merge(out.recovery.report, "recovery_");
  if (!out.report.ok()) return out;
  const CogMorphism& theta = out.recovery.theta;
  const TreeData& t = f.pi1.tree();
  std::vector<int> edges;
  for (int e : t.edges) edges.push_back(theta.over.edge(e));
  out.image_tree = make_tree(out.recovery.induced.cog->scwol(), edges, theta.over.vertex(t.basepoint));
  FiniteCover fz = finite_cover(out.recovery.induced.cog, out.image_tree);
  InducedPair p = induced_maps(theta, f, fz);
  ActionIso a = lambda_t(out.recovery.induced, fz);
  out.report.merge(p.report, "induced_");
  out.report.merge(a.report, "action_");
  if (!(p.lambda.then(a.lambda) == GroupHom::identity(f.pi1.group()))) out.report.add("group_inverse", "");
  if (!(p.l.then(a.tilde_l) == ScwolMorphism::identity(f.dev.scwol))) out.report.add("scwol_inverse", "");
  return out;
}

Reconstruction reconstruct_morphism(const ScwolMorphism& l, const GroupHom& lambda, const FiniteCover& src,
                                    const FiniteCover& tgt) {
  const Perm& one = src.pi1.group().identity();
  int s0 = src.pi1.tree().basepoint;
  if (l.vertex(src.dev.vertex_at(one, s0)) != tgt.dev.vertex_at(tgt.pi1.group().identity(), tgt.pi1.tree().basepoint))
    throw BasepointConditionFailed("L([1], basepoint) is not the basepoint of the target development");
  Recovery r = recover_cog(src.dev);
  Recovery rp = recover_cog(tgt.dev);
  std::vector<Perm> k = default_transfer(r.induced, rp.induced, l);
  CogMorphism mu = induced_morphism(r.induced, rp.induced, l, lambda, k);
  Reconstruction out{compose(compose(r.theta, mu), inverse(rp.theta)), {}};
  out.report.merge(validate_cog_morphism(out.morphism), "morphism_");
  InducedPair p = induced_maps(out.morphism, src, tgt);
  out.report.merge(p.report, "induced_");
  if (!(p.l == l)) out.report.add("scwol_map", "L^lambda differs from the given map");
  if (!(p.lambda == lambda)) out.report.add("group_map", "Lambda^lambda differs from the given map");
  return out;
}

IsomorphismCriteria isomorphism_criteria(const CogMorphism& m, const FiniteCover& src, const FiniteCover& tgt) {
  IsomorphismCriteria out;
  out.direct = is_isomorphism(m);
  InducedPair p = induced_maps(m, src, tgt);
  out.induced = p.lambda.injective() && p.lambda.surjective() && p.l.is_isomorphism();
  return out;
}

Perm cell_perm(const ScwolMorphism& m) {
  int nv = m.source()->num_vertices();
  std::vector<int> img;
  for (int v = 0; v < nv; ++v) img.push_back(m.vertex(v));
  for (int e = 0; e < m.source()->num_edges(); ++e) img.push_back(nv + m.edge(e));
  return Perm(img);
}

}  // namespace cog
