#include "cog/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cog {

namespace {

PermGroup cell_image_group(const Scwol& s, const std::vector<Perm>& cells) {
  for (const auto& c : cells)
    if (!is_automorphism(s, c)) throw InvalidInput("generator " + c.cycles() + " is not a scwol automorphism");
  return PermGroup(s.num_cells(), cells);
}

}  // namespace

ScwolAction::ScwolAction(ScwolPtr scwol, PermGroup group, const std::vector<Perm>& generator_cells)
    : scwol_(std::move(scwol)), group_(std::move(group)) {
  if (generator_cells.size() != group_.generators().size())
    throw InvalidInput("one cell permutation per group generator is required");
  rep_ = GroupHom(group_, cell_image_group(*scwol_, generator_cells), generator_cells);
}

ScwolAction ScwolAction::of_automorphisms(ScwolPtr scwol, const PermGroup& g) {
  return ScwolAction(std::move(scwol), g, g.generators());
}

ScwolAction ScwolAction::restrict_to(const PermGroup& sub) const {
  if (!sub.is_subgroup_of(group_)) throw NotSubgroup("restriction to a non-subgroup");
  std::vector<Perm> cells;
  for (const auto& s : sub.generators()) cells.push_back(rep_(s));
  return ScwolAction(scwol_, sub, cells);
}

Report validate_action(const ScwolAction& act) {
  Report r;
  const Scwol& s = act.scwol();
  for (const auto& g : act.group().elements()) {
    Perm c = act.cells(g);
    for (int e = 0; e < s.num_edges(); ++e) {
      if (c[s.initial(e)] == s.terminal(e))
        r.add("maps_initial_to_terminal", g.cycles() + " on " + s.edge_id(e));
      if (c[s.initial(e)] == s.initial(e) && c[s.num_vertices() + e] != s.num_vertices() + e)
        r.add("inversion", g.cycles() + " fixes " + s.vertex_id(s.initial(e)) + " but moves " + s.edge_id(e));
    }
  }
  return r;
}

Quotient quotient_scwol(const ScwolAction& act) {
  const Scwol& s = act.scwol();
  int nv = s.num_vertices(), ne = s.num_edges();
  std::vector<int> vorb(static_cast<std::size_t>(nv), -1), eorb(static_cast<std::size_t>(ne), -1);
  Quotient q;
  std::vector<Perm> cells;
  for (const auto& g : act.group().elements()) cells.push_back(act.cells(g));
  for (int v = 0; v < nv; ++v) {
    if (vorb[static_cast<std::size_t>(v)] >= 0) continue;
    std::set<int> orb;
    for (const auto& c : cells) orb.insert(c[v]);
    for (int w : orb) vorb[static_cast<std::size_t>(w)] = static_cast<int>(q.vertex_orbits.size());
    q.vertex_orbits.emplace_back(orb.begin(), orb.end());
  }
  for (int e = 0; e < ne; ++e) {
    if (eorb[static_cast<std::size_t>(e)] >= 0) continue;
    std::set<int> orb;
    for (const auto& c : cells) orb.insert(c[nv + e] - nv);
    for (int f : orb) eorb[static_cast<std::size_t>(f)] = static_cast<int>(q.edge_orbits.size());
    q.edge_orbits.emplace_back(orb.begin(), orb.end());
  }
  // Orbits are discovered in index order, so the first member has the least id
  // and orbit numbers already follow the quotient's id order.
  ScwolData d;
  for (const auto& o : q.vertex_orbits) d.vertices.push_back(s.vertex_id(o.front()));
  for (const auto& o : q.edge_orbits)
    d.edges.push_back({s.edge_id(o.front()), s.vertex_id(q.vertex_orbits[static_cast<std::size_t>(vorb[static_cast<std::size_t>(s.initial(o.front()))])].front()),
                       s.vertex_id(q.vertex_orbits[static_cast<std::size_t>(vorb[static_cast<std::size_t>(s.terminal(o.front()))])].front())});
  std::map<std::pair<int, int>, int> comp;
  for (auto [a, b] : s.composable_pairs()) {
    std::pair<int, int> key{eorb[static_cast<std::size_t>(a)], eorb[static_cast<std::size_t>(b)]};
    int val = eorb[static_cast<std::size_t>(*s.compose(a, b))];
    auto [it, fresh] = comp.emplace(key, val);
    if (!fresh && it->second != val)
      throw NotWellDefined("orbit composition is not well defined at (" + s.edge_id(a) + "," + s.edge_id(b) + ")");
  }
  for (const auto& [k, v] : comp)
    d.compositions.push_back({d.edges[static_cast<std::size_t>(k.first)].id, d.edges[static_cast<std::size_t>(k.second)].id,
                              d.edges[static_cast<std::size_t>(v)].id});
  q.scwol = std::make_shared<const Scwol>(Scwol::build(d));
  q.projection = ScwolMorphism(act.base(), q.scwol, vorb, eorb);
  return q;
}

namespace {

int lift_edge_of(const ScwolAction& act, const Quotient& q, const std::vector<int>& vertex_lift, int a) {
  const Scwol& s = act.scwol();
  int lift_i = vertex_lift[static_cast<std::size_t>(q.scwol->initial(a))];
  int found = -1;
  for (int e : q.edge_orbits[static_cast<std::size_t>(a)])
    if (s.initial(e) == lift_i) {
      if (found >= 0) throw PreconditionFailed("edge lift is not unique; the action has inversions");
      found = e;
    }
  if (found < 0) throw PreconditionFailed("no lift of " + q.scwol->edge_id(a) + " at the chosen vertex");
  return found;
}

bool moves_to(const ScwolAction& act, const Perm& g, int from, int to) { return act.vertex(g, from) == to; }

}  // namespace

Choices default_choices(const ScwolAction& act, const Quotient& q) {
  std::vector<int> lifts;
  for (const auto& o : q.vertex_orbits) lifts.push_back(o.front());
  return choices_for_lifts(act, q, lifts);
}

Choices choices_for_lifts(const ScwolAction& act, const Quotient& q, std::vector<int> vertex_lift) {
  Choices c;
  c.vertex_lift = std::move(vertex_lift);
  auto order = bfs_elements(act.group());
  for (int a = 0; a < q.scwol->num_edges(); ++a) {
    int ea = lift_edge_of(act, q, c.vertex_lift, a);
    int target = c.vertex_lift[static_cast<std::size_t>(q.scwol->terminal(a))];
    for (const auto& g : order)
      if (moves_to(act, g, act.scwol().terminal(ea), target)) {
        c.edge_element.push_back(g);
        break;
      }
  }
  return c;
}

Choices random_choices(const ScwolAction& act, const Quotient& q, std::mt19937& rng) {
  Choices c;
  for (const auto& o : q.vertex_orbits) c.vertex_lift.push_back(o[rng() % o.size()]);
  for (int a = 0; a < q.scwol->num_edges(); ++a) {
    int ea = lift_edge_of(act, q, c.vertex_lift, a);
    int target = c.vertex_lift[static_cast<std::size_t>(q.scwol->terminal(a))];
    std::vector<Perm> ok;
    for (const auto& g : act.group().elements())
      if (moves_to(act, g, act.scwol().terminal(ea), target)) ok.push_back(g);
    c.edge_element.push_back(ok[rng() % ok.size()]);
  }
  return c;
}

Report validate_choices(const ScwolAction& act, const Quotient& q, const Choices& c) {
  Report r;
  const Scwol& y = *q.scwol;
  if (static_cast<int>(c.vertex_lift.size()) != y.num_vertices() || static_cast<int>(c.edge_element.size()) != y.num_edges()) {
    r.add("shape", "wrong number of choices");
    return r;
  }
  for (int v = 0; v < y.num_vertices(); ++v)
    if (q.projection.vertex(c.vertex_lift[static_cast<std::size_t>(v)]) != v) r.add("lift", y.vertex_id(v));
  if (!r.ok()) return r;
  for (int a = 0; a < y.num_edges(); ++a) {
    int ea = lift_edge_of(act, q, c.vertex_lift, a);
    const Perm& h = c.edge_element[static_cast<std::size_t>(a)];
    if (!act.group().contains(h) || !moves_to(act, h, act.scwol().terminal(ea), c.vertex_lift[static_cast<std::size_t>(y.terminal(a))]))
      r.add("edge_element", y.edge_id(a));
  }
  return r;
}

int ActionQuotient::lift_edge(int a) const { return lift_edge_of(*action, quotient, choices.vertex_lift, a); }

GroupMorphism ActionQuotient::canonical() const {
  GroupMorphism m{cog, action->group(), {}, {}};
  for (int v = 0; v < quotient.scwol->num_vertices(); ++v) m.local.push_back(GroupHom::inclusion(cog->local(v), action->group()));
  m.edge = choices.edge_element;
  return m;
}

ActionQuotient induce(ActionPtr act, std::optional<Choices> choices) {
  ActionQuotient aq;
  aq.action = act;
  aq.quotient = quotient_scwol(*act);
  aq.choices = choices ? *choices : default_choices(*act, aq.quotient);
  Report r = validate_choices(*act, aq.quotient, aq.choices);
  if (!r.ok()) throw InvalidInput("invalid choices: " + r.summary());
  const Scwol& y = *aq.quotient.scwol;
  const PermGroup& g = act->group();
  std::vector<PermGroup> locals;
  for (int v = 0; v < y.num_vertices(); ++v) {
    int lift = aq.choices.vertex_lift[static_cast<std::size_t>(v)];
    std::vector<Perm> stab;
    for (const auto& x : g.elements())
      if (act->vertex(x, lift) == lift) stab.push_back(x);
    locals.emplace_back(g.degree(), stab);
  }
  std::vector<GroupHom> psi;
  for (int a = 0; a < y.num_edges(); ++a) {
    const Perm& h = aq.choices.edge_element[static_cast<std::size_t>(a)];
    const PermGroup& src = locals[static_cast<std::size_t>(y.initial(a))];
    std::vector<Perm> imgs;
    for (const auto& x : src.generators()) imgs.push_back(h * x * h.inverse());
    psi.emplace_back(src, locals[static_cast<std::size_t>(y.terminal(a))], imgs);
  }
  std::map<std::pair<int, int>, Perm> twists;
  for (auto [a, b] : y.composable_pairs()) {
    const auto& h = aq.choices.edge_element;
    twists[{a, b}] = h[static_cast<std::size_t>(a)] * h[static_cast<std::size_t>(b)] *
                     h[static_cast<std::size_t>(*y.compose(a, b))].inverse();
  }
  aq.cog = std::make_shared<const ComplexOfGroups>(aq.quotient.scwol, std::move(locals), std::move(psi), std::move(twists));
  return aq;
}

Rational covolume(const ScwolAction& act) {
  Quotient q = quotient_scwol(act);
  Rational sum(0);
  for (const auto& o : q.vertex_orbits) {
    long long stab = 0;
    for (const auto& g : act.group().elements()) stab += act.vertex(g, o.front()) == o.front();
    sum += Rational(1, stab);
  }
  return sum;
}

PermGroup g_sub_h(const ScwolAction& act, const PermGroup& h) {
  if (!h.is_subgroup_of(act.group())) throw NotSubgroup("H is not a subgroup of the acting group");
  const Scwol& s = act.scwol();
  std::vector<std::set<int>> horb(static_cast<std::size_t>(s.num_vertices()));
  for (int v = 0; v < s.num_vertices(); ++v)
    for (const auto& x : h.elements()) horb[static_cast<std::size_t>(v)].insert(act.vertex(x, v));
  std::vector<Perm> out;
  for (const auto& g : act.group().elements()) {
    bool ok = true;
    for (int v = 0; v < s.num_vertices() && ok; ++v) ok = horb[static_cast<std::size_t>(v)].count(act.vertex(g, v)) > 0;
    if (ok) out.push_back(g);
  }
  return PermGroup(act.group().degree(), out);
}

std::vector<PermGroup> maximal_subgroups_without_inversions(const ScwolAction& act) {
  std::vector<PermGroup> good;
  for (const auto& h : all_subgroups(act.group()))
    if (validate_action(act.restrict_to(h)).ok()) good.push_back(h);
  std::vector<PermGroup> out;
  for (const auto& h : good) {
    bool maximal = true;
    for (const auto& k : good)
      if (k.order() > h.order() && h.is_subgroup_of(k)) { maximal = false; break; }
    if (maximal) out.push_back(h);
  }
  return out;
}

CogMorphism change_of_choices(const ActionQuotient& from, const ActionQuotient& to) {
  const Scwol& y = *from.quotient.scwol;
  const ScwolAction& act = *from.action;
  std::vector<Perm> k;
  for (int v = 0; v < y.num_vertices(); ++v) {
    int a = from.choices.vertex_lift[static_cast<std::size_t>(v)], b = to.choices.vertex_lift[static_cast<std::size_t>(v)];
    const Perm* x = find_element(act.group(), [&](const Perm& g) { return act.vertex(g, a) == b; });
    if (!x) throw PreconditionFailed("choices lift to different orbits");
    k.push_back(*x);
  }
  CogMorphism m{from.cog, to.cog, ScwolMorphism::identity(from.quotient.scwol), {}, {}};
  for (int v = 0; v < y.num_vertices(); ++v) {
    const Perm& kv = k[static_cast<std::size_t>(v)];
    std::vector<Perm> imgs;
    for (const auto& x : from.cog->local(v).generators()) imgs.push_back(kv * x * kv.inverse());
    m.local.emplace_back(from.cog->local(v), to.cog->local(v), imgs);
  }
  for (int a = 0; a < y.num_edges(); ++a)
    m.edge.push_back(k[static_cast<std::size_t>(y.terminal(a))] * from.choices.edge_element[static_cast<std::size_t>(a)] *
                     k[static_cast<std::size_t>(y.initial(a))].inverse() *
                     to.choices.edge_element[static_cast<std::size_t>(a)].inverse());
  return m;
}

Report check_equivariant(const ScwolMorphism& L, const ScwolAction& a, const ScwolAction& b, const GroupHom& lambda) {
  Report r;
  const Scwol& s = a.scwol();
  for (const auto& g : a.group().generators()) {
    Perm lg = lambda(g);
    for (int v = 0; v < s.num_vertices(); ++v)
      if (L.vertex(a.vertex(g, v)) != b.vertex(lg, L.vertex(v))) {
        r.add("vertex", g.cycles() + " at " + s.vertex_id(v));
        break;
      }
    for (int e = 0; e < s.num_edges(); ++e)
      if (L.edge(a.edge(g, e)) != b.edge(lg, L.edge(e))) {
        r.add("edge", g.cycles() + " at " + s.edge_id(e));
        break;
      }
  }
  return r;
}

std::vector<Perm> default_transfer(const ActionQuotient& src, const ActionQuotient& tgt, const ScwolMorphism& L) {
  std::vector<Perm> k;
  const ScwolAction& act = *tgt.action;
  for (int v = 0; v < src.quotient.scwol->num_vertices(); ++v) {
    int x = L.vertex(src.choices.vertex_lift[static_cast<std::size_t>(v)]);
    int want = tgt.choices.vertex_lift[static_cast<std::size_t>(tgt.quotient.projection.vertex(x))];
    const Perm* g = find_element(act.group(), [&](const Perm& p) { return act.vertex(p, x) == want; });
    k.push_back(*g);
  }
  return k;
}

CogMorphism induced_morphism(const ActionQuotient& src, const ActionQuotient& tgt, const ScwolMorphism& L,
                             const GroupHom& lambda, const std::vector<Perm>& k) {
  const Scwol& y = *src.quotient.scwol;
  const ScwolAction& ta = *tgt.action;
  std::vector<int> lv, le;
  for (int v = 0; v < y.num_vertices(); ++v)
    lv.push_back(tgt.quotient.projection.vertex(L.vertex(src.choices.vertex_lift[static_cast<std::size_t>(v)])));
  for (int a = 0; a < y.num_edges(); ++a) le.push_back(tgt.quotient.projection.edge(L.edge(src.lift_edge(a))));
  for (int v = 0; v < y.num_vertices(); ++v) {
    int x = L.vertex(src.choices.vertex_lift[static_cast<std::size_t>(v)]);
    if (ta.vertex(k[static_cast<std::size_t>(v)], x) != tgt.choices.vertex_lift[static_cast<std::size_t>(lv[static_cast<std::size_t>(v)])])
      throw PreconditionFailed("transfer element for " + y.vertex_id(v) + " does not carry L(lift) to the chosen lift");
  }
  CogMorphism m{src.cog, tgt.cog, ScwolMorphism(src.quotient.scwol, tgt.quotient.scwol, lv, le), {}, {}};
  for (int v = 0; v < y.num_vertices(); ++v) {
    const Perm& kv = k[static_cast<std::size_t>(v)];
    std::vector<Perm> imgs;
    for (const auto& x : src.cog->local(v).generators()) imgs.push_back(kv * lambda(x) * kv.inverse());
    m.local.emplace_back(src.cog->local(v), tgt.cog->local(lv[static_cast<std::size_t>(v)]), imgs);
  }
  for (int a = 0; a < y.num_edges(); ++a)
    m.edge.push_back(k[static_cast<std::size_t>(y.terminal(a))] * lambda(src.choices.edge_element[static_cast<std::size_t>(a)]) *
                     k[static_cast<std::size_t>(y.initial(a))].inverse() *
                     tgt.choices.edge_element[static_cast<std::size_t>(le[static_cast<std::size_t>(a)])].inverse());
  return m;
}

}  // namespace cog
