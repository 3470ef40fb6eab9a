#include "cog/complex.hpp"

#include <deque>
#include <set>

namespace cog {

ComplexOfGroups::ComplexOfGroups(ScwolPtr base, std::vector<PermGroup> groups, std::vector<GroupHom> psi,
                                 std::map<std::pair<int, int>, Perm> twists)
    : base_(std::move(base)), local_(std::move(groups)), psi_(std::move(psi)), twists_(std::move(twists)) {
  const Scwol& s = *base_;
  if (static_cast<int>(local_.size()) != s.num_vertices()) throw InvalidInput("one local group per vertex is required");
  if (static_cast<int>(psi_.size()) != s.num_edges()) throw InvalidInput("one homomorphism per edge is required");
  for (int e = 0; e < s.num_edges(); ++e) {
    if (!(psi_[static_cast<std::size_t>(e)].source() == local_[static_cast<std::size_t>(s.initial(e))]) ||
        !(psi_[static_cast<std::size_t>(e)].target() == local_[static_cast<std::size_t>(s.terminal(e))]))
      throw InvalidInput("homomorphism on " + s.edge_id(e) + " has the wrong source or target");
  }
  for (auto it = twists_.begin(); it != twists_.end();) {
    auto [a, b] = it->first;
    if (!s.compose(a, b)) throw InvalidInput("twist on a non-composable pair");
    if (!local_[static_cast<std::size_t>(s.terminal(a))].contains(it->second))
      throw InvalidInput("twist for (" + s.edge_id(a) + "," + s.edge_id(b) + ") is not in the local group");
    if (it->second.is_identity()) it = twists_.erase(it);
    else ++it;
  }
}

Perm ComplexOfGroups::twist(int a, int b) const {
  auto it = twists_.find({a, b});
  if (it != twists_.end()) return it->second;
  return local(scwol().terminal(a)).identity();
}

ComplexOfGroups ComplexOfGroups::with_twist(int a, int b, const Perm& g) const {
  auto t = twists_;
  t[{a, b}] = g;
  return ComplexOfGroups(base_, local_, psi_, t);
}

Report validate_cog(const ComplexOfGroups& c) {
  Report r;
  const Scwol& s = c.scwol();
  for (int e = 0; e < s.num_edges(); ++e)
    if (!c.psi(e).injective()) r.add("psi_not_injective", s.edge_id(e));
  for (auto [a, b] : s.composable_pairs()) {
    int ab = *s.compose(a, b);
    Perm g = c.twist(a, b), gi = g.inverse();
    for (const auto& x : c.local(s.initial(b)).generators())
      if (g * c.psi(ab)(x) * gi != c.psi(a)(c.psi(b)(x))) {
        r.add("axiom_i", "(" + s.edge_id(a) + "," + s.edge_id(b) + ") on " + x.cycles());
        break;
      }
  }
  for (auto [a, b] : s.composable_pairs())
    for (int cc : s.in_edges(s.initial(b))) {
      int bc = *s.compose(b, cc), ab = *s.compose(a, b);
      Perm lhs = c.psi(a)(c.twist(b, cc)) * c.twist(a, bc);
      Perm rhs = c.twist(a, b) * c.twist(ab, cc);
      if (lhs != rhs) r.add("axiom_ii", "(" + s.edge_id(a) + "," + s.edge_id(b) + "," + s.edge_id(cc) + ")");
    }
  return r;
}

bool GroupMorphism::injective_on_local_groups() const {
  for (const auto& h : local)
    if (!h.injective()) return false;
  return true;
}

Report validate_group_morphism(const GroupMorphism& m) {
  Report r;
  const ComplexOfGroups& c = *m.source;
  const Scwol& s = c.scwol();
  if (static_cast<int>(m.local.size()) != s.num_vertices() || static_cast<int>(m.edge.size()) != s.num_edges()) {
    r.add("shape", "wrong number of local maps or edge elements");
    return r;
  }
  for (int v = 0; v < s.num_vertices(); ++v)
    if (!(m.local[static_cast<std::size_t>(v)].source() == c.local(v)) ||
        !(m.local[static_cast<std::size_t>(v)].target() == m.group))
      r.add("local_map", s.vertex_id(v));
  for (int e = 0; e < s.num_edges(); ++e)
    if (!m.group.contains(m.edge[static_cast<std::size_t>(e)])) r.add("edge_element", s.edge_id(e));
  if (!r.ok()) return r;
  for (int e = 0; e < s.num_edges(); ++e) {
    const Perm& h = m.edge[static_cast<std::size_t>(e)];
    for (const auto& x : c.local(s.initial(e)).generators())
      if (h * m.apply(s.initial(e), x) * h.inverse() != m.apply(s.terminal(e), c.psi(e)(x))) {
        r.add("axiom_i", s.edge_id(e) + " on " + x.cycles());
        break;
      }
  }
  for (auto [a, b] : s.composable_pairs()) {
    int ab = *s.compose(a, b);
    Perm lhs = m.apply(s.terminal(a), c.twist(a, b)) * m.edge[static_cast<std::size_t>(ab)];
    Perm rhs = m.edge[static_cast<std::size_t>(a)] * m.edge[static_cast<std::size_t>(b)];
    if (lhs != rhs) r.add("axiom_ii", "(" + s.edge_id(a) + "," + s.edge_id(b) + ")");
  }
  return r;
}

std::optional<std::vector<Perm>> homotopy(const GroupMorphism& m1, const GroupMorphism& m2) {
  const Scwol& s = m1.source->scwol();
  int nv = s.num_vertices();
  if (nv == 0) return std::vector<Perm>{};
  for (const auto& k0 : m1.group.elements()) {
    std::vector<std::optional<Perm>> k(static_cast<std::size_t>(nv));
    bool ok = true;
    for (int root = 0; root < nv && ok; ++root) {
      if (k[static_cast<std::size_t>(root)]) continue;
      if (root != 0) {
        ok = false;  // homotopies are only searched on connected scwols
        break;
      }
      k[0] = k0;
      std::deque<int> q{0};
      while (!q.empty() && ok) {
        int v = q.front();
        q.pop_front();
        auto assign = [&](int w, const Perm& val) {
          auto& slot = k[static_cast<std::size_t>(w)];
          if (!slot) {
            slot = val;
            q.push_back(w);
          } else if (*slot != val) {
            ok = false;
          }
        };
        for (int e : s.out_edges(v))  // k_t = m2(a) k_i m1(a)^-1
          assign(s.terminal(e), m2.edge[static_cast<std::size_t>(e)] * *k[static_cast<std::size_t>(v)] *
                                    m1.edge[static_cast<std::size_t>(e)].inverse());
        for (int e : s.in_edges(v))
          assign(s.initial(e), m2.edge[static_cast<std::size_t>(e)].inverse() * *k[static_cast<std::size_t>(v)] *
                                   m1.edge[static_cast<std::size_t>(e)]);
      }
    }
    if (!ok) continue;
    std::vector<Perm> out;
    for (int v = 0; v < nv && ok; ++v) {
      if (!k[static_cast<std::size_t>(v)]) { ok = false; break; }
      const Perm& kv = *k[static_cast<std::size_t>(v)];
      for (const auto& x : m1.source->local(v).generators())
        if (m2.apply(v, x) != kv * m1.apply(v, x) * kv.inverse()) { ok = false; break; }
      out.push_back(kv);
    }
    if (ok) return out;
  }
  return std::nullopt;
}

Report validate_cog_morphism(const CogMorphism& m) {
  Report r;
  const ComplexOfGroups& c = *m.source;
  const ComplexOfGroups& d = *m.target;
  const Scwol& s = c.scwol();
  if (m.over.source().get() != c.base().get() && !(m.over.source()->data().vertices == s.data().vertices))
    r.add("shape", "scwol morphism has the wrong source");
  if (static_cast<int>(m.local.size()) != s.num_vertices() || static_cast<int>(m.edge.size()) != s.num_edges()) {
    r.add("shape", "wrong number of local maps or edge elements");
    return r;
  }
  MorphismFlags f = check_morphism(m.over);
  if (!f.valid) {
    r.merge(f.report, "scwol_");
    return r;
  }
  for (int v = 0; v < s.num_vertices(); ++v)
    if (!(m.local[static_cast<std::size_t>(v)].source() == c.local(v)) ||
        !(m.local[static_cast<std::size_t>(v)].target() == d.local(m.over.vertex(v))))
      r.add("local_map", s.vertex_id(v));
  for (int e = 0; e < s.num_edges(); ++e)
    if (!d.local(d.scwol().terminal(m.over.edge(e))).contains(m.edge[static_cast<std::size_t>(e)]))
      r.add("edge_element", s.edge_id(e));
  if (!r.ok()) return r;
  for (int e = 0; e < s.num_edges(); ++e) {
    const Perm& h = m.edge[static_cast<std::size_t>(e)];
    int le = m.over.edge(e);
    for (const auto& x : c.local(s.initial(e)).generators())
      if (h * d.psi(le)(m.apply(s.initial(e), x)) * h.inverse() != m.apply(s.terminal(e), c.psi(e)(x))) {
        r.add("axiom_i", s.edge_id(e) + " on " + x.cycles());
        break;
      }
  }
  for (auto [a, b] : s.composable_pairs()) {
    int ab = *s.compose(a, b);
    int la = m.over.edge(a), lb = m.over.edge(b);
    Perm lhs = m.apply(s.terminal(a), c.twist(a, b)) * m.edge[static_cast<std::size_t>(ab)];
    Perm rhs = m.edge[static_cast<std::size_t>(a)] * d.psi(la)(m.edge[static_cast<std::size_t>(b)]) * d.twist(la, lb);
    if (lhs != rhs) r.add("axiom_ii", "(" + s.edge_id(a) + "," + s.edge_id(b) + ")");
  }
  return r;
}

CogMorphism identity_morphism(const CogPtr& c) {
  CogMorphism m{c, c, ScwolMorphism::identity(c->base()), {}, {}};
  for (int v = 0; v < c->scwol().num_vertices(); ++v) m.local.push_back(GroupHom::identity(c->local(v)));
  for (int e = 0; e < c->scwol().num_edges(); ++e) m.edge.push_back(c->local(c->scwol().terminal(e)).identity());
  return m;
}

CogMorphism compose(const CogMorphism& first, const CogMorphism& second) {
  CogMorphism m{first.source, second.target, first.over.then(second.over), {}, {}};
  const Scwol& s = first.source->scwol();
  for (int v = 0; v < s.num_vertices(); ++v)
    m.local.push_back(first.local[static_cast<std::size_t>(v)].then(second.local[static_cast<std::size_t>(first.over.vertex(v))]));
  for (int e = 0; e < s.num_edges(); ++e)
    m.edge.push_back(second.apply(first.over.vertex(s.terminal(e)), first.edge[static_cast<std::size_t>(e)]) *
                     second.edge[static_cast<std::size_t>(first.over.edge(e))]);
  return m;
}

GroupMorphism compose(const CogMorphism& first, const GroupMorphism& second) {
  GroupMorphism m{first.source, second.group, {}, {}};
  const Scwol& s = first.source->scwol();
  for (int v = 0; v < s.num_vertices(); ++v)
    m.local.push_back(first.local[static_cast<std::size_t>(v)].then(second.local[static_cast<std::size_t>(first.over.vertex(v))]));
  for (int e = 0; e < s.num_edges(); ++e)
    m.edge.push_back(second.apply(first.over.vertex(s.terminal(e)), first.edge[static_cast<std::size_t>(e)]) *
                     second.edge[static_cast<std::size_t>(first.over.edge(e))]);
  return m;
}

bool is_isomorphism(const CogMorphism& m) {
  if (!m.over.is_isomorphism()) return false;
  for (const auto& h : m.local)
    if (!h.injective() || !h.surjective()) return false;
  return true;
}

CogMorphism inverse(const CogMorphism& m) {
  if (!is_isomorphism(m)) throw NotWellDefined("inverse of a morphism that is not an isomorphism");
  ScwolMorphism inv = m.over.inverse();
  const Scwol& t = m.target->scwol();
  CogMorphism r{m.target, m.source, inv, {}, {}};
  for (int v = 0; v < t.num_vertices(); ++v) r.local.push_back(m.local[static_cast<std::size_t>(inv.vertex(v))].inverse());
  for (int e = 0; e < t.num_edges(); ++e) {
    int a = inv.edge(e);
    int ta = m.source->scwol().terminal(a);
    r.edge.push_back(m.local[static_cast<std::size_t>(ta)].inverse()(m.edge[static_cast<std::size_t>(a)].inverse()));
  }
  return r;
}

CosetIndex::CosetIndex(const PermGroup& g, const PermGroup& h) : g_(g), cosets_(left_cosets(g, h)) {
  labels_ = coset_labels(g_, cosets_);
}

CoveringReport is_covering(const CogMorphism& m) {
  CoveringReport out;
  const ComplexOfGroups& c = *m.source;
  const ComplexOfGroups& d = *m.target;
  const Scwol& s = c.scwol();
  const Scwol& t = d.scwol();
  MorphismFlags f = check_morphism(m.over);
  if (!f.nondegenerate) {
    out.report.add("degenerate", "underlying scwol morphism is not nondegenerate");
    out.report.merge(f.report, "scwol_");
    return out;
  }
  for (int v = 0; v < s.num_vertices(); ++v)
    if (!m.local[static_cast<std::size_t>(v)].injective()) out.report.add("local_not_injective", s.vertex_id(v));
  for (int v = 0; v < s.num_vertices(); ++v) {
    int tv = m.over.vertex(v);
    out.vertex_clause[v] = true;
    for (int ta : t.in_edges(tv)) {
      PermGroup sub = d.psi(ta).image();
      CosetIndex target_cosets(d.local(tv), sub);
      std::vector<int> hits(target_cosets.count(), 0);
      for (int a : s.in_edges(v)) {
        if (m.over.edge(a) != ta) continue;
        CosetIndex source_cosets(c.local(v), c.psi(a).image());
        for (const auto& cs : source_cosets.cosets())
          ++hits[target_cosets.label(m.apply(v, cs.rep) * m.edge[static_cast<std::size_t>(a)])];
      }
      for (std::size_t k = 0; k < hits.size(); ++k)
        if (hits[k] != 1) {
          out.vertex_clause[v] = false;
          out.report.add("coset_clause", "at " + s.vertex_id(v) + " over " + t.edge_id(ta) + ": target coset " +
                                             std::to_string(k) + " hit " + std::to_string(hits[k]) + " times");
          break;
        }
    }
  }
  out.covering = out.report.ok() && is_connected(t);
  if (!is_connected(t)) out.report.add("target_disconnected", "");
  if (out.covering) {
    std::set<std::size_t> counts;
    for (int tv = 0; tv < t.num_vertices(); ++tv) {
      std::size_t n = 0;
      for (int v = 0; v < s.num_vertices(); ++v)
        if (m.over.vertex(v) == tv) n += d.local(tv).order() / c.local(v).order();
      counts.insert(n);
    }
    if (counts.size() == 1) out.sheets = *counts.begin();
    else out.report.add("sheet_count", "vertex sheet counts differ");
  }
  return out;
}

}  // namespace cog
