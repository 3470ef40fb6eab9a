#include "cog/scwol.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "cog/presentation.hpp"

namespace cog {

Report validate_scwol(const ScwolData& d) {
  Report r;
  std::set<std::string> vs, es;
  for (const auto& v : d.vertices)
    if (!vs.insert(v).second) r.add("duplicate_vertex", v);
  std::map<std::string, const EdgeRecord*> edges;
  for (const auto& e : d.edges) {
    if (!es.insert(e.id).second) r.add("duplicate_edge", e.id);
    edges[e.id] = &e;
    if (!vs.count(e.i)) r.add("unknown_endpoint", e.id + " initial " + e.i);
    if (!vs.count(e.t)) r.add("unknown_endpoint", e.id + " terminal " + e.t);
    if (e.i == e.t) r.add("loop", e.id + " at " + e.i);
  }
  if (!r.ok()) return r;
  std::map<std::pair<std::string, std::string>, std::string> comp;
  for (const auto& c : d.compositions) {
    if (!edges.count(c.a) || !edges.count(c.b) || !edges.count(c.ab)) {
      r.add("unknown_edge", "(" + c.a + "," + c.b + ")=" + c.ab);
      continue;
    }
    const auto& a = *edges[c.a];
    const auto& b = *edges[c.b];
    const auto& ab = *edges[c.ab];
    if (a.i != b.t) {
      r.add("not_composable", "(" + c.a + "," + c.b + "): i(" + c.a + ")=" + a.i + " but t(" + c.b + ")=" + b.t);
      continue;
    }
    if (!comp.emplace(std::make_pair(c.a, c.b), c.ab).second)
      r.add("duplicate_composition", "(" + c.a + "," + c.b + ")");
    if (ab.i != b.i) r.add("endpoint_rule", "i(" + c.ab + ")=" + ab.i + " but i(" + c.b + ")=" + b.i);
    if (ab.t != a.t) r.add("endpoint_rule", "t(" + c.ab + ")=" + ab.t + " but t(" + c.a + ")=" + a.t);
  }
  for (const auto& a : d.edges)
    for (const auto& b : d.edges)
      if (a.i == b.t && !comp.count({a.id, b.id}))
        r.add("missing_composition", "(" + a.id + "," + b.id + ")");
  if (!r.ok()) return r;
  for (const auto& a : d.edges)
    for (const auto& b : d.edges) {
      if (a.i != b.t) continue;
      for (const auto& c : d.edges) {
        if (b.i != c.t) continue;
        const auto& ab = comp.at({a.id, b.id});
        const auto& bc = comp.at({b.id, c.id});
        const auto& l = comp.at({ab, c.id});
        const auto& rr = comp.at({a.id, bc});
        if (l != rr)
          r.add("associativity", "(" + a.id + "," + b.id + "," + c.id + "): " + l + " != " + rr);
      }
    }
  return r;
}

Scwol Scwol::build(const ScwolData& d) {
  Report r = validate_scwol(d);
  if (!r.ok()) throw InvalidInput("invalid scwol: " + r.summary());
  Scwol s;
  s.vid_ = d.vertices;
  std::sort(s.vid_.begin(), s.vid_.end());
  for (std::size_t i = 0; i < s.vid_.size(); ++i) s.vindex_[s.vid_[i]] = static_cast<int>(i);
  std::vector<EdgeRecord> es = d.edges;
  std::sort(es.begin(), es.end(), [](const EdgeRecord& a, const EdgeRecord& b) { return a.id < b.id; });
  s.out_.resize(s.vid_.size());
  s.in_.resize(s.vid_.size());
  for (std::size_t k = 0; k < es.size(); ++k) {
    s.eid_.push_back(es[k].id);
    s.eindex_[es[k].id] = static_cast<int>(k);
    s.ini_.push_back(s.vindex_.at(es[k].i));
    s.ter_.push_back(s.vindex_.at(es[k].t));
    s.out_[static_cast<std::size_t>(s.ini_.back())].push_back(static_cast<int>(k));
    s.in_[static_cast<std::size_t>(s.ter_.back())].push_back(static_cast<int>(k));
  }
  for (const auto& c : d.compositions)
    s.comp_[{s.eindex_.at(c.a), s.eindex_.at(c.b)}] = s.eindex_.at(c.ab);
  for (const auto& [k, v] : s.comp_) s.pairs_.push_back(k);
  return s;
}

int Scwol::vertex_index(const std::string& id) const {
  auto it = vindex_.find(id);
  if (it == vindex_.end()) throw InvalidInput("unknown vertex id " + id);
  return it->second;
}

int Scwol::edge_index(const std::string& id) const {
  auto it = eindex_.find(id);
  if (it == eindex_.end()) throw InvalidInput("unknown edge id " + id);
  return it->second;
}

std::optional<int> Scwol::find_vertex(const std::string& id) const {
  auto it = vindex_.find(id);
  if (it == vindex_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Scwol::find_edge(const std::string& id) const {
  auto it = eindex_.find(id);
  if (it == eindex_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Scwol::compose(int a, int b) const {
  auto it = comp_.find({a, b});
  if (it == comp_.end()) return std::nullopt;
  return it->second;
}

ScwolData Scwol::data() const {
  ScwolData d;
  d.vertices = vid_;
  for (int e = 0; e < num_edges(); ++e)
    d.edges.push_back({edge_id(e), vertex_id(initial(e)), vertex_id(terminal(e))});
  for (const auto& [k, v] : comp_) d.compositions.push_back({edge_id(k.first), edge_id(k.second), edge_id(v)});
  return d;
}

std::vector<std::vector<int>> chains(const Scwol& s, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0) return out;
  if (k == 0) {
    for (int v = 0; v < s.num_vertices(); ++v) out.push_back({v});
    return out;
  }
  std::vector<int> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    if (cur.empty()) {
      for (int e = 0; e < s.num_edges(); ++e) {
        cur.push_back(e);
        rec();
        cur.pop_back();
      }
      return;
    }
    for (int e : s.in_edges(s.initial(cur.back()))) {
      cur.push_back(e);
      rec();
      cur.pop_back();
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

Scwol scwol_from_complex(const CellComplex& c) {
  std::set<std::string> cells(c.cells.begin(), c.cells.end());
  if (cells.size() != c.cells.size()) throw InvalidInput("duplicate cell id");
  std::map<std::string, std::set<std::string>> below;
  std::function<const std::set<std::string>&(const std::string&, std::set<std::string>&)> closure =
      [&](const std::string& x, std::set<std::string>& stack) -> const std::set<std::string>& {
    auto it = below.find(x);
    if (it != below.end()) return it->second;
    if (!stack.insert(x).second) throw InvalidInput("face relation has a cycle through " + x);
    std::set<std::string> acc;
    auto f = c.faces.find(x);
    if (f != c.faces.end())
      for (const auto& y : f->second) {
        if (!cells.count(y)) throw InvalidInput("unknown face " + y + " of " + x);
        if (y == x) throw InvalidInput("cell " + x + " is its own face");
        acc.insert(y);
        const auto& sub = closure(y, stack);
        acc.insert(sub.begin(), sub.end());
      }
    stack.erase(x);
    if (acc.count(x)) throw InvalidInput("face relation has a cycle through " + x);
    return below[x] = std::move(acc);
  };
  ScwolData d;
  d.vertices = c.cells;
  for (const auto& x : c.cells) {
    std::set<std::string> stack;
    closure(x, stack);
  }
  auto name = [](const std::string& s, const std::string& t) { return s + ">" + t; };
  for (const auto& [s, lows] : below)
    for (const auto& t : lows) d.edges.push_back({name(s, t), s, t});
  // (T<S) composed with (S<U) is (T<U).
  for (const auto& [u, lu] : below)
    for (const auto& s : lu)
      for (const auto& t : below[s]) d.compositions.push_back({name(s, t), name(u, s), name(u, t)});
  return Scwol::build(d);
}

namespace {

std::string chain_id(const Scwol& s, const std::vector<int>& ch, bool vertex) {
  if (vertex) return "v:" + s.vertex_id(ch[0]);
  std::string id = "c:";
  for (std::size_t j = 0; j < ch.size(); ++j) id += (j ? "," : "") + s.edge_id(ch[j]);
  return id;
}

}  // namespace

Scwol barycentric_subdivision(const Scwol& s) {
  CellComplex c;
  for (int k = 0;; ++k) {
    auto ch = chains(s, k);
    if (ch.empty()) break;
    for (const auto& x : ch) {
      std::string id = chain_id(s, x, k == 0);
      c.cells.push_back(id);
      std::vector<std::string>& fs = c.faces[id];
      if (k == 0) continue;
      if (k == 1) {
        fs.push_back("v:" + s.vertex_id(s.terminal(x[0])));
        fs.push_back("v:" + s.vertex_id(s.initial(x[0])));
        continue;
      }
      fs.push_back(chain_id(s, std::vector<int>(x.begin() + 1, x.end()), false));
      fs.push_back(chain_id(s, std::vector<int>(x.begin(), x.end() - 1), false));
      for (int j = 0; j + 1 < k; ++j) {
        std::vector<int> y(x.begin(), x.begin() + j);
        y.push_back(*s.compose(x[static_cast<std::size_t>(j)], x[static_cast<std::size_t>(j + 1)]));
        y.insert(y.end(), x.begin() + j + 2, x.end());
        fs.push_back(chain_id(s, y, false));
      }
    }
  }
  return scwol_from_complex(c);
}

ScwolMorphism::ScwolMorphism(ScwolPtr source, ScwolPtr target, std::vector<int> vertex_map,
                             std::vector<int> edge_map)
    : src_(std::move(source)), tgt_(std::move(target)), vmap_(std::move(vertex_map)), emap_(std::move(edge_map)) {
  if (static_cast<int>(vmap_.size()) != src_->num_vertices() || static_cast<int>(emap_.size()) != src_->num_edges())
    throw InvalidInput("morphism maps have the wrong size");
  for (int v : vmap_)
    if (v < 0 || v >= tgt_->num_vertices()) throw InvalidInput("vertex image out of range");
  for (int e : emap_)
    if (e < 0 || e >= tgt_->num_edges()) throw InvalidInput("edge image out of range");
}

ScwolMorphism ScwolMorphism::identity(ScwolPtr s) {
  std::vector<int> v(static_cast<std::size_t>(s->num_vertices())), e(static_cast<std::size_t>(s->num_edges()));
  std::iota(v.begin(), v.end(), 0);
  std::iota(e.begin(), e.end(), 0);
  return ScwolMorphism(s, s, v, e);
}

ScwolMorphism ScwolMorphism::then(const ScwolMorphism& next) const {
  std::vector<int> v, e;
  for (int x : vmap_) v.push_back(next.vertex(x));
  for (int x : emap_) e.push_back(next.edge(x));
  return ScwolMorphism(src_, next.tgt_, v, e);
}

bool ScwolMorphism::is_isomorphism() const {
  if (src_->num_vertices() != tgt_->num_vertices() || src_->num_edges() != tgt_->num_edges()) return false;
  if (std::set<int>(vmap_.begin(), vmap_.end()).size() != vmap_.size()) return false;
  if (std::set<int>(emap_.begin(), emap_.end()).size() != emap_.size()) return false;
  if (!check_morphism(*this).valid) return false;
  // Compositions must pull back as well.
  return src_->composable_pairs().size() == tgt_->composable_pairs().size();
}

ScwolMorphism ScwolMorphism::inverse() const {
  if (!is_isomorphism()) throw NotWellDefined("inverse of a non-isomorphism");
  std::vector<int> v(vmap_.size()), e(emap_.size());
  for (std::size_t x = 0; x < vmap_.size(); ++x) v[static_cast<std::size_t>(vmap_[x])] = static_cast<int>(x);
  for (std::size_t x = 0; x < emap_.size(); ++x) e[static_cast<std::size_t>(emap_[x])] = static_cast<int>(x);
  return ScwolMorphism(tgt_, src_, v, e);
}

MorphismFlags check_morphism(const ScwolMorphism& m) {
  MorphismFlags f;
  const Scwol& x = *m.source();
  const Scwol& y = *m.target();
  for (int e = 0; e < x.num_edges(); ++e) {
    int le = m.edge(e);
    if (y.initial(le) != m.vertex(x.initial(e)))
      f.report.add("initial", x.edge_id(e) + " -> " + y.edge_id(le));
    if (y.terminal(le) != m.vertex(x.terminal(e)))
      f.report.add("terminal", x.edge_id(e) + " -> " + y.edge_id(le));
  }
  if (f.report.ok())
    for (auto [a, b] : x.composable_pairs()) {
      auto lab = y.compose(m.edge(a), m.edge(b));
      if (!lab || *lab != m.edge(*x.compose(a, b)))
        f.report.add("composition", "(" + x.edge_id(a) + "," + x.edge_id(b) + ")");
    }
  f.valid = f.report.ok();
  if (!f.valid) return f;
  auto bijects = [&](const std::vector<int>& from, const std::vector<int>& to) {
    std::set<int> imgs;
    for (int e : from) imgs.insert(m.edge(e));
    return imgs.size() == from.size() && from.size() == to.size();
  };
  f.nondegenerate = true;
  bool in_ok = true;
  for (int v = 0; v < x.num_vertices(); ++v) {
    if (!bijects(x.out_edges(v), y.out_edges(m.vertex(v)))) {
      f.nondegenerate = false;
      f.report.add("degenerate_at", x.vertex_id(v));
    }
    if (!bijects(x.in_edges(v), y.in_edges(m.vertex(v)))) in_ok = false;
  }
  f.covering = f.nondegenerate && in_ok && is_connected(y);
  return f;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

}  // namespace

std::vector<std::vector<std::string>> connected_components(const Scwol& s) {
  UnionFind uf(s.num_vertices());
  for (int e = 0; e < s.num_edges(); ++e) uf.unite(s.initial(e), s.terminal(e));
  std::map<int, std::vector<std::string>> comps;
  for (int v = 0; v < s.num_vertices(); ++v) comps[uf.find(v)].push_back(s.vertex_id(v));
  std::vector<std::vector<std::string>> out;
  for (auto& [k, c] : comps) out.push_back(std::move(c));
  return out;
}

bool is_connected(const Scwol& s) { return connected_components(s).size() <= 1; }

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::Yes: return "Yes";
    case Certificate::No: return "No";
    default: return "Unknown";
  }
}

std::vector<int> canonical_spanning_tree(const Scwol& s) {
  std::vector<int> tree;
  if (s.num_vertices() == 0) return tree;
  std::vector<char> seen(static_cast<std::size_t>(s.num_vertices()), 0);
  std::deque<int> q{0};
  seen[0] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    std::vector<int> inc = s.out_edges(v);
    inc.insert(inc.end(), s.in_edges(v).begin(), s.in_edges(v).end());
    std::sort(inc.begin(), inc.end());
    for (int e : inc) {
      int w = s.initial(e) == v ? s.terminal(e) : s.initial(e);
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      tree.push_back(e);
      q.push_back(w);
    }
  }
  if (static_cast<int>(tree.size()) + 1 != s.num_vertices()) throw PreconditionFailed("scwol is not connected");
  std::sort(tree.begin(), tree.end());
  return tree;
}

bool is_spanning_tree(const Scwol& s, const std::vector<int>& edges) {
  if (static_cast<int>(edges.size()) + 1 != s.num_vertices()) return false;
  UnionFind uf(s.num_vertices());
  for (int e : edges) {
    if (e < 0 || e >= s.num_edges()) return false;
    if (!uf.unite(s.initial(e), s.terminal(e))) return false;
  }
  return true;
}

std::vector<std::vector<int>> all_spanning_trees(const Scwol& s, std::size_t cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  int need = s.num_vertices() - 1;
  std::function<void(int, UnionFind)> rec = [&](int next, UnionFind uf) {
    if (static_cast<int>(cur.size()) == need) {
      if (out.size() >= cap) throw CapExceeded("too many spanning trees");
      out.push_back(cur);
      return;
    }
    if (s.num_edges() - next < need - static_cast<int>(cur.size())) return;
    for (int e = next; e < s.num_edges(); ++e) {
      UnionFind u2 = uf;
      if (!u2.unite(s.initial(e), s.terminal(e))) continue;
      cur.push_back(e);
      rec(e + 1, u2);
      cur.pop_back();
    }
  };
  if (need >= 0) rec(0, UnionFind(s.num_vertices()));
  return out;
}

Certificate simple_connectivity(const Scwol& s, std::size_t budget) {
  if (budget == 0) throw PreconditionFailed("budget must be positive");
  if (!is_connected(s)) throw PreconditionFailed("scwol is not connected");
  // Edge-path group of the 2-skeleton: non-tree edges modulo triangles.
  std::vector<int> tree = canonical_spanning_tree(s);
  std::vector<int> gen(static_cast<std::size_t>(s.num_edges()), -1);
  std::set<int> in_tree(tree.begin(), tree.end());
  Presentation p;
  for (int e = 0; e < s.num_edges(); ++e)
    if (!in_tree.count(e)) {
      gen[static_cast<std::size_t>(e)] = p.num_generators();
      p.generators.push_back(s.edge_id(e));
    }
  auto push = [&](Word& w, int e, int sign) {
    if (gen[static_cast<std::size_t>(e)] >= 0) w.push_back(letter(gen[static_cast<std::size_t>(e)], sign));
  };
  for (auto [a, b] : s.composable_pairs()) {
    Word w;
    push(w, b, 1);
    push(w, a, 1);
    push(w, *s.compose(a, b), -1);
    w = free_reduce(w);
    if (!w.empty()) p.relators.push_back(w);
  }
  Simplified simp = simplify(p);
  if (simp.presentation.num_generators() == 0) return Certificate::Yes;
  if (!abelianization(simp.presentation).trivial()) return Certificate::No;
  CosetEnumeration t = todd_coxeter(simp.presentation, {}, budget);
  if (!t.complete) return Certificate::Unknown;
  return t.index() == 1 ? Certificate::Yes : Certificate::No;
}

bool is_automorphism(const Scwol& s, const Perm& p) {
  int nv = s.num_vertices();
  if (p.degree() != s.num_cells()) return false;
  for (int v = 0; v < nv; ++v)
    if (p[v] >= nv) return false;
  std::vector<int> vm, em;
  for (int v = 0; v < nv; ++v) vm.push_back(p[v]);
  for (int e = 0; e < s.num_edges(); ++e) em.push_back(p[nv + e] - nv);
  auto sp = std::make_shared<Scwol>(s);
  return ScwolMorphism(sp, sp, vm, em).is_isomorphism();
}

PermGroup automorphism_group(const Scwol& s) {
  int nv = s.num_vertices(), ne = s.num_edges();
  std::map<std::pair<int, int>, std::vector<int>> between;
  for (int e = 0; e < ne; ++e) between[{s.initial(e), s.terminal(e)}].push_back(e);
  auto count = [&](int u, int v) {
    auto it = between.find({u, v});
    return it == between.end() ? 0 : static_cast<int>(it->second.size());
  };
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(nv));
  for (int e = 0; e < ne; ++e) {
    nbr[static_cast<std::size_t>(s.initial(e))].push_back(s.terminal(e));
    nbr[static_cast<std::size_t>(s.terminal(e))].push_back(s.initial(e));
  }
  // Invariant: degrees plus the chain counts starting and ending at the vertex.
  std::vector<std::vector<long long>> inv(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    inv[static_cast<std::size_t>(v)] = {static_cast<long long>(s.out_edges(v).size()),
                                        static_cast<long long>(s.in_edges(v).size())};
    std::vector<long long> od, id;
    for (int e : s.out_edges(v)) od.push_back(static_cast<long long>(s.out_edges(s.terminal(e)).size()));
    for (int e : s.in_edges(v)) id.push_back(static_cast<long long>(s.in_edges(s.initial(e)).size()));
    std::sort(od.begin(), od.end());
    std::sort(id.begin(), id.end());
    inv[static_cast<std::size_t>(v)].insert(inv[static_cast<std::size_t>(v)].end(), od.begin(), od.end());
    inv[static_cast<std::size_t>(v)].push_back(-1);
    inv[static_cast<std::size_t>(v)].insert(inv[static_cast<std::size_t>(v)].end(), id.begin(), id.end());
  }
  std::vector<int> order;
  {
    std::vector<char> seen(static_cast<std::size_t>(nv), 0);
    for (int r = 0; r < nv; ++r) {
      if (seen[static_cast<std::size_t>(r)]) continue;
      std::deque<int> q{r};
      seen[static_cast<std::size_t>(r)] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        order.push_back(v);
        for (int w : nbr[static_cast<std::size_t>(v)])
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            q.push_back(w);
          }
      }
    }
  }
  std::vector<int> pos(static_cast<std::size_t>(nv));
  for (int k = 0; k < nv; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  std::vector<int> anchor(static_cast<std::size_t>(nv), -1);
  for (int k = 0; k < nv; ++k) {
    int v = order[static_cast<std::size_t>(k)];
    for (int w : nbr[static_cast<std::size_t>(v)])
      if (pos[static_cast<std::size_t>(w)] < k) { anchor[static_cast<std::size_t>(v)] = w; break; }
  }

  std::vector<std::vector<std::pair<int, int>>> touching(static_cast<std::size_t>(ne));
  for (auto [a, b] : s.composable_pairs()) {
    std::set<int> involved{a, b, *s.compose(a, b)};
    for (int e : involved) touching[static_cast<std::size_t>(e)].push_back({a, b});
  }

  std::vector<Perm> autos;
  std::vector<int> vm(static_cast<std::size_t>(nv), -1);
  std::vector<char> used(static_cast<std::size_t>(nv), 0);

  auto finish_edges = [&]() {
    std::vector<int> em(static_cast<std::size_t>(ne), -1);
    std::vector<char> eused(static_cast<std::size_t>(ne), 0);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
    for (const auto& [k, es] : between)
      groups.push_back({es, between.at({vm[static_cast<std::size_t>(k.first)], vm[static_cast<std::size_t>(k.second)]})});
    std::vector<int> flat;
    for (const auto& g : groups) flat.insert(flat.end(), g.first.begin(), g.first.end());
    std::map<int, const std::vector<int>*> cand;
    for (const auto& g : groups)
      for (int e : g.first) cand[e] = &g.second;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == flat.size()) {
        std::vector<int> img(static_cast<std::size_t>(nv + ne));
        for (int v = 0; v < nv; ++v) img[static_cast<std::size_t>(v)] = vm[static_cast<std::size_t>(v)];
        for (int e = 0; e < ne; ++e) img[static_cast<std::size_t>(nv + e)] = nv + em[static_cast<std::size_t>(e)];
        autos.emplace_back(img);
        return;
      }
      int e = flat[k];
      for (int f : *cand[e]) {
        if (eused[static_cast<std::size_t>(f)]) continue;
        em[static_cast<std::size_t>(e)] = f;
        bool ok = true;
        for (auto [a, b] : touching[static_cast<std::size_t>(e)]) {
          int ab = *s.compose(a, b);
          int ia = em[static_cast<std::size_t>(a)], ib = em[static_cast<std::size_t>(b)], iab = em[static_cast<std::size_t>(ab)];
          if (ia < 0 || ib < 0 || iab < 0) continue;
          auto c = s.compose(ia, ib);
          if (!c || *c != iab) { ok = false; break; }
        }
        if (ok) {
          eused[static_cast<std::size_t>(f)] = 1;
          rec(k + 1);
          eused[static_cast<std::size_t>(f)] = 0;
        }
        em[static_cast<std::size_t>(e)] = -1;
      }
    };
    rec(0);
  };

  std::function<void(int)> rec = [&](int k) {
    if (k == nv) {
      finish_edges();
      if (autos.size() > PermGroup::kDefaultCap) throw CapExceeded("automorphism group exceeds cap");
      return;
    }
    int v = order[static_cast<std::size_t>(k)];
    std::vector<int> cands;
    int a = anchor[static_cast<std::size_t>(v)];
    if (a >= 0) {
      for (int w : nbr[static_cast<std::size_t>(vm[static_cast<std::size_t>(a)])]) cands.push_back(w);
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    } else {
      cands.resize(static_cast<std::size_t>(nv));
      std::iota(cands.begin(), cands.end(), 0);
    }
    for (int w : cands) {
      if (used[static_cast<std::size_t>(w)] || inv[static_cast<std::size_t>(w)] != inv[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int u = order[static_cast<std::size_t>(j)];
        int fu = vm[static_cast<std::size_t>(u)];
        if (count(v, u) != count(w, fu) || count(u, v) != count(fu, w)) ok = false;
      }
      if (!ok) continue;
      vm[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      rec(k + 1);
      used[static_cast<std::size_t>(w)] = 0;
      vm[static_cast<std::size_t>(v)] = -1;
    }
  };
  rec(0);
  return PermGroup(nv + ne, autos);
}

}  // namespace cog
