#include "cog/fundamental_group.hpp"

#include <algorithm>
#include <deque>

namespace cog {

FgWord inverse(const FgWord& w) {
  FgWord r(w.rbegin(), w.rend());
  for (auto& l : r) l.sign = -l.sign;
  return r;
}

FgWord concat(const FgWord& a, const FgWord& b) {
  FgWord r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

TreeData make_tree(const Scwol& s, std::vector<int> edges, int basepoint) {
  if (!is_spanning_tree(s, edges)) throw InvalidInput("edge set is not a spanning tree");
  if (basepoint < 0 || basepoint >= s.num_vertices()) throw InvalidInput("basepoint out of range");
  TreeData t;
  std::sort(edges.begin(), edges.end());
  t.edges = edges;
  t.in_tree.assign(static_cast<std::size_t>(s.num_edges()), 0);
  for (int e : edges) t.in_tree[static_cast<std::size_t>(e)] = 1;
  t.basepoint = basepoint;
  t.path.assign(static_cast<std::size_t>(s.num_vertices()), {});
  std::vector<char> seen(static_cast<std::size_t>(s.num_vertices()), 0);
  seen[static_cast<std::size_t>(basepoint)] = 1;
  std::deque<int> q{basepoint};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    auto visit = [&](int e, int w, int sign) {
      if (!t.in_tree[static_cast<std::size_t>(e)] || seen[static_cast<std::size_t>(w)]) return;
      seen[static_cast<std::size_t>(w)] = 1;
      t.path[static_cast<std::size_t>(w)] = t.path[static_cast<std::size_t>(v)];
      t.path[static_cast<std::size_t>(w)].push_back({true, e, 0, sign});
      q.push_back(w);
    };
    // From t(a) to i(a) is a^+, from i(a) to t(a) is a^-.
    for (int e : s.in_edges(v)) visit(e, s.initial(e), 1);
    for (int e : s.out_edges(v)) visit(e, s.terminal(e), -1);
  }
  return t;
}

TreeData canonical_tree(const Scwol& s, int basepoint) { return make_tree(s, canonical_spanning_tree(s), basepoint); }

int Pi1Presentation::generator_of(int vertex, std::size_t element) const {
  auto it = element_generator.find({vertex, element});
  return it == element_generator.end() ? -1 : it->second;
}

Word Pi1Presentation::raw_word(const FgWord& w) const {
  Word out;
  for (const auto& l : w) {
    int g = l.is_edge ? edge_generator[static_cast<std::size_t>(l.index)] : generator_of(l.index, l.element);
    if (g >= 0) out.push_back(letter(g, l.sign));
  }
  return free_reduce(out);
}

Pi1Presentation universal_group_presentation(const ComplexOfGroups& c) {
  const Scwol& s = c.scwol();
  Pi1Presentation p;
  for (int v = 0; v < s.num_vertices(); ++v)
    for (std::size_t k = 1; k < c.local(v).order(); ++k) {
      p.element_generator[{v, k}] = p.raw.num_generators();
      p.raw.generators.push_back(s.vertex_id(v) + "#" + std::to_string(k));
      p.label.push_back({false, v, k, 1});
    }
  for (int e = 0; e < s.num_edges(); ++e) {
    p.edge_generator.push_back(p.raw.num_generators());
    p.raw.generators.push_back(s.edge_id(e));
    p.label.push_back({true, e, 0, 1});
  }
  auto el = [&](int v, const Perm& g) { return FgLetter{false, v, c.local(v).index_of(g), 1}; };
  auto ed = [&](int e, int sign) { return FgLetter{true, e, 0, sign}; };
  auto push = [&](const FgWord& w) {
    Word r = p.raw_word(w);
    if (!r.empty()) p.raw.relators.push_back(r);
  };
  // Multiplication tables of the local groups.
  for (int v = 0; v < s.num_vertices(); ++v) {
    const PermGroup& g = c.local(v);
    for (std::size_t x = 1; x < g.order(); ++x)
      for (std::size_t y = 1; y < g.order(); ++y) {
        FgLetter z = el(v, g.element(x) * g.element(y));
        z.sign = -1;
        push({el(v, g.element(x)), el(v, g.element(y)), z});
      }
  }
  // a^+ b^+ = g_{a,b} (ab)^+
  for (auto [a, b] : s.composable_pairs()) {
    FgLetter g = el(s.terminal(a), c.twist(a, b));
    g.sign = -1;
    push({ed(a, 1), ed(b, 1), ed(*s.compose(a, b), -1), g});
  }
  // psi_a(g) = a^+ g a^-
  for (int e = 0; e < s.num_edges(); ++e)
    for (const auto& g : c.local(s.initial(e)).elements()) {
      if (g.is_identity()) continue;
      FgLetter img = el(s.terminal(e), c.psi(e)(g));
      img.sign = -1;
      push({ed(e, 1), el(s.initial(e), g), ed(e, -1), img});
    }
  p.simplified = simplify(p.raw);
  return p;
}

Pi1Presentation pi1_presentation(const ComplexOfGroups& c, const TreeData& t) {
  Pi1Presentation p = universal_group_presentation(c);
  for (int e : t.edges) p.raw.relators.push_back({letter(p.edge_generator[static_cast<std::size_t>(e)], 1)});
  p.simplified = simplify(p.raw);
  return p;
}

Perm evaluate(const FgWord& w, const GroupMorphism& phi) {
  Perm r = phi.group.identity();
  for (const auto& l : w) {
    Perm x = l.is_edge ? phi.edge[static_cast<std::size_t>(l.index)]
                       : phi.apply(l.index, phi.source->local(l.index).element(l.element));
    r = r * (l.sign > 0 ? x : x.inverse());
  }
  return r;
}

std::optional<FundamentalGroup> FundamentalGroup::realize(CogPtr c, TreeData t, std::size_t budget) {
  FundamentalGroup f;
  f.cog_ = std::move(c);
  f.tree_ = std::move(t);
  f.pres_ = pi1_presentation(*f.cog_, f.tree_);
  const Presentation& sp = f.pres_.simplified.presentation;
  CosetEnumeration table = todd_coxeter(sp, {}, budget);
  if (!table.complete) return std::nullopt;
  int degree = static_cast<int>(table.index());
  std::vector<Perm> gens = coset_action(table);
  f.group_ = PermGroup(degree, gens);
  for (const auto& w : f.pres_.simplified.substitution) f.image_.push_back(cog::evaluate(w, gens, degree));
  const Scwol& s = f.cog_->scwol();
  f.iota_ = GroupMorphism{f.cog_, f.group_, {}, {}};
  for (int v = 0; v < s.num_vertices(); ++v) {
    std::vector<Perm> imgs;
    for (const auto& g : f.cog_->local(v).generators()) imgs.push_back(f.local(v, g));
    f.iota_.local.emplace_back(f.cog_->local(v), f.group_, imgs);
  }
  for (int e = 0; e < s.num_edges(); ++e) f.iota_.edge.push_back(f.edge(e));
  Report r = validate_group_morphism(f.iota_);
  if (!r.ok()) throw NotWellDefined("canonical morphism into the fundamental group failed: " + r.summary());
  return f;
}

Perm FundamentalGroup::local(int v, const Perm& g) const {
  int gen = pres_.generator_of(v, cog_->local(v).index_of(g));
  return gen < 0 ? group_.identity() : image_[static_cast<std::size_t>(gen)];
}

Perm FundamentalGroup::edge(int a) const { return image_[static_cast<std::size_t>(pres_.edge_generator[static_cast<std::size_t>(a)])]; }

Perm FundamentalGroup::evaluate(const FgWord& w) const { return cog::evaluate(w, iota_); }

std::vector<std::size_t> FundamentalGroup::vertex_indices() const {
  std::vector<std::size_t> out;
  for (const auto& h : iota_.local) out.push_back(group_.order() / h.image().order());
  return out;
}

}  // namespace cog
