#include "cog/fixtures.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cog::fixtures {

namespace {

ScwolPtr share(Scwol s) { return std::make_shared<const Scwol>(std::move(s)); }

CellComplex simplex(int n, bool with_top) {
  CellComplex c;
  for (int mask = 1; mask < (1 << n); ++mask) {
    if (!with_top && mask == (1 << n) - 1) continue;
    std::string id;
    for (int k = 0; k < n; ++k)
      if (mask & (1 << k)) id += std::to_string(k + 1);
    c.cells.push_back(id);
    auto& fs = c.faces[id];
    for (int k = 0; k < n; ++k) {
      int sub = mask & ~(1 << k);
      if (!(mask & (1 << k)) || sub == 0) continue;
      std::string f;
      for (int j = 0; j < n; ++j)
        if (sub & (1 << j)) f += std::to_string(j + 1);
      fs.push_back(f);
    }
  }
  return c;
}

}  // namespace

ScwolPtr point() { return share(Scwol::build({{"*"}, {}, {}})); }

ScwolPtr segment() {
  return share(Scwol::build({{"v1", "v2", "e"}, {{"a1", "e", "v1"}, {"a2", "e", "v2"}}, {}}));
}

ScwolPtr path2() {
  CellComplex c;
  c.cells = {"p0", "p1", "p2", "e1", "e2"};
  c.faces["e1"] = {"p0", "p1"};
  c.faces["e2"] = {"p1", "p2"};
  return share(scwol_from_complex(c));
}

ScwolPtr triangle() { return share(scwol_from_complex(simplex(3, true))); }
ScwolPtr tetrahedron() { return share(scwol_from_complex(simplex(4, true))); }
ScwolPtr hexagon() { return share(scwol_from_complex(simplex(3, false))); }

CellComplex tripod_cells() {
  CellComplex c;
  c.cells = {"c", "l1", "l2", "l3", "s1", "s2", "s3"};
  for (int k = 1; k <= 3; ++k) c.faces["s" + std::to_string(k)] = {"c", "l" + std::to_string(k)};
  return c;
}

ScwolPtr tripod() { return share(scwol_from_complex(tripod_cells())); }

CellComplex octahedron_cells() {
  const std::vector<std::string> axis = {"x", "y", "z"};
  auto vert = [&](int a, int s) { return axis[static_cast<std::size_t>(a)] + (s > 0 ? "+" : "-"); };
  CellComplex c;
  for (int a = 0; a < 3; ++a)
    for (int s : {1, -1}) c.cells.push_back(vert(a, s));
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      for (int s : {1, -1})
        for (int t : {1, -1}) {
          std::string id = vert(a, s) + vert(b, t);
          c.cells.push_back(id);
          c.faces[id] = {vert(a, s), vert(b, t)};
        }
  for (int s : {1, -1})
    for (int t : {1, -1})
      for (int u : {1, -1}) {
        std::string id = vert(0, s) + vert(1, t) + vert(2, u);
        c.cells.push_back(id);
        c.faces[id] = {vert(0, s) + vert(1, t), vert(0, s) + vert(2, u), vert(1, t) + vert(2, u)};
      }
  return c;
}

ScwolPtr octahedron() { return share(scwol_from_complex(octahedron_cells())); }

ActionPtr automorphism_action(const ScwolPtr& s) {
  return std::make_shared<const ScwolAction>(ScwolAction::of_automorphisms(s, automorphism_group(*s)));
}

namespace {

PermGroup generated_by_vertex_rule(const ActionPtr& act, const std::function<std::string(const std::string&)>& rule) {
  const Scwol& x = act->scwol();
  const Perm* g = find_element(act->group(), [&](const Perm& p) {
    for (int v = 0; v < x.num_vertices(); ++v)
      if (x.vertex_id(act->vertex(p, v)) != rule(x.vertex_id(v))) return false;
    return true;
  });
  if (!g) throw InvalidInput("no automorphism follows the requested rule");
  return PermGroup(act->group().degree(), {*g});
}

}  // namespace

PermGroup antipodal_subgroup(const ActionPtr& octahedron_action) {
  return generated_by_vertex_rule(octahedron_action, [](std::string id) {
    for (auto& ch : id) ch = ch == '+' ? '-' : ch == '-' ? '+' : ch;
    return id;
  });
}

PermGroup tripod_rotation(const ActionPtr& tripod_action) {
  return generated_by_vertex_rule(tripod_action, [](std::string id) {
    if (id.size() == 2) id[1] = static_cast<char>('1' + (id[1] - '1' + 1) % 3);
    return id;
  });
}

ActionPtr tripod_s3() { return automorphism_action(tripod()); }
ActionPtr flip() { return automorphism_action(path2()); }

namespace {

PermGroup z2() { return PermGroup(2, {Perm({1, 0})}); }

}  // namespace

CogPtr d3seg() {
  ScwolPtr s = segment();
  // Vertex order: e, v1, v2; edge order: a1, a2.
  std::vector<PermGroup> g{PermGroup::trivial(2), z2(), z2()};
  std::vector<GroupHom> psi{GroupHom(g[0], g[1], {}), GroupHom(g[0], g[2], {})};
  return std::make_shared<const ComplexOfGroups>(s, g, psi);
}

GroupMorphism d3seg_into_s3(const CogPtr& c) {
  PermGroup s3 = PermGroup::symmetric(3);
  GroupMorphism m{c, s3, {}, {}};
  m.local.emplace_back(c->local(0), s3, std::vector<Perm>{});
  m.local.emplace_back(c->local(1), s3, std::vector<Perm>{Perm({1, 0, 2})});
  m.local.emplace_back(c->local(2), s3, std::vector<Perm>{Perm({0, 2, 1})});
  m.edge = {s3.identity(), s3.identity()};
  return m;
}

CogPtr z2_point() {
  return std::make_shared<const ComplexOfGroups>(point(), std::vector<PermGroup>{z2()}, std::vector<GroupHom>{});
}

CogPtr z2_segment() {
  ScwolPtr s = segment();
  std::vector<PermGroup> g(3, z2());
  std::vector<GroupHom> psi(2, GroupHom::identity(z2()));
  return std::make_shared<const ComplexOfGroups>(s, g, psi);
}

CogPtr trivial_complex(const ScwolPtr& s) {
  std::vector<PermGroup> g(static_cast<std::size_t>(s->num_vertices()), PermGroup::trivial(1));
  std::vector<GroupHom> psi(static_cast<std::size_t>(s->num_edges()), GroupHom::identity(PermGroup::trivial(1)));
  return std::make_shared<const ComplexOfGroups>(s, g, psi);
}

}  // namespace cog::fixtures
