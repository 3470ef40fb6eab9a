#include "cog/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cog/fixtures.hpp"

namespace cog::io {

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

Json Loader::resolve(const Json& v) const {
  if (v.is_string()) return load_json(dir_ / v.get<std::string>());
  return v;
}

Loader Loader::nested(const Json& v) const {
  if (v.is_string()) return Loader((dir_ / v.get<std::string>()).parent_path());
  return *this;
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int vertex_named(const Scwol& s, const std::string& id) {
  auto v = s.find_vertex(id);
  if (!v) throw InvalidInput("unknown vertex " + id);
  return *v;
}

int edge_named(const Scwol& s, const std::string& id) {
  auto e = s.find_edge(id);
  if (!e) throw InvalidInput("unknown edge " + id);
  return *e;
}

std::vector<Perm> perms_from_json(const Json& j, std::size_t degree) {
  std::vector<Perm> out;
  for (const auto& p : j) out.push_back(perm_from_json(p, degree));
  return out;
}

Json images_json(const GroupHom& h) {
  Json arr = Json::array();
  for (const auto& g : h.source().generators()) arr.push_back(perm_json(h(g)));
  return arr;
}

GroupHom hom_from_images(const PermGroup& src, const PermGroup& tgt, const Json& images) {
  std::vector<Perm> imgs = perms_from_json(images, tgt.degree());
  if (imgs.size() != src.generators().size()) throw InvalidInput("wrong number of generator images");
  return GroupHom(src, tgt, imgs);
}

}  // namespace

Json perm_json(const Perm& p) { return Json(p.images()); }

Perm perm_from_json(const Json& j, std::size_t degree) {
  if (!j.is_array()) throw InvalidInput("permutation must be an array of images");
  std::vector<int> img = j.get<std::vector<int>>();
  if (img.size() != degree) throw InvalidInput("permutation has degree " + std::to_string(img.size()) + ", expected " + std::to_string(degree));
  std::vector<char> seen(degree, 0);
  for (int x : img) {
    if (x < 0 || static_cast<std::size_t>(x) >= degree || seen[static_cast<std::size_t>(x)]) throw InvalidInput("not a permutation");
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return Perm(img);
}

Json to_json(const Scwol& s) {
  const ScwolData& d = s.data();
  std::vector<std::string> vertices = d.vertices;
  std::sort(vertices.begin(), vertices.end());
  std::vector<EdgeRecord> edges = d.edges;
  std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  std::vector<CompositionRecord> comps = d.compositions;
  std::sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  Json j;
  j["vertices"] = vertices;
  j["edges"] = Json::array();
  for (const auto& e : edges) j["edges"].push_back({{"id", e.id}, {"i", e.i}, {"t", e.t}});
  j["compositions"] = Json::array();
  for (const auto& c : comps) j["compositions"].push_back({{"a", c.a}, {"b", c.b}, {"ab", c.ab}});
  return j;
}

ScwolData scwol_data_from_json(const Json& j) {
  try {
    if (j.contains("cells")) {
      CellComplex c;
      c.cells = j.at("cells").get<std::vector<std::string>>();
      if (j.contains("faces")) c.faces = j.at("faces").get<std::map<std::string, std::vector<std::string>>>();
      return scwol_from_complex(c).data();
    }
    ScwolData d;
    d.vertices = field(j, "vertices").get<std::vector<std::string>>();
    for (const auto& e : field(j, "edges"))
      d.edges.push_back({field(e, "id").get<std::string>(), field(e, "i").get<std::string>(), field(e, "t").get<std::string>()});
    if (j.contains("compositions"))
      for (const auto& c : j.at("compositions"))
        d.compositions.push_back({field(c, "a").get<std::string>(), field(c, "b").get<std::string>(), field(c, "ab").get<std::string>()});
    return d;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed scwol: ") + e.what());
  }
}

ScwolPtr scwol_from_json(const Json& j) { return std::make_shared<const Scwol>(Scwol::build(scwol_data_from_json(j))); }

Json to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& x : g.generators()) gens.push_back(perm_json(x));
  return {{"degree", g.degree()}, {"generators", gens}};
}

PermGroup group_from_json(const Json& j) {
  try {
    std::size_t degree = field(j, "degree").get<std::size_t>();
    return PermGroup(degree, perms_from_json(field(j, "generators"), degree));
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed group: ") + e.what());
  }
}

Json to_json(const ComplexOfGroups& c) {
  const Scwol& s = c.scwol();
  Json j;
  j["scwol"] = to_json(s);
  j["groups"] = Json::object();
  for (int v = 0; v < s.num_vertices(); ++v) j["groups"][s.vertex_id(v)] = to_json(c.local(v));
  j["psi"] = Json::object();
  for (int e = 0; e < s.num_edges(); ++e) j["psi"][s.edge_id(e)] = images_json(c.psi(e));
  std::vector<std::pair<std::pair<std::string, std::string>, Perm>> tw;
  for (const auto& [ab, g] : c.twists()) tw.push_back({{s.edge_id(ab.first), s.edge_id(ab.second)}, g});
  std::sort(tw.begin(), tw.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  j["twists"] = Json::array();
  for (const auto& [ab, g] : tw) j["twists"].push_back({{"a", ab.first}, {"b", ab.second}, {"element", perm_json(g)}});
  return j;
}

CogPtr complex_from_json(const Json& j, const Loader& l) {
  try {
    ScwolPtr s = scwol_from_json(l.resolve(field(j, "scwol")));
    std::vector<PermGroup> groups;
    const Json& gj = field(j, "groups");
    for (int v = 0; v < s->num_vertices(); ++v) {
      if (!gj.contains(s->vertex_id(v))) throw InvalidInput("no group for vertex " + s->vertex_id(v));
      groups.push_back(group_from_json(l.resolve(gj.at(s->vertex_id(v)))));
    }
    std::vector<GroupHom> psi;
    const Json& pj = field(j, "psi");
    for (int e = 0; e < s->num_edges(); ++e) {
      const auto& src = groups[static_cast<std::size_t>(s->initial(e))];
      const auto& tgt = groups[static_cast<std::size_t>(s->terminal(e))];
      if (!pj.contains(s->edge_id(e))) throw InvalidInput("no monomorphism for edge " + s->edge_id(e));
      psi.push_back(hom_from_images(src, tgt, pj.at(s->edge_id(e))));
    }
    std::map<std::pair<int, int>, Perm> twists;
    if (j.contains("twists"))
      for (const auto& t : j.at("twists")) {
        int a = edge_named(*s, field(t, "a").get<std::string>());
        int b = edge_named(*s, field(t, "b").get<std::string>());
        twists[{a, b}] = perm_from_json(field(t, "element"), groups[static_cast<std::size_t>(s->terminal(a))].degree());
      }
    return std::make_shared<const ComplexOfGroups>(s, groups, psi, twists);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed complex of groups: ") + e.what());
  }
}

Json to_json(const ScwolAction& a) {
  const Scwol& s = a.scwol();
  int nv = s.num_vertices();
  Json j;
  j["scwol"] = to_json(s);
  j["group"] = to_json(a.group());
  j["vertex_action"] = Json::object();
  j["edge_action"] = Json::object();
  const auto& gens = a.group().generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    Perm c = a.cells(gens[k]);
    std::vector<int> vp, ep;
    for (int v = 0; v < nv; ++v) vp.push_back(c[static_cast<std::size_t>(v)]);
    for (int e = 0; e < s.num_edges(); ++e) ep.push_back(c[static_cast<std::size_t>(nv + e)] - nv);
    j["vertex_action"][std::to_string(k)] = vp;
    j["edge_action"][std::to_string(k)] = ep;
  }
  return j;
}

namespace {

Perm cells_from_vertex_perm(const Scwol& s, const std::vector<int>& vp) {
  int nv = s.num_vertices();
  std::vector<int> img(vp.begin(), vp.end());
  for (int e = 0; e < s.num_edges(); ++e) {
    int found = -1, count = 0;
    for (int f : s.out_edges(vp[static_cast<std::size_t>(s.initial(e))]))
      if (s.terminal(f) == vp[static_cast<std::size_t>(s.terminal(e))]) found = f, ++count;
    if (count != 1) throw InvalidInput("edge action is not determined by the vertex action at " + s.edge_id(e));
    img.push_back(nv + found);
  }
  return Perm(img);
}

}  // namespace

ActionPtr action_from_json(const Json& j, const Loader& l) {
  try {
    ScwolPtr s = scwol_from_json(l.resolve(field(j, "scwol")));
    const Json& g = field(j, "group");
    if (g.is_string() && g.get<std::string>() == "automorphisms") return fixtures::automorphism_action(s);
    PermGroup group = group_from_json(l.resolve(g));
    int nv = s->num_vertices();
    std::vector<Perm> cells;
    const Json& va = field(j, "vertex_action");
    for (std::size_t k = 0; k < group.generators().size(); ++k) {
      std::string key = std::to_string(k);
      if (!va.contains(key)) throw InvalidInput("no vertex action for generator " + key);
      std::vector<int> vp = perm_from_json(va.at(key), static_cast<std::size_t>(nv)).images();
      if (j.contains("edge_action") && j.at("edge_action").contains(key)) {
        std::vector<int> ep = perm_from_json(j.at("edge_action").at(key), static_cast<std::size_t>(s->num_edges())).images();
        for (int x : ep) vp.push_back(nv + x);
        cells.emplace_back(vp);
      } else {
        cells.push_back(cells_from_vertex_perm(*s, vp));
      }
    }
    return std::make_shared<const ScwolAction>(s, group, cells);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed action: ") + e.what());
  }
}

PermGroup subgroup_from_json(const ScwolAction& full, const Json& j) {
  const Scwol& s = full.scwol();
  std::size_t nc = static_cast<std::size_t>(s.num_cells());
  std::size_t nv = static_cast<std::size_t>(s.num_vertices());
  std::vector<Perm> gens;
  try {
    for (const auto& g : field(j, "generators")) {
      if (g.is_object()) {
        std::vector<int> vp(nv);
        for (std::size_t v = 0; v < nv; ++v) {
          std::string id = s.vertex_id(static_cast<int>(v));
          vp[v] = g.contains(id) ? vertex_named(s, g.at(id).get<std::string>()) : static_cast<int>(v);
        }
        gens.push_back(cells_from_vertex_perm(s, perm_from_json(Json(vp), nv).images()));
      } else if (g.size() == nc) {
        gens.push_back(perm_from_json(g, nc));
      } else {
        gens.push_back(cells_from_vertex_perm(s, perm_from_json(g, nv).images()));
      }
    }
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed subgroup: ") + e.what());
  }
  std::vector<Perm> elems;
  for (const auto& c : gens) {
    const Perm* g = find_element(full.group(), [&](const Perm& p) { return full.cells(p) == c; });
    if (!g) throw InvalidInput("generator is not an automorphism in the acting group");
    elems.push_back(*g);
  }
  return PermGroup(full.group().degree(), elems);
}

Json to_json(const CogMorphism& m) {
  const Scwol& s = m.source->scwol();
  const Scwol& t = m.target->scwol();
  Json j;
  j["source"] = to_json(*m.source);
  j["target"] = to_json(*m.target);
  j["vertex_map"] = Json::object();
  j["edge_map"] = Json::object();
  j["local"] = Json::object();
  j["edge_elements"] = Json::object();
  for (int v = 0; v < s.num_vertices(); ++v) {
    j["vertex_map"][s.vertex_id(v)] = t.vertex_id(m.over.vertex(v));
    j["local"][s.vertex_id(v)] = images_json(m.local[static_cast<std::size_t>(v)]);
  }
  for (int e = 0; e < s.num_edges(); ++e) {
    j["edge_map"][s.edge_id(e)] = t.edge_id(m.over.edge(e));
    j["edge_elements"][s.edge_id(e)] = perm_json(m.edge[static_cast<std::size_t>(e)]);
  }
  return j;
}

CogMorphism morphism_from_json(const Json& j, const Loader& l) {
  try {
    CogPtr src = complex_from_json(l.resolve(field(j, "source")), l.nested(field(j, "source")));
    CogPtr tgt = complex_from_json(l.resolve(field(j, "target")), l.nested(field(j, "target")));
    const Scwol& s = src->scwol();
    const Scwol& t = tgt->scwol();
    std::vector<int> vm, em;
    for (int v = 0; v < s.num_vertices(); ++v) vm.push_back(vertex_named(t, field(j, "vertex_map").at(s.vertex_id(v)).get<std::string>()));
    for (int e = 0; e < s.num_edges(); ++e) em.push_back(edge_named(t, field(j, "edge_map").at(s.edge_id(e)).get<std::string>()));
    CogMorphism m{src, tgt, ScwolMorphism(src->base(), tgt->base(), vm, em), {}, {}};
    for (int v = 0; v < s.num_vertices(); ++v)
      m.local.push_back(hom_from_images(src->local(v), tgt->local(vm[static_cast<std::size_t>(v)]), field(j, "local").at(s.vertex_id(v))));
    for (int e = 0; e < s.num_edges(); ++e)
      m.edge.push_back(perm_from_json(field(j, "edge_elements").at(s.edge_id(e)), tgt->local(t.terminal(em[static_cast<std::size_t>(e)])).degree()));
    return m;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed morphism: ") + e.what());
  }
}

Json to_json(const GroupMorphism& m) {
  const Scwol& s = m.source->scwol();
  Json j;
  j["complex"] = to_json(*m.source);
  j["group"] = to_json(m.group);
  j["local"] = Json::object();
  j["edge_elements"] = Json::object();
  for (int v = 0; v < s.num_vertices(); ++v) j["local"][s.vertex_id(v)] = images_json(m.local[static_cast<std::size_t>(v)]);
  for (int e = 0; e < s.num_edges(); ++e) j["edge_elements"][s.edge_id(e)] = perm_json(m.edge[static_cast<std::size_t>(e)]);
  return j;
}

GroupMorphism group_morphism_from_json(const Json& j, const Loader& l) {
  try {
    CogPtr c = complex_from_json(l.resolve(field(j, "complex")), l.nested(field(j, "complex")));
    PermGroup g = group_from_json(l.resolve(field(j, "group")));
    const Scwol& s = c->scwol();
    GroupMorphism m{c, g, {}, {}};
    for (int v = 0; v < s.num_vertices(); ++v) m.local.push_back(hom_from_images(c->local(v), g, field(j, "local").at(s.vertex_id(v))));
    for (int e = 0; e < s.num_edges(); ++e) m.edge.push_back(perm_from_json(field(j, "edge_elements").at(s.edge_id(e)), g.degree()));
    return m;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed group morphism: ") + e.what());
  }
}

Json to_json(const Report& r) {
  Json arr = Json::array();
  for (const auto& f : r.findings) arr.push_back({{"kind", f.kind}, {"witness", f.witness}});
  return {{"ok", r.ok()}, {"findings", arr}};
}

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& w : p.relators) {
    Json word = Json::array();
    for (int x : w) word.push_back({p.generators[static_cast<std::size_t>(gen_of(x))], x > 0 ? 1 : -1});
    rels.push_back(word);
  }
  return {{"generators", p.generators}, {"relators", rels}};
}

Json to_json(const Abelianization& a) { return {{"torsion", a.torsion}, {"free_rank", a.free_rank}}; }

Json vertex_map_json(const Scwol& s, const Perm& cells) {
  Json j = Json::object();
  for (int v = 0; v < s.num_vertices(); ++v) j[s.vertex_id(v)] = s.vertex_id(cells[static_cast<std::size_t>(v)]);
  return j;
}

std::string to_dot(const Scwol& s) {
  auto quote = [](const std::string& x) {
    std::string q = "\"";
    for (char ch : x) {
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "digraph scwol {\n";
  for (int v = 0; v < s.num_vertices(); ++v) out << "  " << quote(s.vertex_id(v)) << ";\n";
  for (int e = 0; e < s.num_edges(); ++e)
    out << "  " << quote(s.vertex_id(s.initial(e))) << " -> " << quote(s.vertex_id(s.terminal(e))) << " [label=" << quote(s.edge_id(e)) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace cog::io
