#include "cog/fixtures.hpp"
#include "cog/io.hpp"
#include "doctest.h"

using namespace cog;

TEST_CASE("scwol serialization round trips") {
  for (const auto& s : {fixtures::segment(), fixtures::tripod(), fixtures::triangle(), fixtures::octahedron()}) {
    io::Json j = io::to_json(*s);
    ScwolPtr back = io::scwol_from_json(j);
    CHECK(io::to_json(*back) == j);
    CHECK(back->num_vertices() == s->num_vertices());
    CHECK(back->num_edges() == s->num_edges());
  }
  io::Json cells = {{"cells", {"a", "b", "ab"}}, {"faces", {{"ab", {"a", "b"}}}}};
  CHECK(io::scwol_from_json(cells)->num_edges() == 2);
  CHECK_THROWS_AS(io::scwol_from_json(io::Json{{"vertices", {"a"}}, {"edges", {{{"id", "x"}, {"i", "a"}, {"t", "q"}}}}}),
                  InvalidInput);
  CHECK_THROWS_AS(io::scwol_from_json(io::Json::array()), InvalidInput);
}

TEST_CASE("complexes, actions and morphisms round trip") {
  auto c = fixtures::d3seg();
  io::Json j = io::to_json(*c);
  CHECK(io::to_json(*io::complex_from_json(j)) == j);
  auto aq = induce(fixtures::tripod_s3());
  io::Json k = io::to_json(*aq.cog);
  CHECK(io::to_json(*io::complex_from_json(k)) == k);
  auto act = fixtures::flip();
  io::Json a = io::to_json(*act);
  auto back = io::action_from_json(a);
  CHECK(back->group() == act->group());
  CHECK(io::to_json(*back) == a);
  io::Json vertex_only = a;
  vertex_only.erase("edge_action");
  CHECK(io::to_json(*io::action_from_json(vertex_only)) == a);
  auto m = identity_morphism(c);
  io::Json mj = io::to_json(m);
  CHECK(io::to_json(io::morphism_from_json(mj)) == mj);
  auto gm = fixtures::d3seg_into_s3(c);
  io::Json gj = io::to_json(gm);
  CHECK(io::to_json(io::group_morphism_from_json(gj)) == gj);
}

TEST_CASE("subgroups given by vertex maps") {
  auto full = fixtures::tripod_s3();
  io::Json rot = {{"generators", {{{"l1", "l2"}, {"l2", "l3"}, {"l3", "l1"}, {"s1", "s2"}, {"s2", "s3"}, {"s3", "s1"}}}}};
  CHECK(io::subgroup_from_json(*full, rot).order() == 3);
  CHECK(io::subgroup_from_json(*full, {{"generators", io::Json::array()}}).order() == 1);
  io::Json bad = {{"generators", {{{"l1", "s1"}, {"s1", "l1"}}}}};
  CHECK_THROWS_AS(io::subgroup_from_json(*full, bad), InvalidInput);
}

TEST_CASE("dot export") {
  std::string dot = io::to_dot(*fixtures::segment());
  CHECK(dot.find("\"e\" -> \"v1\"") != std::string::npos);
  CHECK(dot.rfind("digraph", 0) == 0);
}
