#include <algorithm>
#include <cmath>
#include <numeric>

#include "cog/fixtures.hpp"
#include "cog/scwol.hpp"
#include "doctest.h"

using namespace cog;

namespace {

// Counts k-chains by testing every k-tuple of edges.
std::size_t chains_brute(const Scwol& s, int k) {
  std::size_t n = static_cast<std::size_t>(s.num_edges()), count = 0, total = 1;
  for (int j = 0; j < k; ++j) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> t;
    std::size_t c = code;
    for (int j = 0; j < k; ++j) {
      t.push_back(static_cast<int>(c % n));
      c /= n;
    }
    bool ok = true;
    for (int j = 0; j + 1 < k; ++j) ok = ok && s.initial(t[static_cast<std::size_t>(j)]) == s.terminal(t[static_cast<std::size_t>(j + 1)]);
    count += ok;
  }
  return count;
}

// Automorphism count by trying every vertex permutation; fixtures have no parallel edges.
std::size_t automorphisms_brute(const Scwol& s) {
  std::vector<int> vp(static_cast<std::size_t>(s.num_vertices()));
  std::iota(vp.begin(), vp.end(), 0);
  std::size_t count = 0;
  std::map<std::pair<int, int>, int> edge_of;
  for (int e = 0; e < s.num_edges(); ++e) edge_of[{s.initial(e), s.terminal(e)}] = e;
  do {
    std::vector<int> img(vp.begin(), vp.end());
    bool ok = true;
    for (int e = 0; e < s.num_edges() && ok; ++e) {
      auto it = edge_of.find({vp[static_cast<std::size_t>(s.initial(e))], vp[static_cast<std::size_t>(s.terminal(e))]});
      if (it == edge_of.end()) ok = false;
      else img.push_back(s.num_vertices() + it->second);
    }
    if (ok && is_automorphism(s, Perm(img))) ++count;
  } while (std::next_permutation(vp.begin(), vp.end()));
  return count;
}

// Matrix-tree theorem on the underlying multigraph.
long long tree_count_kirchhoff(const Scwol& s) {
  int n = s.num_vertices();
  std::vector<std::vector<double>> L(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int e = 0; e < s.num_edges(); ++e) {
    auto a = static_cast<std::size_t>(s.initial(e)), b = static_cast<std::size_t>(s.terminal(e));
    L[a][a] += 1; L[b][b] += 1; L[a][b] -= 1; L[b][a] -= 1;
  }
  std::size_t m = static_cast<std::size_t>(n - 1);
  double det = 1;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = c;
    for (std::size_t r = c; r < m; ++r)
      if (std::abs(L[r][c]) > std::abs(L[p][c])) p = r;
    if (std::abs(L[p][c]) < 1e-12) return 0;
    if (p != c) { std::swap(L[p], L[c]); det = -det; }
    det *= L[c][c];
    for (std::size_t r = c + 1; r < m; ++r) {
      double f = L[r][c] / L[c][c];
      for (std::size_t k = c; k < m; ++k) L[r][k] -= f * L[c][k];
    }
  }
  return std::llround(det);
}

}  // namespace

TEST_CASE("validation reports each kind of defect") {
  CHECK(validate_scwol({{"a", "b"}, {{"x", "a", "a"}}, {}}).findings.at(0).kind == "loop");
  CHECK(validate_scwol({{"a"}, {{"x", "a", "q"}}, {}}).findings.at(0).kind == "unknown_endpoint");
  ScwolData missing{{"0", "1", "2"}, {{"a", "1", "0"}, {"b", "2", "1"}, {"c", "2", "0"}}, {}};
  CHECK(validate_scwol(missing).findings.at(0).kind == "missing_composition");
  ScwolData wrong_end = missing;
  wrong_end.edges.push_back({"d", "1", "0"});
  wrong_end.compositions = {{"a", "b", "d"}};
  CHECK(validate_scwol(wrong_end).findings.at(0).kind == "endpoint_rule");
  ScwolData assoc{{"0", "1", "2", "3"},
                  {{"a", "1", "0"}, {"b", "2", "1"}, {"c", "3", "2"}, {"ab", "2", "0"}, {"bc", "3", "1"},
                   {"d1", "3", "0"}, {"d2", "3", "0"}},
                  {{"a", "b", "ab"}, {"b", "c", "bc"}, {"ab", "c", "d1"}, {"a", "bc", "d2"}}};
  auto r = validate_scwol(assoc);
  REQUIRE_FALSE(r.ok());
  CHECK(r.findings.at(0).kind == "associativity");
  assoc.compositions[3].ab = "d1";
  CHECK(validate_scwol(assoc).ok());
  CHECK_THROWS_AS(Scwol::build(missing), InvalidInput);
}

TEST_CASE("standard fixture sizes") {
  CHECK(fixtures::segment()->num_vertices() == 3);
  CHECK(fixtures::path2()->num_vertices() == 5);
  CHECK(fixtures::path2()->num_edges() == 4);
  auto tri = fixtures::triangle();
  CHECK(tri->num_vertices() == 7);
  CHECK(tri->num_edges() == 12);
  CHECK(tri->composable_pairs().size() == 6);
  auto tet = fixtures::tetrahedron();
  CHECK(tet->num_vertices() == 15);
  CHECK(tet->num_edges() == 50);
  CHECK(chains(*tet, 3).size() == 24);
  CHECK(fixtures::hexagon()->num_edges() == 6);
  CHECK(fixtures::tripod()->num_edges() == 6);
}

TEST_CASE("chain enumeration matches tuple brute force") {
  for (auto s : {fixtures::triangle(), fixtures::tetrahedron(), fixtures::tripod()})
    for (int k = 1; k <= 3; ++k) CHECK(chains(*s, k).size() == chains_brute(*s, k));
}

TEST_CASE("barycentric subdivision has one vertex per chain") {
  for (auto s : {fixtures::segment(), fixtures::triangle(), fixtures::hexagon()}) {
    std::size_t expect = 0;
    for (int k = 0; k < 4; ++k) expect += chains(*s, k).size();
    Scwol b = barycentric_subdivision(*s);
    CHECK(static_cast<std::size_t>(b.num_vertices()) == expect);
    CHECK(validate_scwol(b.data()).ok());
  }
  CHECK(barycentric_subdivision(*fixtures::segment()).num_edges() == 4);
}

TEST_CASE("face relations with cycles are rejected") {
  CellComplex c;
  c.cells = {"a", "b"};
  c.faces["a"] = {"b"};
  c.faces["b"] = {"a"};
  CHECK_THROWS_AS(scwol_from_complex(c), InvalidInput);
}

TEST_CASE("morphism flags") {
  auto seg = fixtures::segment();
  auto pt = fixtures::point();
  CHECK(check_morphism(ScwolMorphism::identity(seg)).covering);
  // No edge of the point can receive a1.
  CHECK_THROWS_AS(ScwolMorphism(seg, pt, {0, 0, 0}, {0, 0}), InvalidInput);
  // Folding the segment onto one edge is valid but degenerate.
  ScwolMorphism fold(seg, seg, {0, 1, 1}, {0, 0});
  auto f = check_morphism(fold);
  CHECK(f.valid);
  CHECK_FALSE(f.nondegenerate);
  ScwolMorphism flip(seg, seg, {0, 2, 1}, {1, 0});
  auto g = check_morphism(flip);
  CHECK(g.covering);
  CHECK(flip.is_isomorphism());
  CHECK(flip.then(flip) == ScwolMorphism::identity(seg));
}

TEST_CASE("connectivity and simple connectivity") {
  Scwol two = Scwol::build({{"a", "b", "c"}, {{"x", "a", "b"}}, {}});
  CHECK(connected_components(two).size() == 2);
  CHECK_THROWS_AS(simple_connectivity(two), PreconditionFailed);
  CHECK(simple_connectivity(*fixtures::triangle()) == Certificate::Yes);
  CHECK(simple_connectivity(*fixtures::tetrahedron()) == Certificate::Yes);
  CHECK(simple_connectivity(*fixtures::tripod()) == Certificate::Yes);
  CHECK(simple_connectivity(*fixtures::octahedron()) == Certificate::Yes);
  CHECK(simple_connectivity(*fixtures::hexagon()) == Certificate::No);
  CHECK(simple_connectivity(barycentric_subdivision(*fixtures::hexagon())) == Certificate::No);
  CHECK_THROWS_AS(simple_connectivity(*fixtures::triangle(), 0), PreconditionFailed);
}

TEST_CASE("spanning trees") {
  for (auto s : {fixtures::hexagon(), fixtures::triangle(), fixtures::tripod()}) {
    auto trees = all_spanning_trees(*s);
    CHECK(static_cast<long long>(trees.size()) == tree_count_kirchhoff(*s));
    for (const auto& t : trees) CHECK(is_spanning_tree(*s, t));
    CHECK(is_spanning_tree(*s, canonical_spanning_tree(*s)));
  }
  CHECK(all_spanning_trees(*fixtures::hexagon()).size() == 6);
}

TEST_CASE("automorphism groups agree with exhaustive vertex permutations") {
  for (auto s : {fixtures::tripod(), fixtures::triangle(), fixtures::hexagon(), fixtures::path2()})
    CHECK(automorphism_group(*s).order() == automorphisms_brute(*s));
  CHECK(automorphism_group(*fixtures::tripod()).order() == 6);
  CHECK(automorphism_group(*fixtures::tetrahedron()).order() == 24);
  CHECK(automorphism_group(*fixtures::octahedron()).order() == 48);
  auto a = automorphism_group(*fixtures::triangle());
  for (const auto& g : a.elements()) CHECK(is_automorphism(*fixtures::triangle(), g));
}
