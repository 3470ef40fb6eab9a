#include <algorithm>
#include <set>

#include "cog/fixtures.hpp"
#include "cog/overgroups.hpp"
#include "doctest.h"

using namespace cog;

namespace {

PermGroup trivial_of(const ActionPtr& a) { return PermGroup::trivial(a->group().degree()); }

std::multiset<std::size_t> sheet_multiset(const AuditReport& r) {
  std::multiset<std::size_t> s;
  for (const auto& e : r.entries) s.insert(e.sheets);
  return s;
}

}  // namespace

TEST_CASE("overgroups of the trivial group on the tripod") {
  auto full = fixtures::tripod_s3();
  auto ctx = make_context(full, trivial_of(full));
  auto groups = enumerate_overgroups(ctx);
  CHECK(groups.size() == 6);
  // Oracle: every subgroup of S3 contains the trivial group and the tripod admits no inversions.
  CHECK(groups.size() == all_subgroups(full->group()).size());
  AuditReport r = bijection_audit(ctx);
  CHECK_MESSAGE(r.ok(), r.report.summary());
  CHECK(r.pairwise_distinct);
  CHECK(sheet_multiset(r) == std::multiset<std::size_t>{1, 2, 2, 2, 3, 6});
  for (const auto& e : r.entries) {
    CHECK(e.roundtrip);
    CHECK(e.class_roundtrip);
    CHECK(e.choice_independent);
    CHECK(e.criteria_agree);
    CHECK(e.covolume_ratio == Rational(static_cast<long long>(e.index)));
  }
}

TEST_CASE("overgroups on the subdivided segment and an asymmetric scwol") {
  auto full = fixtures::flip();
  auto ctx = make_context(full, trivial_of(full));
  AuditReport r = bijection_audit(ctx);
  CHECK_MESSAGE(r.ok(), r.report.summary());
  CHECK(sheet_multiset(r) == std::multiset<std::size_t>{1, 2});

  // A path of one edge and a dangling extra edge has no symmetry.
  CellComplex c;
  c.cells = {"p", "q", "r", "pq", "qr", "s", "qs"};
  c.faces["pq"] = {"p", "q"};
  c.faces["qr"] = {"q", "r"};
  c.faces["qs"] = {"q", "s"};
  auto y = std::make_shared<const Scwol>(scwol_from_complex(c));
  auto lopsided = fixtures::automorphism_action(y);
  if (lopsided->group().order() == 1) {
    auto lc = make_context(lopsided, trivial_of(lopsided));
    CHECK(enumerate_overgroups(lc).size() == 1);
  }
}

TEST_CASE("map a and map b on the tripod") {
  auto full = fixtures::tripod_s3();
  auto ctx = make_context(full, trivial_of(full));
  auto one = map_a(ctx, ctx.gamma);
  CHECK(one.covering.covering);
  CHECK(one.covering.sheets == 1u);
  CHECK(map_b(ctx, one) == ctx.gamma);
  auto whole = map_a(ctx, full->group());
  CHECK(whole.covering.sheets == 6u);
  CHECK(map_b(ctx, whole) == full->group());
  std::vector<PermGroup> twos;
  for (const auto& h : all_subgroups(full->group()))
    if (h.order() == 2) twos.push_back(h);
  REQUIRE(twos.size() == 3);
  auto c1 = map_a(ctx, twos[0]);
  auto c2 = map_a(ctx, twos[1]);
  CoveringComparison cmp = isomorphic_coverings(ctx, c1, c2);
  CHECK_FALSE(cmp.by_subgroup);
  CHECK_FALSE(cmp.by_triangle);
  CoveringComparison self = isomorphic_coverings(ctx, c1, c1);
  CHECK(self.by_subgroup);
  CHECK(self.by_triangle);
  for (const auto& cls : {one, whole, c1}) {
    CHECK(cls.induced.lambda.injective());
    CHECK(check_morphism(cls.induced.l).covering);
    CHECK(cls.induced.l.is_isomorphism());
    CHECK(cls.induced.u[static_cast<std::size_t>(ctx.basepoint())].is_identity());
  }
}

TEST_CASE("composition of induced maps along a chain of overgroups") {
  auto full = fixtures::tripod_s3();
  auto ctx = make_context(full, trivial_of(full));
  for (const auto& mid : all_subgroups(full->group())) {
    auto first = map_a(ctx, mid);
    auto ctx2 = make_context(full, first.target, first.target_cover.pi1.tree());
    auto second = map_a(ctx2, full->group());
    CogMorphism both = compose(first.morphism, second.morphism);
    InducedPair direct = induced_maps(both, ctx.cover, second.target_cover);
    CHECK(direct.lambda == first.induced.lambda.then(second.induced.lambda));
    CHECK(direct.l == first.induced.l.then(second.induced.l));
  }
}

TEST_CASE("conjugacy on the tripod") {
  auto full = fixtures::tripod_s3();
  PermGroup rot = fixtures::tripod_rotation(full);
  CHECK(rot.order() == 3);
  CHECK(g_sub_h(*full, rot) == full->group());
  ConjugacyResult r = conjugacy_solve(full, rot, trivial_of(full));
  CHECK(r.g_h.order() == 6);
  CHECK(r.conjugates_into_h);
  CHECK(r.preserves_orbits);
  CHECK(conjugacy_oracle(full, rot, trivial_of(full)).has_value());
  CHECK_THROWS_AS(conjugacy_solve(full, rot, full->group()), NotFree);
}

TEST_CASE("conjugacy with a free antipodal action on the octahedron") {
  auto full = fixtures::automorphism_action(fixtures::octahedron());
  PermGroup gamma = fixtures::antipodal_subgroup(full);
  CHECK(gamma.order() == 2);
  int tried = 0;
  for (const auto& h : all_subgroups(full->group())) {
    if (!validate_action(*std::make_shared<const ScwolAction>(full->restrict_to(h))).ok()) continue;
    if (!gamma.is_subgroup_of(g_sub_h(*full, h))) {
      CHECK_THROWS_AS(conjugacy_solve(full, h, gamma), NotInGH);
      continue;
    }
    ConjugacyResult r = conjugacy_solve(full, h, gamma);
    CHECK(r.conjugates_into_h);
    CHECK(r.preserves_orbits);
    CHECK(conjugacy_oracle(full, h, gamma).has_value());
    if (++tried == 6) break;
  }
  CHECK(tried > 0);
}
