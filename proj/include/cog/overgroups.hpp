#pragma once

#include <optional>
#include <random>
#include <vector>

#include "cog/functoriality.hpp"

namespace cog {

// Fixed data: the full automorphism action on a simply connected X, the
// subgroup Gamma with its induced complex, a maximal tree and the identification
// of the universal cover with X.
struct OvergroupContext {
  ActionPtr full;
  PermGroup gamma;
  ActionQuotient base;
  FiniteCover cover;
  ActionIso identification;

  int basepoint() const { return cover.pi1.tree().basepoint; }
};

OvergroupContext make_context(ActionPtr full, const PermGroup& gamma, std::size_t budget = kDefaultBudget);
// Reuses an existing induced complex and tree, e.g. the target of an earlier covering.
OvergroupContext make_context(ActionPtr full, const ActionQuotient& aq, const TreeData& t,
                              std::size_t budget = kDefaultBudget);

struct CoveringClass {
  PermGroup overgroup;
  ActionQuotient target;
  CogMorphism morphism;
  CoveringReport covering;
  FiniteCover target_cover;
  InducedPair induced;
};

// Subgroups of Aut(X) containing Gamma and acting without inversions.
std::vector<PermGroup> enumerate_overgroups(const OvergroupContext& ctx);

// Covering G(Y) -> G'(Y') induced by Gamma <= overgroup. With an rng the lifts
// other than the basepoint image are chosen at random.
CoveringClass map_a(const OvergroupContext& ctx, const PermGroup& overgroup, std::mt19937* rng = nullptr);

// The overgroup recovered from a covering by conjugating the target fundamental group action into X.
PermGroup map_b(const OvergroupContext& ctx, const CoveringClass& c);

struct CoveringComparison {
  bool by_subgroup = false;
  bool by_triangle = false;
  bool agree() const { return by_subgroup == by_triangle; }
};

CoveringComparison isomorphic_coverings(const OvergroupContext& ctx, const CoveringClass& a, const CoveringClass& b);

struct AuditEntry {
  PermGroup overgroup;
  std::size_t index = 0;
  std::size_t sheets = 0;
  Rational covolume_ratio;
  bool roundtrip = false;          // b(a(G')) == G'
  bool class_roundtrip = false;    // a(b(lambda)) isomorphic to lambda
  bool choice_independent = false;
  bool criteria_agree = true;
};

struct AuditReport {
  std::vector<AuditEntry> entries;
  bool pairwise_distinct = true;
  Report report;
  bool ok() const { return report.ok(); }
};

AuditReport bijection_audit(const OvergroupContext& ctx, unsigned seed = 1);

// Conjugacy: g in G_H with g Gamma g^-1 <= H.
struct ConjugacyResult {
  Perm g;
  PermGroup g_h;
  bool conjugates_into_h = false;
  bool preserves_orbits = false;
};

// full must be the automorphism action of a simply connected X (group elements are cell permutations).
ConjugacyResult conjugacy_solve(const ActionPtr& full, const PermGroup& h, const PermGroup& gamma,
                                std::size_t budget = kDefaultBudget);
std::optional<Perm> conjugacy_oracle(const ActionPtr& full, const PermGroup& h, const PermGroup& gamma);

}  // namespace cog
