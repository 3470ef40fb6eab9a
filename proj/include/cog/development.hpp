#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cog/action.hpp"
#include "cog/complex.hpp"
#include "cog/fundamental_group.hpp"

namespace cog {

// D(Y, phi): vertices ([g], s) with g in G / phi_s(G_s), edges ([g], a) with
// g in G / phi_{i(a)}(G_{i(a)}), and G acting on the left.
struct Development {
  ScwolPtr scwol;
  ActionPtr action;
  ScwolMorphism projection;
  GroupMorphism phi;
  std::vector<std::vector<int>> vertex_of;  // [s][coset label]
  std::vector<std::vector<int>> edge_of;    // [a][coset label]
  std::vector<CosetIndex> vertex_cosets;
  std::vector<std::pair<int, std::size_t>> vertex_key, edge_key;  // (base cell, coset label)

  int vertex_at(const Perm& g, int s) const;
  int edge_at(const Perm& g, int a) const;
  // Coset representative and base cell of a development cell.
  Perm vertex_rep(int x) const;
  Perm edge_rep(int e) const;
};

Development develop(const GroupMorphism& phi);

// Recovery of the complex from the action of G on D(Y, phi) with choices
// ([1], s) and h_a = phi(a), together with the comparison morphism.
struct Recovery {
  ActionQuotient induced;
  CogMorphism theta;  // Y -> G\D, theta_s = phi_s, theta(a) = 1
  Report report;      // empty when theta is an isomorphism matching phi
};

Recovery recover_cog(const Development& d);

// ([g], alpha) -> g . lift(alpha) from D(Y, phi_1) to X for an induced complex.
ScwolMorphism phi_one(const ActionQuotient& aq, const Development& d);

// Universal cover D(Y, T) when the fundamental group is finite.
struct FiniteCover {
  FundamentalGroup pi1;
  Development dev;
};

// Ball around ([1], basepoint) built from partial coset tables.
struct PartialBall {
  int radius = 0;
  ScwolPtr ball;
  bool partial = true;
};

constexpr int kDefaultBallRadius = 3;

std::variant<FiniteCover, PartialBall> universal_cover(CogPtr c, const TreeData& t, std::size_t budget = kDefaultBudget,
                                                       int max_radius = kDefaultBallRadius);
// Throws BudgetExceeded when the fundamental group is not found to be finite.
FiniteCover finite_cover(CogPtr c, const TreeData& t, std::size_t budget = kDefaultBudget);

// Coset indices of each local group image, or nullopt past the budget.
std::optional<std::vector<std::size_t>> vertex_subgroup_indices(const ComplexOfGroups& c, const TreeData& t,
                                                                std::size_t budget);

struct DevelopabilityResult {
  Certificate answer = Certificate::Unknown;
  std::optional<GroupMorphism> witness;
  std::string method;
};

// Yes with an injective witness, or Unknown. A cap of zero disables the search;
// otherwise it bounds the symmetric group degree tried.
DevelopabilityResult is_developable(CogPtr c, int cap, std::size_t budget = kDefaultBudget);

// The simplicial star of the lifted vertex in the local development, and the
// map induced on it by a morphism.
struct StarReport {
  std::size_t source_size = 0, target_size = 0;
  bool well_defined = true;
  bool equivariant = true;
  bool bijective = false;
};

StarReport local_star_bijection(const CogMorphism& m, int s);

// Kernel of the action of the fundamental group on the universal cover.
PermGroup kernel_of_action(const FiniteCover& f);
// Largest subgroup of the vertex group intersection that is normal in every
// local group image and stable under conjugation by every edge generator.
PermGroup maximal_invariant_normal_subgroup(const FiniteCover& f);

}  // namespace cog
