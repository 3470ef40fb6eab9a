#pragma once

#include <functional>
#include <vector>

#include "cog/action.hpp"
#include "cog/development.hpp"

namespace cog {

// Loop at the basepoint for a raw generator: g -> pi_s g pi_s^-1 and
// a+ -> pi_t(a) a+ pi_i(a)^-1. Evaluating it in the fundamental group returns the generator.
FgWord kappa(const ComplexOfGroups& c, const TreeData& t, const FgLetter& x);

// Extends images of the raw generators to a homomorphism out of the realized
// fundamental group; throws NotWellDefined when they do not respect the relations.
GroupHom extend_from_raw(const FundamentalGroup& f, const PermGroup& target,
                         const std::function<Perm(const FgLetter&)>& image);

// Lambda_T onto the acting group and the equivariant isomorphism D(Y, T) -> X.
struct ActionIso {
  GroupHom lambda;
  ScwolMorphism tilde_l;
  std::vector<Perm> h;  // h_s along tree paths
  Report report;
};

// Requires a simply connected X; f must be the finite cover of aq.cog.
ActionIso lambda_t(const ActionQuotient& aq, const FiniteCover& f);

// Lambda^m and L^m between universal covers, with the corrections u_s.
struct InducedPair {
  GroupHom lambda;
  ScwolMorphism l;
  std::vector<Perm> u;
  Report report;
};

// The target tree must be based at the image of the source basepoint.
InducedPair induced_maps(const CogMorphism& m, const FiniteCover& src, const FiniteCover& tgt);

// Builds the induced morphism from (L, lambda, k) and compares both squares.
Report main_lemma_check(const ActionQuotient& src, const ActionQuotient& tgt, const ScwolMorphism& l,
                        const GroupHom& lambda, const std::vector<Perm>& k, const TreeData& t, const TreeData& tp);

// theta: G(Y) -> G(Z) for Z the quotient of the universal cover, checked
// against Lambda_{f(T)} and L~_{f(T)}.
struct ThetaCheck {
  Recovery recovery;
  TreeData image_tree;
  Report report;
};

ThetaCheck theta_check(const FiniteCover& f);

// Morphism whose induced pair is (l, lambda).
struct Reconstruction {
  CogMorphism morphism;
  Report report;
};

Reconstruction reconstruct_morphism(const ScwolMorphism& l, const GroupHom& lambda, const FiniteCover& src,
                                    const FiniteCover& tgt);

struct IsomorphismCriteria {
  bool direct = false;
  bool induced = false;
  bool agree() const { return direct == induced; }
};

IsomorphismCriteria isomorphism_criteria(const CogMorphism& m, const FiniteCover& src, const FiniteCover& tgt);

// Cell permutation of a scwol morphism that is bijective on cells.
Perm cell_perm(const ScwolMorphism& m);

}  // namespace cog
