#pragma once

#include <boost/rational.hpp>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "cog/complex.hpp"
#include "cog/perm_group.hpp"
#include "cog/scwol.hpp"

namespace cog {

using Rational = boost::rational<long long>;

// A permutation group acting on a scwol through a homomorphism into the
// automorphisms, each given as a permutation of the V then E index set.
class ScwolAction {
 public:
  // One cell permutation per generator of the group.
  ScwolAction(ScwolPtr scwol, PermGroup group, const std::vector<Perm>& generator_cells);
  // Subgroup of the automorphisms, already acting on cells.
  static ScwolAction of_automorphisms(ScwolPtr scwol, const PermGroup& g);

  const Scwol& scwol() const { return *scwol_; }
  const ScwolPtr& base() const { return scwol_; }
  const PermGroup& group() const { return group_; }
  const GroupHom& representation() const { return rep_; }

  Perm cells(const Perm& g) const { return rep_(g); }
  int vertex(const Perm& g, int v) const { return rep_(g)[v]; }
  int edge(const Perm& g, int e) const { return rep_(g)[scwol_->num_vertices() + e] - scwol_->num_vertices(); }

  ScwolAction restrict_to(const PermGroup& sub) const;

 private:
  ScwolPtr scwol_;
  PermGroup group_;
  GroupHom rep_;
};

using ActionPtr = std::shared_ptr<const ScwolAction>;

// No element maps i(a) to t(a); any element fixing i(a) fixes a.
Report validate_action(const ScwolAction& act);

struct Quotient {
  ScwolPtr scwol;
  ScwolMorphism projection;
  std::vector<std::vector<int>> vertex_orbits, edge_orbits;  // members in index order
};

Quotient quotient_scwol(const ScwolAction& act);

// Lift of each quotient vertex and an element h_a per quotient edge with
// h_a . t(lift edge) = lift of t(a).
struct Choices {
  std::vector<int> vertex_lift;
  std::vector<Perm> edge_element;
};

Choices default_choices(const ScwolAction& act, const Quotient& q);
Choices random_choices(const ScwolAction& act, const Quotient& q, std::mt19937& rng);
// Given lifts, edge elements picked in breadth first order.
Choices choices_for_lifts(const ScwolAction& act, const Quotient& q, std::vector<int> vertex_lift);
Report validate_choices(const ScwolAction& act, const Quotient& q, const Choices& c);

// Everything derived from an action and a set of choices.
struct ActionQuotient {
  ActionPtr action;
  Quotient quotient;
  Choices choices;
  CogPtr cog;

  // The unique lift of a with initial vertex the chosen lift of i(a).
  int lift_edge(int a) const;
  // Inclusions of stabilizers together with phi(a) = h_a.
  GroupMorphism canonical() const;
  const Scwol& base() const { return quotient.scwol ? *quotient.scwol : action->scwol(); }
};

ActionQuotient induce(ActionPtr act, std::optional<Choices> choices = std::nullopt);

Rational covolume(const ScwolAction& act);
// Elements g of the acting group with g.s in H.s for every vertex s.
PermGroup g_sub_h(const ScwolAction& act, const PermGroup& h);
// Subgroups of the acting group that act without inversions and are maximal with that property.
std::vector<PermGroup> maximal_subgroups_without_inversions(const ScwolAction& act);

// Morphism G(Y)_C -> G(Y)_C' over the identity.
CogMorphism change_of_choices(const ActionQuotient& from, const ActionQuotient& to);

// L(g.x) = Lambda(g).L(x) for every generator and cell.
Report check_equivariant(const ScwolMorphism& L, const ScwolAction& a, const ScwolAction& b, const GroupHom& lambda);

// Elements k_s with k_s . L(lift s) = lift of l(s), found breadth first.
std::vector<Perm> default_transfer(const ActionQuotient& src, const ActionQuotient& tgt, const ScwolMorphism& L);

// Morphism of induced complexes from an equivariant scwol morphism.
CogMorphism induced_morphism(const ActionQuotient& src, const ActionQuotient& tgt, const ScwolMorphism& L,
                             const GroupHom& lambda, const std::vector<Perm>& k);

}  // namespace cog
