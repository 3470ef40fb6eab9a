#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "cog/perm_group.hpp"
#include "cog/scwol.hpp"

namespace cog {

// Local groups on vertices, monomorphisms psi_a: G_{i(a)} -> G_{t(a)} on edges
// and twisting elements g_{a,b} in G_{t(a)} on composable pairs.
class ComplexOfGroups {
 public:
  // Structural checks only; the axioms are checked by validate_cog.
  // Missing twists are the identity.
  ComplexOfGroups(ScwolPtr base, std::vector<PermGroup> local, std::vector<GroupHom> psi,
                  std::map<std::pair<int, int>, Perm> twists = {});

  const Scwol& scwol() const { return *base_; }
  const ScwolPtr& base() const { return base_; }
  const PermGroup& local(int v) const { return local_[static_cast<std::size_t>(v)]; }
  const GroupHom& psi(int e) const { return psi_[static_cast<std::size_t>(e)]; }
  Perm twist(int a, int b) const;
  const std::map<std::pair<int, int>, Perm>& twists() const { return twists_; }

  ComplexOfGroups with_twist(int a, int b, const Perm& g) const;

 private:
  ScwolPtr base_;
  std::vector<PermGroup> local_;
  std::vector<GroupHom> psi_;
  std::map<std::pair<int, int>, Perm> twists_;
};

using CogPtr = std::shared_ptr<const ComplexOfGroups>;

// Injectivity of each psi plus both compatibility axioms, with witnesses.
Report validate_cog(const ComplexOfGroups& c);

// Morphism into a single group G: local homomorphisms phi_s and elements phi(a) of G.
struct GroupMorphism {
  CogPtr source;
  PermGroup group;
  std::vector<GroupHom> local;
  std::vector<Perm> edge;

  Perm apply(int v, const Perm& g) const { return local[static_cast<std::size_t>(v)](g); }
  bool injective_on_local_groups() const;
};

Report validate_group_morphism(const GroupMorphism& m);
// Elements k_s with m2_s = Ad(k_s) m1_s and m2(a) = k_{t(a)} m1(a) k_{i(a)}^-1, if any exist.
std::optional<std::vector<Perm>> homotopy(const GroupMorphism& m1, const GroupMorphism& m2);

// Morphism of complexes of groups over a scwol morphism.
struct CogMorphism {
  CogPtr source, target;
  ScwolMorphism over;
  std::vector<GroupHom> local;  // G_s -> G'_{l(s)}
  std::vector<Perm> edge;       // phi(a) in G'_{t(l(a))}

  Perm apply(int v, const Perm& g) const { return local[static_cast<std::size_t>(v)](g); }
};

Report validate_cog_morphism(const CogMorphism& m);
CogMorphism identity_morphism(const CogPtr& c);
// second o first
CogMorphism compose(const CogMorphism& first, const CogMorphism& second);
GroupMorphism compose(const CogMorphism& first, const GroupMorphism& second);
bool is_isomorphism(const CogMorphism& m);
CogMorphism inverse(const CogMorphism& m);

struct CoveringReport {
  bool covering = false;
  std::optional<std::size_t> sheets;
  Report report;
  // Per source vertex, whether the coset clause holds there.
  std::map<int, bool> vertex_clause;
};

CoveringReport is_covering(const CogMorphism& m);

// Label of the left coset x*H inside g, for a subgroup h of g.
class CosetIndex {
 public:
  CosetIndex(const PermGroup& g, const PermGroup& h);
  std::size_t label(const Perm& x) const { return labels_[g_.index_of(x)]; }
  std::size_t count() const { return cosets_.size(); }
  const std::vector<Coset>& cosets() const { return cosets_; }

 private:
  PermGroup g_;
  std::vector<Coset> cosets_;
  std::vector<std::size_t> labels_;
};

}  // namespace cog
