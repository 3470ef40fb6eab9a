#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cog/complex.hpp"
#include "cog/presentation.hpp"

namespace cog {

// Letter of the universal group: a local group element (vertex, element index)
// or an oriented edge a^+ (sign +1) / a^- (sign -1).
struct FgLetter {
  bool is_edge = false;
  int index = 0;        // vertex or edge
  std::size_t element = 0;
  int sign = 1;
};
using FgWord = std::vector<FgLetter>;

FgWord inverse(const FgWord& w);
FgWord concat(const FgWord& a, const FgWord& b);

// Maximal tree with a basepoint and the tree path to each vertex.
struct TreeData {
  std::vector<int> edges;
  std::vector<char> in_tree;
  int basepoint = 0;
  std::vector<FgWord> path;  // oriented edges from the basepoint
};

TreeData make_tree(const Scwol& s, std::vector<int> edges, int basepoint = 0);
TreeData canonical_tree(const Scwol& s, int basepoint = 0);

// Presentation of the universal group, optionally killing the tree edges.
struct Pi1Presentation {
  Presentation raw;
  std::vector<FgLetter> label;              // one per raw generator
  std::map<std::pair<int, std::size_t>, int> element_generator;
  std::vector<int> edge_generator;
  Simplified simplified;

  // -1 for the identity element.
  int generator_of(int vertex, std::size_t element) const;
  Word raw_word(const FgWord& w) const;
};

Pi1Presentation universal_group_presentation(const ComplexOfGroups& c);
Pi1Presentation pi1_presentation(const ComplexOfGroups& c, const TreeData& t);

// Evaluation of a universal group word through a morphism to a group.
Perm evaluate(const FgWord& w, const GroupMorphism& phi);

// Concrete fundamental group: the regular permutation representation from a
// complete coset enumeration over the trivial subgroup.
class FundamentalGroup {
 public:
  // nullopt when the enumeration exceeds the budget.
  static std::optional<FundamentalGroup> realize(CogPtr c, TreeData t, std::size_t budget);

  const CogPtr& cog() const { return cog_; }
  const TreeData& tree() const { return tree_; }
  const Pi1Presentation& presentation() const { return pres_; }
  const PermGroup& group() const { return group_; }

  Perm local(int v, const Perm& g) const;
  Perm edge(int a) const;
  Perm evaluate(const FgWord& w) const;
  // Canonical morphism g -> g, a^+ -> a^+ into the fundamental group.
  const GroupMorphism& iota() const { return iota_; }
  // Index of the image of each local group.
  std::vector<std::size_t> vertex_indices() const;

 private:
  CogPtr cog_;
  TreeData tree_;
  Pi1Presentation pres_;
  PermGroup group_;
  std::vector<Perm> image_;  // per raw generator
  GroupMorphism iota_;
};

}  // namespace cog
