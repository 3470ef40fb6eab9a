#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cog/error.hpp"

namespace cog {

// Permutation of {0..n-1}. Products compose right to left: (p*q)(x) = p(q(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  std::size_t order() const;

  std::string cycles() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> img_;
};

Perm pow(const Perm& p, long long e);

// Finite permutation group stored with its full element list in
// lexicographic order of image arrays; the identity is element 0.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultCap = 20000;

  PermGroup() : PermGroup(0, {}) {}
  PermGroup(int degree, std::vector<Perm> generators, std::size_t cap = kDefaultCap);

  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }
  static PermGroup symmetric(int degree);
  // Throws NotSubgroup unless the set is closed under products.
  static PermGroup from_elements(int degree, const std::vector<Perm>& elements);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }
  const Perm& identity() const { return elems_.front(); }
  const Perm& element(std::size_t i) const { return elems_[i]; }

  bool contains(const Perm& p) const { return index_.count(p) != 0; }
  std::size_t index_of(const Perm& p) const;

  bool is_subgroup_of(const PermGroup& other) const;
  bool operator==(const PermGroup& other) const { return elems_ == other.elems_; }

  std::string describe() const;

 private:
  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  std::map<Perm, std::size_t> index_;
};

// Left coset g*H, represented by its least element.
struct Coset {
  Perm rep;
  std::vector<Perm> members;
};

// Left cosets of h in g sorted by representative.
std::vector<Coset> left_cosets(const PermGroup& g, const PermGroup& h);
// Index of the coset containing each element of g (same order as g.elements()).
std::vector<std::size_t> coset_labels(const PermGroup& g, const std::vector<Coset>& cosets);

PermGroup conjugate(const PermGroup& h, const Perm& x);  // x H x^-1
bool is_normal(const PermGroup& g, const PermGroup& h);
PermGroup intersection(const PermGroup& a, const PermGroup& b);
PermGroup join(const PermGroup& a, const PermGroup& b);
PermGroup centralizer_of_set(const PermGroup& g, const std::vector<Perm>& s);
// All subgroups, sorted by order then element list.
std::vector<PermGroup> all_subgroups(const PermGroup& g, std::size_t cap = 5000);
// Elements of g as words in its generators, reached in breadth first order.
std::vector<Perm> bfs_elements(const PermGroup& g);
// First element (breadth first over generators) satisfying pred.
const Perm* find_element(const PermGroup& g, const std::function<bool(const Perm&)>& pred);

// Homomorphism of permutation groups, tabulated on every source element.
class GroupHom {
 public:
  GroupHom() = default;
  // Extends generator images; throws NotWellDefined if they violate a relation.
  GroupHom(PermGroup source, PermGroup target, const std::vector<Perm>& generator_images);
  static GroupHom from_function(PermGroup source, PermGroup target,
                                const std::function<Perm(const Perm&)>& f);
  static GroupHom identity(const PermGroup& g);
  static GroupHom inclusion(const PermGroup& sub, const PermGroup& g);

  const PermGroup& source() const { return src_; }
  const PermGroup& target() const { return tgt_; }
  Perm operator()(const Perm& x) const;

  bool injective() const;
  bool surjective() const;
  PermGroup image() const;
  PermGroup kernel() const;
  GroupHom then(const GroupHom& next) const;  // next o this
  GroupHom inverse() const;                   // requires bijectivity
  bool operator==(const GroupHom& o) const { return src_ == o.src_ && table_ == o.table_; }

 private:
  PermGroup src_, tgt_;
  std::vector<Perm> table_;
};

}  // namespace cog
