#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cog/error.hpp"
#include "cog/perm_group.hpp"

namespace cog {

// Letters are +(g+1) for generator g and -(g+1) for its inverse.
using Word = std::vector<int>;

inline int letter(int gen, int sign) { return sign > 0 ? gen + 1 : -(gen + 1); }
inline int gen_of(int l) { return (l > 0 ? l : -l) - 1; }
Word inverse(const Word& w);
Word free_reduce(Word w);
Word cyclic_reduce(Word w);
Word concat(const Word& a, const Word& b);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int num_generators() const { return static_cast<int>(generators.size()); }
  int find(const std::string& name) const;  // -1 if absent
  std::string format_word(const Word& w) const;
  std::string format() const;
};

// Result of Tietze simplification; substitution[g] writes original
// generator g as a word in the surviving generators.
struct Simplified {
  Presentation presentation;
  std::vector<Word> substitution;
  std::vector<int> survivors;  // original index of each surviving generator
};

constexpr int kDefaultTietzePasses = 10;
Simplified simplify(const Presentation& p, int passes = kDefaultTietzePasses);

struct Abelianization {
  std::vector<long long> torsion;  // invariant factors > 1, dividing chain
  int free_rank = 0;
  bool trivial() const { return torsion.empty() && free_rank == 0; }
  std::string format() const;
};

Abelianization abelianization(const Presentation& p);
// Smith normal form diagonal of an integer matrix (nonzero entries only).
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m);

// Coset table for the right action of generators on cosets of a subgroup.
// Column 2g holds g, column 2g+1 holds its inverse; -1 marks an undefined entry.
struct CosetEnumeration {
  bool complete = false;
  std::size_t rows_defined = 0;
  std::vector<std::vector<int>> table;
  std::size_t index() const { return table.size(); }
  // Follows w from coset c; -1 when an entry is missing.
  int trace(int c, const Word& w) const;
};

CosetEnumeration todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                              std::size_t budget);

// Permutation images of generators on the cosets of a complete table,
// arranged so that word evaluation is a homomorphism.
std::vector<Perm> coset_action(const CosetEnumeration& t);

Perm evaluate(const Word& w, const std::vector<Perm>& images, int degree);

// Checks relators and surjectivity onto target; throws NotWellDefined.
void check_presentation_hom(const Presentation& p, const std::vector<Perm>& images,
                            const PermGroup& target);

}  // namespace cog
