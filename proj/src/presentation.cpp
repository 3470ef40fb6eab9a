#include "cog/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace cog {

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& l : r) l = -l;
  return r;
}

Word free_reduce(Word w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a] == -w[b - 1]) {
    ++a;
    --b;
  }
  return Word(w.begin() + static_cast<long>(a), w.begin() + static_cast<long>(b));
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return free_reduce(r);
}

int Presentation::find(const std::string& name) const {
  for (int g = 0; g < num_generators(); ++g)
    if (generators[static_cast<std::size_t>(g)] == name) return g;
  return -1;
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size();) {
    int l = w[k];
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == l) ++run;
    if (k) os << ' ';
    os << generators[static_cast<std::size_t>(gen_of(l))];
    long long e = l > 0 ? static_cast<long long>(run) : -static_cast<long long>(run);
    if (e != 1) os << '^' << e;
    k += run;
  }
  return os.str();
}

std::string Presentation::format() const {
  std::ostringstream os;
  os << "< ";
  for (int g = 0; g < num_generators(); ++g) os << (g ? ", " : "") << generators[static_cast<std::size_t>(g)];
  os << " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) os << (r ? ", " : "") << format_word(relators[r]);
  os << " >";
  return os.str();
}

namespace {

Word substitute(const Word& w, int x, const Word& def) {
  Word out;
  Word idef = inverse(def);
  for (int l : w) {
    if (gen_of(l) != x) out.push_back(l);
    else {
      const Word& piece = l > 0 ? def : idef;
      out.insert(out.end(), piece.begin(), piece.end());
    }
  }
  return free_reduce(out);
}

void tidy(std::vector<Word>& rels) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (auto& r : rels) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    if (seen.insert(c).second && !seen.count(inverse(c))) out.push_back(c);
  }
  rels = std::move(out);
}

}  // namespace

Simplified simplify(const Presentation& p, int passes) {
  const int n = p.num_generators();
  std::vector<Word> subst(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) subst[static_cast<std::size_t>(g)] = {letter(g, 1)};
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<Word> rels = p.relators;
  tidy(rels);
  for (int pass = 0; pass < passes; ++pass) {
    bool changed = false;
    for (;;) {
      // Shortest relator of length at most two in which a generator occurs once.
      int best = -1, bx = -1;
      for (std::size_t r = 0; r < rels.size(); ++r) {
        if (rels[r].size() > 2) continue;
        if (best >= 0 && rels[r].size() >= rels[static_cast<std::size_t>(best)].size()) continue;
        for (int l : rels[r]) {
          int x = gen_of(l);
          int occ = 0;
          for (int m : rels[r]) occ += gen_of(m) == x;
          if (occ == 1) {
            best = static_cast<int>(r);
            bx = x;
            break;
          }
        }
      }
      if (best < 0) break;
      Word r = rels[static_cast<std::size_t>(best)];
      auto it = std::find_if(r.begin(), r.end(), [&](int l) { return gen_of(l) == bx; });
      std::rotate(r.begin(), it, r.end());
      int sign = r.front() > 0 ? 1 : -1;
      Word rest(r.begin() + 1, r.end());
      Word def = sign > 0 ? inverse(rest) : rest;
      rels.erase(rels.begin() + best);
      for (auto& w : rels) w = substitute(w, bx, def);
      for (auto& w : subst) w = substitute(w, bx, def);
      alive[static_cast<std::size_t>(bx)] = 0;
      tidy(rels);
      changed = true;
    }
    if (!changed) break;
  }
  Simplified out;
  std::vector<int> newidx(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g)
    if (alive[static_cast<std::size_t>(g)]) {
      newidx[static_cast<std::size_t>(g)] = static_cast<int>(out.survivors.size());
      out.survivors.push_back(g);
      out.presentation.generators.push_back(p.generators[static_cast<std::size_t>(g)]);
    }
  auto renumber = [&](const Word& w) {
    Word o;
    for (int l : w) o.push_back(letter(newidx[static_cast<std::size_t>(gen_of(l))], l > 0 ? 1 : -1));
    return o;
  };
  for (const auto& r : rels) out.presentation.relators.push_back(renumber(r));
  for (const auto& w : subst) out.substitution.push_back(renumber(w));
  return out;
}

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m) {
  std::vector<long long> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      long long q = m[i][t] / m[t][t];
      if (q)
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t]) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      long long q = m[t][j] / m[t][t];
      if (q)
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j]) clean = false;
    }
    if (!clean) continue;
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m[i][j] % m[t][t]) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;
    diag.push_back(std::llabs(m[t][t]));
    ++t;
  }
  return diag;
}

std::string Abelianization::format() const {
  std::ostringstream os;
  bool first = true;
  for (long long d : torsion) {
    os << (first ? "" : " x ") << "Z/" << d;
    first = false;
  }
  if (free_rank) {
    os << (first ? "" : " x ") << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  return first ? "1" : os.str();
}

Abelianization abelianization(const Presentation& p) {
  std::size_t n = static_cast<std::size_t>(p.num_generators());
  std::vector<std::vector<long long>> m;
  for (const auto& r : p.relators) {
    std::vector<long long> row(n, 0);
    for (int l : r) row[static_cast<std::size_t>(gen_of(l))] += l > 0 ? 1 : -1;
    m.push_back(row);
  }
  Abelianization a;
  auto d = n ? smith_diagonal(m) : std::vector<long long>{};
  for (long long x : d)
    if (x > 1) a.torsion.push_back(x);
  a.free_rank = static_cast<int>(n - d.size());
  return a;
}

int CosetEnumeration::trace(int c, const Word& w) const {
  for (int l : w) {
    if (c < 0) return -1;
    int col = 2 * gen_of(l) + (l < 0 ? 1 : 0);
    c = table[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)];
  }
  return c;
}

namespace {

class Enumerator {
 public:
  Enumerator(int ngens, std::size_t budget) : ncols_(2 * ngens), budget_(budget) { new_row(); }

  bool overflow() const { return overflow_; }
  bool alive(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  std::size_t rows() const { return t_.size(); }

  void scan_and_fill(int c, const Word& w) {
    if (w.empty()) return;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, col(w[static_cast<std::size_t>(i)])) >= 0) {
        f = at(f, col(w[static_cast<std::size_t>(i)]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, col(-w[static_cast<std::size_t>(j)])) >= 0) {
        b = at(b, col(-w[static_cast<std::size_t>(j)]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, col(w[static_cast<std::size_t>(i)]), b);
        set(b, col(-w[static_cast<std::size_t>(i)]), f);
        return;
      }
      if (define(f, col(w[static_cast<std::size_t>(i)])) < 0) return;
    }
  }

  void fill_row(int c) {
    for (int x = 0; x < ncols_ && alive(c); ++x)
      if (at(c, x) < 0 && define(c, x) < 0) return;
  }

  CosetEnumeration finish(bool complete) {
    CosetEnumeration out;
    out.complete = complete;
    out.rows_defined = t_.size();
    // Renumber live cosets in breadth first order from the subgroup coset.
    std::vector<int> num(t_.size(), -1);
    std::vector<int> order{rep(0)};
    num[static_cast<std::size_t>(order[0])] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int x = 0; x < ncols_; ++x) {
        int d = at(order[k], x);
        if (d < 0) continue;
        d = rep(d);
        if (num[static_cast<std::size_t>(d)] < 0) {
          num[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    for (int c : order) {
      std::vector<int> row(static_cast<std::size_t>(ncols_), -1);
      for (int x = 0; x < ncols_; ++x) {
        int d = at(c, x);
        if (d >= 0) row[static_cast<std::size_t>(x)] = num[static_cast<std::size_t>(rep(d))];
      }
      out.table.push_back(std::move(row));
    }
    return out;
  }

 private:
  static int col(int l) { return 2 * gen_of(l) + (l < 0 ? 1 : 0); }
  int at(int c, int x) const { return t_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]; }
  void set(int c, int x, int d) { t_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] = d; }

  int new_row() {
    t_.emplace_back(static_cast<std::size_t>(ncols_), -1);
    parent_.push_back(static_cast<int>(t_.size()) - 1);
    return static_cast<int>(t_.size()) - 1;
  }

  int define(int c, int x) {
    if (t_.size() >= budget_) {
      overflow_ = true;
      return -1;
    }
    int n = new_row();
    set(c, x, n);
    set(n, x ^ 1, c);
    return n;
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      int n = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = n;
    }
    return r;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    queue_.push_back(b);
  }

  void coincidence(int a, int b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t k = 0; k < queue_.size(); ++k) {
      int e = queue_[k];
      for (int x = 0; x < ncols_; ++x) {
        int f = at(e, x);
        if (f < 0) continue;
        if (at(f, x ^ 1) == e) set(f, x ^ 1, -1);
        int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) merge(f1, at(e1, x));
        else if (at(f1, x ^ 1) >= 0) merge(e1, at(f1, x ^ 1));
        else {
          set(e1, x, f1);
          set(f1, x ^ 1, e1);
        }
      }
    }
  }

  int ncols_;
  std::size_t budget_;
  bool overflow_ = false;
  std::vector<std::vector<int>> t_;
  std::vector<int> parent_;
  std::vector<int> queue_;
};

}  // namespace

CosetEnumeration todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup, std::size_t budget) {
  if (budget == 0) throw PreconditionFailed("budget must be positive");
  Enumerator en(p.num_generators(), budget);
  std::vector<Word> rels;
  for (const auto& r : p.relators) {
    Word c = cyclic_reduce(r);
    if (!c.empty()) rels.push_back(c);
  }
  for (const auto& w : subgroup) {
    en.scan_and_fill(0, free_reduce(w));
    if (en.overflow()) return en.finish(false);
  }
  for (int c = 0; c < static_cast<int>(en.rows()); ++c) {
    for (const auto& r : rels) {
      if (!en.alive(c)) break;
      en.scan_and_fill(c, r);
      if (en.overflow()) return en.finish(false);
    }
    if (en.alive(c)) en.fill_row(c);
    if (en.overflow()) return en.finish(false);
  }
  return en.finish(true);
}

std::vector<Perm> coset_action(const CosetEnumeration& t) {
  if (!t.complete) throw PreconditionFailed("coset table is incomplete");
  std::size_t ngens = t.table.empty() ? 0 : t.table[0].size() / 2;
  std::vector<Perm> out;
  for (std::size_t g = 0; g < ngens; ++g) {
    std::vector<int> img;
    for (const auto& row : t.table) img.push_back(row[2 * g + 1]);
    out.emplace_back(img);
  }
  return out;
}

Perm evaluate(const Word& w, const std::vector<Perm>& images, int degree) {
  Perm r = Perm::identity(degree);
  for (int l : w) {
    const Perm& x = images[static_cast<std::size_t>(gen_of(l))];
    r = r * (l > 0 ? x : x.inverse());
  }
  return r;
}

void check_presentation_hom(const Presentation& p, const std::vector<Perm>& images, const PermGroup& target) {
  if (static_cast<int>(images.size()) != p.num_generators())
    throw NotWellDefined("wrong number of generator images");
  for (const auto& x : images)
    if (!target.contains(x)) throw NotWellDefined("image " + x.cycles() + " outside target");
  for (const auto& r : p.relators)
    if (!evaluate(r, images, target.degree()).is_identity())
      throw NotWellDefined("relator " + p.format_word(r) + " does not map to the identity");
  if (PermGroup(target.degree(), images).order() != target.order())
    throw NotWellDefined("images do not generate the target");
}

}  // namespace cog
