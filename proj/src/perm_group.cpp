#include "cog/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace cog {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || static_cast<std::size_t>(x) >= img_.size() || seen[static_cast<std::size_t>(x)])
      throw InvalidInput("image array is not a permutation");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> v(static_cast<std::size_t>(degree));
  std::iota(v.begin(), v.end(), 0);
  Perm p;
  p.img_ = std::move(v);
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (rhs.img_.size() != img_.size()) throw InvalidInput("degree mismatch in product");
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    r.img_[x] = img_[static_cast<std::size_t>(rhs.img_[x])];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) r.img_[static_cast<std::size_t>(img_[x])] = static_cast<int>(x);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != static_cast<int>(x)) return false;
  return true;
}

std::size_t Perm::order() const {
  std::size_t o = 1;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(img_[y])) {
      seen[y] = 1;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

std::string Perm::cycles() const {
  std::ostringstream os;
  std::vector<char> seen(img_.size(), 0);
  bool any = false;
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == static_cast<int>(x)) continue;
    os << '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(img_[y])) {
      seen[y] = 1;
      if (!first) os << ' ';
      os << y;
      first = false;
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "()";
}

Perm pow(const Perm& p, long long e) {
  Perm base = e < 0 ? p.inverse() : p;
  if (e < 0) e = -e;
  Perm r = Perm::identity(p.degree());
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::size_t cap) : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw InvalidInput("generator degree mismatch");
    if (!g.is_identity()) gens_.push_back(std::move(g));
  }
  std::set<Perm> found{Perm::identity(degree)};
  std::deque<Perm> queue{Perm::identity(degree)};
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens_) {
      Perm y = s * x;
      if (found.insert(y).second) {
        if (found.size() > cap)
          throw CapExceeded("group order exceeds element cap " + std::to_string(cap));
        queue.push_back(std::move(y));
      }
    }
  }
  elems_.assign(found.begin(), found.end());
  for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
}

PermGroup PermGroup::symmetric(int degree) {
  std::vector<Perm> gens;
  if (degree >= 2) {
    std::vector<int> t(static_cast<std::size_t>(degree)), c(static_cast<std::size_t>(degree));
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % degree;
    gens = {Perm(t), Perm(c)};
  }
  return PermGroup(degree, gens);
}

PermGroup PermGroup::from_elements(int degree, const std::vector<Perm>& elements) {
  std::set<Perm> s(elements.begin(), elements.end());
  s.insert(Perm::identity(degree));
  for (const auto& a : s)
    for (const auto& b : s)
      if (!s.count(a * b)) throw NotSubgroup("element set is not closed under products");
  PermGroup g(degree, std::vector<Perm>(s.begin(), s.end()));
  return g;
}

std::size_t PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw NotSubgroup("element " + p.cycles() + " is not in the group");
  return it->second;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (other.degree_ != degree_) return false;
  for (const auto& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

std::string PermGroup::describe() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].cycles();
  os << "> of order " << order();
  return os.str();
}

std::vector<Coset> left_cosets(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g)) throw NotSubgroup("coset computation needs a subgroup");
  std::vector<Coset> out;
  std::vector<char> used(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (used[i]) continue;
    Coset c;
    c.rep = g.element(i);
    for (const auto& y : h.elements()) {
      Perm m = c.rep * y;
      used[g.index_of(m)] = 1;
      c.members.push_back(std::move(m));
    }
    std::sort(c.members.begin(), c.members.end());
    c.rep = c.members.front();
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Coset& a, const Coset& b) { return a.rep < b.rep; });
  return out;
}

std::vector<std::size_t> coset_labels(const PermGroup& g, const std::vector<Coset>& cosets) {
  std::vector<std::size_t> lab(g.order(), 0);
  for (std::size_t c = 0; c < cosets.size(); ++c)
    for (const auto& m : cosets[c].members) lab[g.index_of(m)] = c;
  return lab;
}

PermGroup conjugate(const PermGroup& h, const Perm& x) {
  std::vector<Perm> gens;
  Perm xi = x.inverse();
  for (const auto& s : h.generators()) gens.push_back(x * s * xi);
  return PermGroup(h.degree(), gens);
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  for (const auto& x : g.generators())
    for (const auto& s : h.generators())
      if (!h.contains(x * s * x.inverse())) return false;
  return true;
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> common;
  for (const auto& x : a.elements())
    if (b.contains(x)) common.push_back(x);
  return PermGroup(a.degree(), common);
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup(a.degree(), gens);
}

PermGroup centralizer_of_set(const PermGroup& g, const std::vector<Perm>& s) {
  std::vector<Perm> c;
  for (const auto& x : g.elements()) {
    bool ok = true;
    for (const auto& y : s)
      if (x * y != y * x) { ok = false; break; }
    if (ok) c.push_back(x);
  }
  return PermGroup(g.degree(), c);
}

std::vector<PermGroup> all_subgroups(const PermGroup& g, std::size_t cap) {
  // Every subgroup is reached by adjoining one element at a time.
  std::map<std::vector<Perm>, PermGroup> found;
  std::deque<PermGroup> queue;
  PermGroup triv = PermGroup::trivial(g.degree());
  found.emplace(triv.elements(), triv);
  queue.push_back(triv);
  while (!queue.empty()) {
    PermGroup h = queue.front();
    queue.pop_front();
    for (const auto& x : g.elements()) {
      if (h.contains(x)) continue;
      std::vector<Perm> gens = h.generators();
      gens.push_back(x);
      PermGroup k(g.degree(), gens);
      if (found.count(k.elements())) continue;
      if (found.size() >= cap) throw CapExceeded("subgroup lattice exceeds cap");
      found.emplace(k.elements(), k);
      queue.push_back(k);
    }
  }
  std::vector<PermGroup> out;
  for (auto& [k, v] : found) out.push_back(v);
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<Perm> bfs_elements(const PermGroup& g) {
  std::vector<Perm> out{g.identity()};
  std::set<Perm> seen{g.identity()};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& s : g.generators()) {
      Perm y = out[i] * s;
      if (seen.insert(y).second) out.push_back(y);
    }
  return out;
}

const Perm* find_element(const PermGroup& g, const std::function<bool(const Perm&)>& pred) {
  for (const auto& x : bfs_elements(g))
    if (pred(x)) return &g.element(g.index_of(x));
  return nullptr;
}

GroupHom::GroupHom(PermGroup source, PermGroup target, const std::vector<Perm>& generator_images)
    : src_(std::move(source)), tgt_(std::move(target)) {
  const auto& gens = src_.generators();
  if (generator_images.size() != gens.size())
    throw NotWellDefined("wrong number of generator images");
  for (const auto& y : generator_images)
    if (!tgt_.contains(y)) throw NotWellDefined("generator image " + y.cycles() + " outside target");
  std::vector<char> set(src_.order(), 0);
  table_.assign(src_.order(), tgt_.identity());
  set[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t xi = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::size_t yi = src_.index_of(gens[k] * src_.element(xi));
      Perm img = generator_images[k] * table_[xi];
      if (!set[yi]) {
        set[yi] = 1;
        table_[yi] = std::move(img);
        queue.push_back(yi);
      } else if (table_[yi] != img) {
        throw NotWellDefined("generator images violate a relation of the source group");
      }
    }
  }
  // Closing every (generator, element) square already forces multiplicativity;
  // small groups also get the full table check.
  if (src_.order() <= 400)
    for (std::size_t a = 0; a < src_.order(); ++a)
      for (std::size_t b = 0; b < src_.order(); ++b)
        if (table_[src_.index_of(src_.element(a) * src_.element(b))] != table_[a] * table_[b])
          throw NotWellDefined("map is not multiplicative");
}

GroupHom GroupHom::from_function(PermGroup source, PermGroup target,
                                 const std::function<Perm(const Perm&)>& f) {
  std::vector<Perm> imgs;
  for (const auto& s : source.generators()) imgs.push_back(f(s));
  GroupHom h(std::move(source), std::move(target), imgs);
  for (const auto& x : h.src_.elements())
    if (h(x) != f(x)) throw NotWellDefined("function is not a homomorphism");
  return h;
}

GroupHom GroupHom::identity(const PermGroup& g) { return GroupHom(g, g, g.generators()); }

GroupHom GroupHom::inclusion(const PermGroup& sub, const PermGroup& g) {
  return GroupHom(sub, g, sub.generators());
}

Perm GroupHom::operator()(const Perm& x) const { return table_[src_.index_of(x)]; }

bool GroupHom::injective() const {
  std::set<Perm> s(table_.begin(), table_.end());
  return s.size() == table_.size();
}

bool GroupHom::surjective() const { return image().order() == tgt_.order(); }

PermGroup GroupHom::image() const {
  std::vector<Perm> gens;
  for (const auto& s : src_.generators()) gens.push_back((*this)(s));
  return PermGroup(tgt_.degree(), gens);
}

PermGroup GroupHom::kernel() const {
  std::vector<Perm> k;
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i].is_identity()) k.push_back(src_.element(i));
  return PermGroup(src_.degree(), k);
}

GroupHom GroupHom::then(const GroupHom& next) const {
  if (!(tgt_ == next.src_)) throw NotWellDefined("composition of homomorphisms with mismatched groups");
  std::vector<Perm> imgs;
  for (const auto& s : src_.generators()) imgs.push_back(next((*this)(s)));
  return GroupHom(src_, next.tgt_, imgs);
}

GroupHom GroupHom::inverse() const {
  if (!injective() || !surjective()) throw NotWellDefined("inverse of a non-bijective homomorphism");
  std::map<Perm, Perm> inv;
  for (std::size_t i = 0; i < table_.size(); ++i) inv.emplace(table_[i], src_.element(i));
  std::vector<Perm> imgs;
  for (const auto& s : tgt_.generators()) imgs.push_back(inv.at(s));
  return GroupHom(tgt_, src_, imgs);
}

}  // namespace cog
