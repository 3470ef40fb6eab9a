#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cog/error.hpp"
#include "cog/perm_group.hpp"

namespace cog {

struct EdgeRecord {
  std::string id, i, t;  // initial and terminal vertex ids
};

struct CompositionRecord {
  std::string a, b, ab;
};

// Unchecked description of a small category without loops.
struct ScwolData {
  std::vector<std::string> vertices;
  std::vector<EdgeRecord> edges;
  std::vector<CompositionRecord> compositions;
};

// Checks ids, endpoints, loops, totality, endpoint rules and associativity.
Report validate_scwol(const ScwolData& d);

// Validated scwol. Vertices and edges are indexed in lexicographic id order.
class Scwol {
 public:
  static Scwol build(const ScwolData& d);  // throws InvalidInput with the report

  int num_vertices() const { return static_cast<int>(vid_.size()); }
  int num_edges() const { return static_cast<int>(eid_.size()); }
  const std::string& vertex_id(int v) const { return vid_[static_cast<std::size_t>(v)]; }
  const std::string& edge_id(int e) const { return eid_[static_cast<std::size_t>(e)]; }
  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
  std::optional<int> find_vertex(const std::string& id) const;
  std::optional<int> find_edge(const std::string& id) const;

  int initial(int e) const { return ini_[static_cast<std::size_t>(e)]; }
  int terminal(int e) const { return ter_[static_cast<std::size_t>(e)]; }
  // ab for i(a) = t(b); nullopt otherwise.
  std::optional<int> compose(int a, int b) const;
  const std::vector<std::pair<int, int>>& composable_pairs() const { return pairs_; }
  const std::vector<int>& out_edges(int v) const { return out_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& in_edges(int v) const { return in_[static_cast<std::size_t>(v)]; }

  ScwolData data() const;
  // Position of a vertex or edge in the combined V then E index set.
  int cell_of_vertex(int v) const { return v; }
  int cell_of_edge(int e) const { return num_vertices() + e; }
  int num_cells() const { return num_vertices() + num_edges(); }

 private:
  std::vector<std::string> vid_, eid_;
  std::map<std::string, int> vindex_, eindex_;
  std::vector<int> ini_, ter_;
  std::map<std::pair<int, int>, int> comp_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<int>> out_, in_;
};

using ScwolPtr = std::shared_ptr<const Scwol>;

// Chains of k composable edges (a1..ak) with i(a_j) = t(a_{j+1}); k = 0 gives vertices.
std::vector<std::vector<int>> chains(const Scwol& s, int k);

// Cells with their codimension-one faces; the face order is the transitive closure.
struct CellComplex {
  std::vector<std::string> cells;
  std::map<std::string, std::vector<std::string>> faces;
};

// One edge per strict face pair T < S with initial vertex S and terminal vertex T.
Scwol scwol_from_complex(const CellComplex& c);
Scwol barycentric_subdivision(const Scwol& s);

struct MorphismFlags {
  bool valid = false;
  bool nondegenerate = false;
  bool covering = false;
  Report report;
};

class ScwolMorphism {
 public:
  ScwolMorphism() = default;
  ScwolMorphism(ScwolPtr source, ScwolPtr target, std::vector<int> vertex_map, std::vector<int> edge_map);
  static ScwolMorphism identity(ScwolPtr s);

  const ScwolPtr& source() const { return src_; }
  const ScwolPtr& target() const { return tgt_; }
  int vertex(int v) const { return vmap_[static_cast<std::size_t>(v)]; }
  int edge(int e) const { return emap_[static_cast<std::size_t>(e)]; }
  const std::vector<int>& vertex_map() const { return vmap_; }
  const std::vector<int>& edge_map() const { return emap_; }

  ScwolMorphism then(const ScwolMorphism& next) const;
  bool is_isomorphism() const;
  ScwolMorphism inverse() const;
  bool operator==(const ScwolMorphism& o) const { return vmap_ == o.vmap_ && emap_ == o.emap_; }

 private:
  ScwolPtr src_, tgt_;
  std::vector<int> vmap_, emap_;
};

MorphismFlags check_morphism(const ScwolMorphism& m);

// Connected components of the underlying graph, as sorted vertex id lists.
std::vector<std::vector<std::string>> connected_components(const Scwol& s);
bool is_connected(const Scwol& s);

enum class Certificate { Yes, No, Unknown };
const char* to_string(Certificate c);

constexpr std::size_t kDefaultBudget = 100000;
Certificate simple_connectivity(const Scwol& s, std::size_t budget = kDefaultBudget);

// Breadth first spanning tree from vertex 0, taking edges in index order.
std::vector<int> canonical_spanning_tree(const Scwol& s);
bool is_spanning_tree(const Scwol& s, const std::vector<int>& edges);
// Every spanning tree; throws CapExceeded past the cap.
std::vector<std::vector<int>> all_spanning_trees(const Scwol& s, std::size_t cap = 5000);

// Automorphism group acting on the combined V then E index set.
PermGroup automorphism_group(const Scwol& s);
// Checks that a permutation of V then E is a scwol automorphism.
bool is_automorphism(const Scwol& s, const Perm& p);

}  // namespace cog
