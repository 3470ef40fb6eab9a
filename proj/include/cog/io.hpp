#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "cog/action.hpp"
#include "cog/complex.hpp"
#include "cog/development.hpp"
#include "cog/presentation.hpp"

namespace cog::io {

using Json = nlohmann::json;

Json load_json(const std::filesystem::path& path);

// Nested values may be given inline or as a path relative to the referring file.
class Loader {
 public:
  explicit Loader(std::filesystem::path dir = ".") : dir_(std::move(dir)) {}
  static Loader for_file(const std::filesystem::path& file) { return Loader(file.parent_path()); }
  Json resolve(const Json& v) const;
  Loader nested(const Json& v) const;

 private:
  std::filesystem::path dir_;
};

Json perm_json(const Perm& p);
Perm perm_from_json(const Json& j, std::size_t degree);

// Arrays sorted by id. Input may also be {"cells": [...], "faces": {...}}.
Json to_json(const Scwol& s);
ScwolData scwol_data_from_json(const Json& j);
ScwolPtr scwol_from_json(const Json& j);

Json to_json(const PermGroup& g);
PermGroup group_from_json(const Json& j);

Json to_json(const ComplexOfGroups& c);
CogPtr complex_from_json(const Json& j, const Loader& l = Loader());

// {"scwol", "group", "vertex_action", "edge_action"}; "group": "automorphisms"
// takes the full automorphism group. Missing edge actions are derived from
// vertex actions when every edge is determined by its endpoints.
Json to_json(const ScwolAction& a);
ActionPtr action_from_json(const Json& j, const Loader& l = Loader());

// Subgroup of an automorphism action from generators given on cells or on vertices.
PermGroup subgroup_from_json(const ScwolAction& full, const Json& j);

Json to_json(const CogMorphism& m);
CogMorphism morphism_from_json(const Json& j, const Loader& l = Loader());
Json to_json(const GroupMorphism& m);
GroupMorphism group_morphism_from_json(const Json& j, const Loader& l = Loader());

Json to_json(const Report& r);
Json to_json(const Presentation& p);
Json to_json(const Abelianization& a);

// Vertex map of an automorphism acting by a cell permutation.
Json vertex_map_json(const Scwol& s, const Perm& cells);

std::string to_dot(const Scwol& s);

}  // namespace cog::io
