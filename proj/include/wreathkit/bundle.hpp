#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wreathkit/morphism.hpp"

namespace wreathkit {

/// A named collection of spaces and morphisms plus role-tagged structure
/// references. Generators in DSL expressions resolve against the morphism
/// table; `structures` is free-form JSON interpreted per check kind.
struct StructureBundle {
  FieldSpec field = FieldSpec::rationals();
  std::map<std::string, SpaceRef> spaces;
  std::map<std::string, Morphism> morphisms;
  std::map<std::string, nlohmann::json> structures;

  const SpaceRef& space(const std::string& name) const;
  bool has_space(const std::string& name) const { return spaces.count(name) != 0; }
  const Morphism& morphism(const std::string& name) const;
  bool has_morphism(const std::string& name) const { return morphisms.count(name) != 0; }

  void add_space(const SpaceRef& s);
  void add_morphism(const std::string& name, Morphism m);
};

}  // namespace wreathkit
