#include "wreathkit/bundle.hpp"

#include <nlohmann/json.hpp>

#include "wreathkit/errors.hpp"

namespace wreathkit {

const SpaceRef& StructureBundle::space(const std::string& name) const {
  auto it = spaces.find(name);
  if (it == spaces.end()) throw BundleError("no space named '" + name + "'");
  return it->second;
}

const Morphism& StructureBundle::morphism(const std::string& name) const {
  auto it = morphisms.find(name);
  if (it == morphisms.end()) throw UnboundGenerator(name);
  return it->second;
}

void StructureBundle::add_space(const SpaceRef& s) {
  if (s.dim < 1) throw BundleError("space '" + s.name + "' has dim < 1");
  if (s.name == "I" && s.dim != 1) throw BundleError("reserved unit space I must have dim 1");
  auto [it, inserted] = spaces.emplace(s.name, s);
  if (!inserted && it->second.dim != s.dim)
    throw BundleError("space '" + s.name + "' redeclared with different dim");
}

void StructureBundle::add_morphism(const std::string& name, Morphism m) {
  if (m.field() != field)
    throw FieldMismatch("morphism '" + name + "' over " + m.field().str() + ", bundle over " +
                        field.str());
  for (const auto& s : m.dom()) add_space(s);
  for (const auto& s : m.cod()) add_space(s);
  morphisms.insert_or_assign(name, std::move(m));
}

}  // namespace wreathkit
