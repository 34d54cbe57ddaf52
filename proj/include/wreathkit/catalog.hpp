#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreathkit/bundle.hpp"

namespace wreathkit {

/// Names addressable through `wreathkit examples <name>`.
std::vector<std::string> example_names();

/// Deterministic for a given (name, field, seed). Every entry self-checks
/// before it is returned and throws on inconsistency; FieldIncompatible when
/// the field cannot carry the structure (e.g. char 2 for a nontrivial Φ).
StructureBundle make_example(const std::string& name, const FieldSpec& field,
                             std::uint64_t seed);

}  // namespace wreathkit
