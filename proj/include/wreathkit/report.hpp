#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wreathkit/morphism.hpp"

namespace wreathkit {

/// Per-axiom verdict. `first_violation` holds the first violating basis
/// coordinates (cod multi-index, dom multi-index) when the axiom fails;
/// `residual` is lhs - rhs.
struct CheckItem {
  std::string id;       // axiom id, e.g. "wr4"
  std::string tag;      // paper tag, e.g. "eq:apdf1.2"
  bool pass = false;
  std::optional<std::vector<std::int64_t>> violation_cod;
  std::optional<std::vector<std::int64_t>> violation_dom;
  std::optional<Morphism> residual;
};

struct CheckReport {
  std::string structure;  // structure name
  std::string kind;       // e.g. "wreath"
  std::vector<CheckItem> items;
  double wall_ms = 0.0;

  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  const CheckItem* find(const std::string& id) const {
    for (const auto& it : items)
      if (it.id == id) return &it;
    return nullptr;
  }
  std::vector<bool> verdict_vector() const {
    std::vector<bool> v;
    v.reserve(items.size());
    for (const auto& it : items) v.push_back(it.pass);
    return v;
  }
};

std::vector<std::int64_t> unflatten_index(std::int64_t flat, const std::vector<SpaceRef>& spaces);

/// Builds a CheckItem by comparing lhs and rhs exactly.
CheckItem check_item(const std::string& id, const std::string& tag, const Morphism& lhs,
                     const Morphism& rhs);
CheckItem boolean_item(const std::string& id, const std::string& tag, bool pass);

}  // namespace wreathkit
