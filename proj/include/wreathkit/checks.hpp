#pragma once

#include <optional>
#include <string>

#include "wreathkit/bundle.hpp"
#include "wreathkit/hopf.hpp"
#include "wreathkit/oid.hpp"
#include "wreathkit/report.hpp"
#include "wreathkit/serialize.hpp"

namespace wreathkit {

/// Extraction of typed structures from role-tagged bundle references.
AlgebraDatum algebra_from_bundle(const StructureBundle& b, const nlohmann::json& ref);
WreathDatum wreath_from_bundle(const StructureBundle& b);
CowreathDatum cowreath_from_bundle(const StructureBundle& b);
WeakBialgebra weak_from_bundle(const StructureBundle& b);
LeftBialgebroid left_bialgebroid_from_bundle(const StructureBundle& b,
                                             const nlohmann::json& ref);
RightBialgebroid right_bialgebroid_from_bundle(const StructureBundle& b,
                                               const nlohmann::json& ref);
DoiKoppinenDatum dk_from_bundle(const StructureBundle& b);
QuasiBialgebra quasi_from_bundle(const StructureBundle& b);

/// cmd_check: dispatches on kind ∈ {algebra, coalgebra, em-object, entwining,
/// wreath, cowreath, weak, bialgebroid, measuring, dk, ring, coring}.
CheckReport run_check(const std::string& kind, const StructureBundle& b);

/// cmd_build: what ∈ {wreath-product, ring, coring, recover}. The verdict
/// string is non-empty for `recover`.
struct BuildResult {
  StructureBundle bundle;
  std::string verdict;
};

BuildResult run_build(const std::string& what, const StructureBundle& b);

/// Bundle assembly helpers shared by the catalog and build commands.
StructureBundle bundle_of_wreath(const WreathDatum& d);
StructureBundle bundle_of_cowreath(const CowreathDatum& d);

}  // namespace wreathkit
