#pragma once

#include <json.hpp>

#include "isocut/closedform.hpp"
#include "isocut/construct.hpp"
#include "isocut/oracle.hpp"

namespace isocut {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const CutReport& report);
nlohmann::json to_json(const LBaseDecomposition& decomposition);
nlohmann::json to_json(const EnumerationStats& stats);

/// Cut report of the witness plus witness ids, optimum, atom size and
/// enumeration statistics.
nlohmann::json to_json(const Graph& graph, const FragmentResult& result);

} // namespace isocut
