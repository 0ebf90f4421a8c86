#include "isocut/json.hpp"

namespace isocut {

nlohmann::json to_json(const CutReport& report) {
  return {
      {"set_size", report.set_size},
      {"cut_size", report.cut_size},
      {"internal_edges", report.internal_edges},
      {"complement_internal_edges", report.complement_internal_edges},
      {"side_connected", report.side_connected},
      {"complement_connected", report.complement_connected},
      {"component_sizes",
       {{"side", report.side_component_sizes}, {"complement", report.complement_component_sizes}}},
  };
}

nlohmann::json to_json(const LBaseDecomposition& decomposition) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [a, b] : decomposition.terms()) {
    terms.push_back({{"coefficient", a}, {"exponent", b}});
  }
  return {{"radix", decomposition.radix()}, {"text", decomposition.to_string()}, {"terms", terms}};
}

nlohmann::json to_json(const EnumerationStats& stats) {
  return {{"subsets_visited", stats.subsets_visited},
          {"wall_seconds", stats.wall_seconds},
          {"threads", stats.threads},
          {"kernel", stats.kernel}};
}

nlohmann::json to_json(const Graph& graph, const FragmentResult& result) {
  nlohmann::json out = to_json(evaluate_cut(graph, result.witness));
  out["optimum"] = result.optimum;
  out["atom_size"] = result.atom_size;
  out["witness"] = result.witness.members();
  out["stats"] = to_json(result.stats);
  return out;
}

} // namespace isocut
