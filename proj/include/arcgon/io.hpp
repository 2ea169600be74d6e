#pragma once

#include <string>

#include "json.hpp"

#include "arcgon/diagram.hpp"
#include "arcgon/mutation.hpp"
#include "arcgon/ncpart.hpp"
#include "arcgon/ptolemy.hpp"

namespace arcgon {

/// Parse a diagram from JSON bytes. Accepts the window schema
///   {"format":1,"w":-2,"mode":"window",
///    "window":{"lo":-1,"hi":5,"boundary":"sealed"},"arcs":[[2,0],[4,-1]]}
/// and the periodic schema
///   {"mode":"periodic","period":2,"arcs":[[1,0]]}.
/// "w" may be omitted when `fallback_w` is provided (CLI --w).
/// Validation failures throw std::invalid_argument with a JSON-pointer
/// style path to the offending element.
Diagram parse_diagram(const std::string& bytes,
                      std::optional<std::int64_t> fallback_w = std::nullopt);

nlohmann::json diagram_to_json(const Diagram& d);

nlohmann::json class_report_to_json(const Diagram& d, const ClassReport& rep);
nlohmann::json closure_to_json(const ClosureResult& res, bool with_levels);
nlohmann::json fan_to_json(const MutationFan& fan);
nlohmann::json approx_steps_to_json(const std::vector<ApproxStep>& steps);
nlohmann::json fountain_to_json(const FountainReport& rep);
nlohmann::json nc_bridge_to_json(const NcBridge& bridge);
nlohmann::json graph_to_json(const MutationGraph& g);

/// DOT text export of a mutation graph (nodes labelled by arc lists and
/// outer-isolated counts).
std::string graph_to_dot(const MutationGraph& g);

}  // namespace arcgon
