#pragma once

#include <json.hpp>

#include "fbrooks/fold.hpp"
#include "fbrooks/fractional.hpp"
#include "fbrooks/graph.hpp"

namespace fbrooks {

// {"graph": g6, "a": int, "b": int, "assignment": {"v": [colors]}}
nlohmann::ordered_json fold_to_json(const Graph& g, const FoldColoring& c);
// Returns the graph named in the file together with the coloring.
std::pair<Graph, FoldColoring> fold_from_json(const nlohmann::json& j);

// {"graph": g6, "chi_f": "p/q", "primal": [{"set": [...], "weight": "p/q"}], "dual": [...]}
nlohmann::ordered_json fractional_to_json(const Graph& g, const FractionalSolution& s);
FractionalSolution fractional_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const VertexSet& s);

}  // namespace fbrooks
