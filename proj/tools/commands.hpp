#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fbrooks/error.hpp"
#include "fbrooks/graph.hpp"

namespace fbrooks::cli {

// Named constructors:
//   Kn:5  Cn:7  Pn:4  CnPow:8,2  Qn:3  Petersen
//   C8^2 (any Cn^k)  C5xK2 (any CnxKm, strong product)  K5  C7
//   StrongProd:<g6>,<g6>  catalog:NAME  RandomK4free:n,maxdeg (uses the seed)
// Anything else is read as graph6 or, when it contains whitespace, an edge list.
Graph parse_graph_spec(std::string_view spec, std::uint64_t seed = 1);

// Exactly one of spec / file; a file "-" or neither means standard input.
Graph load_graph(const std::optional<std::string>& spec, const std::optional<std::string>& file,
                 std::uint64_t seed);

std::string read_text(const std::string& path);  // "-" is standard input

// 0 ok, 1 domain error, 2 usage or parse error, 3 resource limit
int exit_code(ErrorCode code);

nlohmann::ordered_json error_json(const Error& e);

// FBROOKS_NODE_BUDGET when set, else the default.
SearchBudget budget_from_env();

}  // namespace fbrooks::cli
