#pragma once

#include <optional>
#include <vector>

#include "fbrooks/error.hpp"
#include "fbrooks/graph.hpp"

namespace fbrooks {

// mapping[v] = image in h of vertex v of g
using Mapping = std::vector<Vertex>;

std::optional<Mapping> find_isomorphism(const Graph& g, const Graph& h,
                                        SearchBudget budget = {});
bool is_isomorphic(const Graph& g, const Graph& h, SearchBudget budget = {});

// Automorphism sending `from` to `to`, if any.
std::optional<Mapping> find_automorphism(const Graph& g, Vertex from, Vertex to,
                                         SearchBudget budget = {});
bool is_vertex_transitive(const Graph& g, SearchBudget budget = {});

enum class CopyMode { kInduced, kSubgraph };

// One embedding (pattern vertex -> host vertex) per distinct host vertex set.
std::vector<Mapping> find_copies(const Graph& host, const Graph& pattern,
                                 CopyMode mode, SearchBudget budget = {});
std::vector<Mapping> find_induced_copies(const Graph& host, const Graph& pattern,
                                         SearchBudget budget = {});
// First embedding found, if any.
std::optional<Mapping> find_copy(const Graph& host, const Graph& pattern,
                                 CopyMode mode, SearchBudget budget = {});

// Stable colour refinement, run jointly on both graphs so colours compare.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Graph& g,
                                                            const Graph& h);

}  // namespace fbrooks
