#pragma once

#include <optional>
#include <vector>

#include "fbrooks/error.hpp"
#include "fbrooks/graph.hpp"

namespace fbrooks {

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

struct BlockDecomposition {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
};

BlockDecomposition blocks(const Graph& g);
bool is_gallai_tree(const Graph& g);    // throws not-connected
bool is_gallai_forest(const Graph& g);  // every component is a Gallai tree

// Exact clique / independence search (branch and bound with a greedy
// coloring bound). Exceeding the budget throws ResourceLimitError with the
// bounds known at that point.
VertexSet max_clique(const Graph& g, SearchBudget budget = {});
int clique_number(const Graph& g, SearchBudget budget = {});
VertexSet max_independent_set(const Graph& g, SearchBudget budget = {});
int independence_number(const Graph& g, SearchBudget budget = {});

// All maximal independent sets, sorted lexicographically.
std::vector<VertexSet> max_independent_sets(const Graph& g,
                                            SearchBudget budget = {});
// All maximal cliques, sorted lexicographically.
std::vector<VertexSet> maximal_cliques(const Graph& g, SearchBudget budget = {});
// All cliques of maximum size.
std::vector<VertexSet> maximum_cliques(const Graph& g, SearchBudget budget = {});
// All cliques with exactly k vertices.
std::vector<VertexSet> cliques_of_size(const Graph& g, int k);
std::optional<VertexSet> find_clique_of_size(const Graph& g, int k);

struct CliqueComponent {
  VertexSet vertices;
  std::vector<Edge> edges;
};

// Components of the subgraph formed by the edges lying in some K_k.
std::vector<CliqueComponent> clique_graph_components(const Graph& g, int k);

// Proper coloring with colors 0..k-1 by DSATUR backtracking, or nullopt when
// none exists.
std::optional<std::vector<int>> find_proper_coloring(const Graph& g, int k,
                                                     SearchBudget budget = {});
int chromatic_number(const Graph& g, SearchBudget budget = {});
bool is_proper_coloring(const Graph& g, const std::vector<int>& color);

// Order in which repeatedly removing a minimum-degree vertex leaves the
// graph; reversed, every vertex has at most degeneracy earlier neighbours.
std::vector<Vertex> smallest_last_order(const Graph& g);

}  // namespace fbrooks
