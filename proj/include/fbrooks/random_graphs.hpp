#pragma once

#include <random>

#include "fbrooks/graph.hpp"

namespace fbrooks {

// Connected graph on n vertices with maximum degree <= max_degree and no
// K4: a random spanning tree, then random extra edges that keep both
// properties. `fill` in [0,1] scales how many extra edges are attempted.
Graph random_k4free_graph(int n, int max_degree, double fill, std::mt19937_64& rng);

// Erdos-Renyi G(n, p).
Graph random_gnp(int n, double p, std::mt19937_64& rng);

// Uniformly random relabeling.
Graph shuffle_labels(const Graph& g, std::mt19937_64& rng);

}  // namespace fbrooks
