#include "fbrooks/random_graphs.hpp"

#include <algorithm>
#include <numeric>

#include "fbrooks/error.hpp"

namespace fbrooks {

namespace {

bool closes_k4(const std::vector<std::vector<char>>& adj, int u, int v) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> common;
  for (int w = 0; w < n; ++w)
    if (adj[u][w] && adj[v][w]) common.push_back(w);
  for (std::size_t i = 0; i < common.size(); ++i)
    for (std::size_t j = i + 1; j < common.size(); ++j)
      if (adj[common[i]][common[j]]) return true;
  return false;
}

}  // namespace

Graph random_k4free_graph(int n, int max_degree, double fill, std::mt19937_64& rng) {
  if (n < 1) throw Error(ErrorCode::kSizeOutOfRange, "need at least one vertex");
  if (max_degree < 2 && n > 2)
    throw Error(ErrorCode::kInvalidArgument, "max degree too small for a connected graph");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<int> deg(n, 0);
  std::vector<Edge> edges;
  auto add = [&](int u, int v) {
    adj[u][v] = adj[v][u] = 1;
    ++deg[u];
    ++deg[v];
    edges.push_back({u, v});
  };

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::vector<int> open;
    for (int j = 0; j < i; ++j)
      if (deg[order[j]] < max_degree) open.push_back(order[j]);
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    add(order[i], open[pick(rng)]);
  }

  const int attempts = static_cast<int>(fill * n * max_degree);
  std::uniform_int_distribution<int> vert(0, n - 1);
  for (int t = 0; t < attempts; ++t) {
    int u = vert(rng), v = vert(rng);
    if (u == v || adj[u][v] || deg[u] >= max_degree || deg[v] >= max_degree) continue;
    if (closes_k4(adj, u, v)) continue;
    add(u, v);
  }
  return Graph(n, edges);
}

Graph random_gnp(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return Graph(n, edges);
}

Graph shuffle_labels(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace fbrooks
