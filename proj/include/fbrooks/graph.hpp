#pragma once

#include <bitset>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace fbrooks {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  bool contains(Vertex v) const;
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  const std::vector<Vertex>& members() const noexcept { return ids_; }

  void insert(Vertex v);
  VertexSet unite(const VertexSet& other) const;
  VertexSet intersect(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> ids_;
};

// Bit masks over vertex ids, used by the exact searches.
inline constexpr int kMaskCapacity = 256;
using VertexMask = std::bitset<kMaskCapacity>;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }

  std::vector<Edge> edges() const;
  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  void build(std::span<const Edge> edges);
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
};

// Adjacency masks; throws size-out-of-range when n exceeds kMaskCapacity.
std::vector<VertexMask> adjacency_masks(const Graph& g);
VertexMask to_mask(const VertexSet& s);
VertexSet from_mask(const VertexMask& m);

// Basic constructors.
Graph make_empty(int n);
Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_path(int n);
Graph cycle_power(int n, int k);
Graph make_petersen();
Graph make_hypercube(int dim);

Graph complement(const Graph& g);
Graph strong_product(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
// new_id[v] is the id of v in the result; must be a permutation
Graph relabel(const Graph& g, std::span<const Vertex> new_id);

struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // subgraph id -> parent id
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Subgraph delete_vertices(const Graph& g, const VertexSet& drop);

struct Contraction {
  Graph graph;
  Vertex fat = 0;
  std::vector<Vertex> map;  // parent id -> id in graph
};

// G/S. The fat vertex takes the smallest id of S; other ids are compacted.
Contraction contract(const Graph& g, const VertexSet& s);
// Contracts several disjoint sets in sequence; returns the final graph and
// the composed map.
Contraction contract_all(const Graph& g, std::span<const VertexSet> sets);

int max_degree(const Graph& g);
int min_degree(const Graph& g);
bool is_regular(const Graph& g);
int edges_between(const Graph& g, const VertexSet& s, const VertexSet& t);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
VertexSet neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, Vertex v);

}  // namespace fbrooks
