#include "fbrooks/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fbrooks/error.hpp"

namespace fbrooks {

// ---- VertexSet ----

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

VertexSet VertexSet::unite(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_union(begin(), end(), other.begin(), other.end(),
                 std::back_inserter(out));
  VertexSet r;
  r.ids_ = std::move(out);
  return r;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_intersection(begin(), end(), other.begin(), other.end(),
                        std::back_inserter(out));
  VertexSet r;
  r.ids_ = std::move(out);
  return r;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(begin(), end(), other.begin(), other.end(),
                      std::back_inserter(out));
  VertexSet r;
  r.ids_ = std::move(out);
  return r;
}

// ---- Graph ----

Graph::Graph(int order) {
  if (order < 0) throw Error(ErrorCode::kSizeOutOfRange, "negative order");
  n_ = order;
  build({});
}

Graph::Graph(int order, std::span<const Edge> edges) {
  if (order < 0) throw Error(ErrorCode::kSizeOutOfRange, "negative order");
  n_ = order;
  build(edges);
}

Graph::Graph(int order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw Error(ErrorCode::kInvalidVertex,
                "vertex " + std::to_string(v) + " out of range for order " +
                    std::to_string(n_));
}

void Graph::build(std::span<const Edge> edges) {
  words_ = (n_ + 63) / 64;
  adj_.assign(n_, {});
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  m_ = 0;
  for (const Edge& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v)
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop at vertex " + std::to_string(e.u));
    if (adjacent(e.u, e.v)) continue;
    bits_[static_cast<std::size_t>(e.u) * words_ + e.v / 64] |=
        std::uint64_t{1} << (e.v % 64);
    bits_[static_cast<std::size_t>(e.v) * words_ + e.u / 64] |=
        std::uint64_t{1} << (e.u % 64);
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    ++m_;
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  auto e = edges();
  e.push_back({u, v});
  return Graph(n_, e);
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  auto e = edges();
  Edge key{std::min(u, v), std::max(u, v)};
  e.erase(std::remove(e.begin(), e.end(), key), e.end());
  return Graph(n_, e);
}

// ---- masks ----

std::vector<VertexMask> adjacency_masks(const Graph& g) {
  if (g.order() > kMaskCapacity)
    throw Error(ErrorCode::kSizeOutOfRange,
                "exact search supports at most " +
                    std::to_string(kMaskCapacity) + " vertices");
  std::vector<VertexMask> m(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex u : g.neighbors(v)) m[v].set(u);
  return m;
}

VertexMask to_mask(const VertexSet& s) {
  VertexMask m;
  for (Vertex v : s) m.set(v);
  return m;
}

VertexSet from_mask(const VertexMask& m) {
  std::vector<Vertex> ids;
  for (std::size_t v = m._Find_first(); v < m.size(); v = m._Find_next(v))
    ids.push_back(static_cast<Vertex>(v));
  return VertexSet(std::move(ids));
}

// ---- constructors ----

Graph make_empty(int n) { return Graph(n); }

Graph make_complete(int n) {
  if (n < 1) throw Error(ErrorCode::kSizeOutOfRange, "K_n needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

Graph make_cycle(int n) {
  if (n < 3) throw Error(ErrorCode::kSizeOutOfRange, "C_n needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

Graph make_path(int n) {
  if (n < 1) throw Error(ErrorCode::kSizeOutOfRange, "P_n needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph cycle_power(int n, int k) {
  if (n < 3 || k < 1)
    throw Error(ErrorCode::kSizeOutOfRange, "cycle power needs n >= 3, k >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int d = std::min(j - i, n - (j - i));
      if (d <= k) e.push_back({i, j});
    }
  return Graph(n, e);
}

Graph make_petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, e);
}

Graph make_hypercube(int dim) {
  if (dim < 0 || dim > 16)
    throw Error(ErrorCode::kSizeOutOfRange, "hypercube dimension out of range");
  int n = 1 << dim;
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (int u = v ^ (1 << b); v < u) e.push_back({v, u});
  return Graph(n, e);
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) e.push_back({i, j});
  return Graph(g.order(), e);
}

Graph strong_product(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  auto id = [nh](int a, int x) { return a * nh + x; };
  std::vector<Edge> e;
  for (int a = 0; a < ng; ++a)
    for (int x = 0; x < nh; ++x)
      for (int b = 0; b < ng; ++b)
        for (int y = 0; y < nh; ++y) {
          if (id(a, x) >= id(b, y)) continue;
          bool first = (a == b) || g.adjacent(a, b);
          bool second = (x == y) || h.adjacent(x, y);
          if (first && second) e.push_back({id(a, x), id(b, y)});
        }
  return Graph(ng * nh, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  auto e = g.edges();
  for (const Edge& f : h.edges())
    e.push_back({f.u + g.order(), f.v + g.order()});
  return Graph(g.order() + h.order(), e);
}

Graph relabel(const Graph& g, std::span<const Vertex> new_id) {
  if (static_cast<int>(new_id.size()) != g.order())
    throw Error(ErrorCode::kInvalidArgument, "relabeling has wrong length");
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : new_id) {
    if (v < 0 || v >= g.order() || seen[v])
      throw Error(ErrorCode::kInvalidArgument, "relabeling is not a permutation");
    seen[v] = 1;
  }
  std::vector<Edge> e;
  for (const Edge& f : g.edges()) e.push_back({new_id[f.u], new_id[f.v]});
  return Graph(g.order(), e);
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> index(g.order(), -1);
  Subgraph out;
  for (Vertex v : keep) {
    if (!g.has_vertex(v))
      throw Error(ErrorCode::kInvalidVertex,
                  "vertex " + std::to_string(v) + " out of range");
    index[v] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> e;
  for (const Edge& f : g.edges())
    if (index[f.u] >= 0 && index[f.v] >= 0) e.push_back({index[f.u], index[f.v]});
  out.graph = Graph(static_cast<int>(out.to_parent.size()), e);
  return out;
}

Subgraph delete_vertices(const Graph& g, const VertexSet& drop) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!drop.contains(v)) keep.push_back(v);
  for (Vertex v : drop)
    if (!g.has_vertex(v))
      throw Error(ErrorCode::kInvalidVertex,
                  "vertex " + std::to_string(v) + " out of range");
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

Contraction contract(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (!g.has_vertex(v))
      throw Error(ErrorCode::kInvalidVertex,
                  "vertex " + std::to_string(v) + " out of range");
  Contraction out;
  const int n = g.order();
  if (s.empty()) {
    out.graph = Graph(n + 1, g.edges());
    out.fat = n;
    out.map.resize(n);
    std::iota(out.map.begin(), out.map.end(), 0);
    return out;
  }
  const Vertex head = s[0];
  out.map.assign(n, -1);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (v == head) {
      out.map[v] = next++;
    } else if (!s.contains(v)) {
      out.map[v] = next++;
    }
  }
  out.fat = out.map[head];
  for (Vertex v : s) out.map[v] = out.fat;
  std::vector<Edge> e;
  for (const Edge& f : g.edges()) {
    Vertex a = out.map[f.u], b = out.map[f.v];
    if (a != b) e.push_back({a, b});
  }
  out.graph = Graph(next, e);
  return out;
}

Contraction contract_all(const Graph& g, std::span<const VertexSet> sets) {
  Contraction acc;
  acc.graph = g;
  acc.map.resize(g.order());
  std::iota(acc.map.begin(), acc.map.end(), 0);
  acc.fat = -1;
  for (const VertexSet& s : sets) {
    std::vector<Vertex> image;
    for (Vertex v : s) image.push_back(acc.map[v]);
    Contraction step = contract(acc.graph, VertexSet(std::move(image)));
    for (Vertex& m : acc.map) m = step.map[m];
    acc.graph = std::move(step.graph);
    acc.fat = step.fat;
  }
  return acc;
}

// ---- parameters ----

int max_degree(const Graph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int d = g.order();
  for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

bool is_regular(const Graph& g) { return max_degree(g) == min_degree(g); }

int edges_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
  for (Vertex v : s) (void)g.degree(v);
  for (Vertex v : t) (void)g.degree(v);
  int count = 0;
  for (const Edge& e : g.edges()) {
    bool forward = s.contains(e.u) && t.contains(e.v);
    bool backward = s.contains(e.v) && t.contains(e.u);
    if (forward || backward) ++count;
  }
  return count;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

VertexSet neighborhood(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  return VertexSet(std::vector<Vertex>(nb.begin(), nb.end()));
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet s = neighborhood(g, v);
  s.insert(v);
  return s;
}

}  // namespace fbrooks
