#include "fbrooks/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace fbrooks {

namespace {

std::size_t first_bit(const VertexMask& m) { return m._Find_first(); }
std::size_t next_bit(const VertexMask& m, std::size_t i) { return m._Find_next(i); }

template <class F>
void for_each_bit(const VertexMask& m, F&& f) {
  for (std::size_t v = first_bit(m); v < m.size(); v = next_bit(m, v))
    f(static_cast<Vertex>(v));
}

VertexMask all_vertices(int n) {
  VertexMask m;
  for (int v = 0; v < n; ++v) m.set(v);
  return m;
}

}  // namespace

// ---- connectivity ----

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> members{s}, stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u))
        if (comp[v] < 0) {
          comp[v] = comp[s];
          members.push_back(v);
          stack.push_back(v);
        }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

// ---- blocks ----

namespace {

struct BlockFinder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<Edge> stack;
  std::vector<VertexSet> blocks;
  int timer = 0;

  explicit BlockFinder(const Graph& graph)
      : g(graph), disc(graph.order(), 0), low(graph.order(), 0) {}

  void dfs(Vertex u, Vertex parent) {
    disc[u] = low[u] = ++timer;
    for (Vertex v : g.neighbors(u)) {
      if (v == parent) continue;
      if (!disc[v]) {
        stack.push_back({u, v});
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::vector<Vertex> members;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            members.push_back(e.u);
            members.push_back(e.v);
            if (e.u == u && e.v == v) break;
          }
          blocks.emplace_back(std::move(members));
        }
      } else if (disc[v] < disc[u]) {
        stack.push_back({u, v});
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
  BlockFinder f(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f.disc[v]) continue;
    if (g.degree(v) == 0) {
      f.disc[v] = ++f.timer;
      f.blocks.push_back(VertexSet{v});
      continue;
    }
    f.dfs(v, -1);
  }
  BlockDecomposition out;
  std::sort(f.blocks.begin(), f.blocks.end());
  out.blocks = std::move(f.blocks);
  std::vector<int> count(g.order(), 0);
  for (const auto& b : out.blocks)
    for (Vertex v : b) ++count[v];
  for (Vertex v = 0; v < g.order(); ++v)
    if (count[v] > 1) out.cut_vertices.insert(v);
  return out;
}

namespace {

bool block_is_complete_or_odd_cycle(const Graph& g, const VertexSet& b) {
  if (is_clique(g, b)) return true;
  if (b.size() % 2 == 0) return false;
  for (Vertex v : b) {
    int inside = 0;
    for (Vertex u : g.neighbors(v))
      if (b.contains(u)) ++inside;
    if (inside != 2) return false;
  }
  return true;
}

}  // namespace

bool is_gallai_tree(const Graph& g) {
  if (!is_connected(g))
    throw Error(ErrorCode::kNotConnected, "Gallai tree test needs a connected graph");
  for (const auto& b : blocks(g).blocks)
    if (!block_is_complete_or_odd_cycle(g, b)) return false;
  return true;
}

bool is_gallai_forest(const Graph& g) {
  for (const auto& b : blocks(g).blocks)
    if (!block_is_complete_or_odd_cycle(g, b)) return false;
  return true;
}

// ---- cliques ----

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const std::vector<VertexMask>& adj, SearchBudget budget)
      : adj_(adj), nodes_(budget) {}

  VertexSet run(const VertexMask& candidates) {
    upper_ = static_cast<long long>(candidates.count());
    expand(candidates);
    return VertexSet(best_);
  }

 private:
  void expand(VertexMask cand) {
    if (!nodes_.tick())
      throw ResourceLimitError("clique search exceeded node budget",
                               nodes_.count(),
                               static_cast<long long>(best_.size()), upper_);
    std::vector<Vertex> order;
    std::vector<int> bound;
    VertexMask uncolored = cand;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      VertexMask q = uncolored;
      while (q.any()) {
        Vertex v = static_cast<Vertex>(first_bit(q));
        q.reset(v);
        q &= ~adj_[v];
        uncolored.reset(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current_.size() + bound[i] <= best_.size()) return;
      Vertex v = order[i];
      current_.push_back(v);
      VertexMask next = cand & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      cand.reset(v);
    }
  }

  const std::vector<VertexMask>& adj_;
  NodeCounter nodes_;
  std::vector<Vertex> current_, best_;
  long long upper_ = 0;
};

std::vector<VertexMask> complement_masks(const Graph& g) {
  auto adj = adjacency_masks(g);
  VertexMask all = all_vertices(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    adj[v] = all & ~adj[v];
    adj[v].reset(v);
  }
  return adj;
}

// Bron-Kerbosch with Tomita pivoting.
void bron_kerbosch(const std::vector<VertexMask>& adj, VertexMask r, VertexMask p,
                   VertexMask x, NodeCounter& nodes,
                   std::vector<VertexSet>& out) {
  if (!nodes.tick())
    throw ResourceLimitError("maximal set enumeration exceeded node budget",
                             nodes.count());
  if (p.none() && x.none()) {
    out.push_back(from_mask(r));
    return;
  }
  VertexMask px = p | x;
  Vertex pivot = static_cast<Vertex>(first_bit(px));
  std::size_t best = 0;
  for_each_bit(px, [&](Vertex u) {
    std::size_t c = (p & adj[u]).count();
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  VertexMask todo = p & ~adj[pivot];
  for_each_bit(todo, [&](Vertex v) {
    VertexMask r2 = r;
    r2.set(v);
    bron_kerbosch(adj, r2, p & adj[v], x & adj[v], nodes, out);
    p.reset(v);
    x.set(v);
  });
}

}  // namespace

VertexSet max_clique(const Graph& g, SearchBudget budget) {
  auto adj = adjacency_masks(g);
  return CliqueSearch(adj, budget).run(all_vertices(g.order()));
}

int clique_number(const Graph& g, SearchBudget budget) {
  return static_cast<int>(max_clique(g, budget).size());
}

VertexSet max_independent_set(const Graph& g, SearchBudget budget) {
  auto adj = complement_masks(g);
  return CliqueSearch(adj, budget).run(all_vertices(g.order()));
}

int independence_number(const Graph& g, SearchBudget budget) {
  return static_cast<int>(max_independent_set(g, budget).size());
}

std::vector<VertexSet> max_independent_sets(const Graph& g, SearchBudget budget) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  auto adj = complement_masks(g);
  NodeCounter nodes(budget);
  bron_kerbosch(adj, {}, all_vertices(g.order()), {}, nodes, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> maximal_cliques(const Graph& g, SearchBudget budget) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  auto adj = adjacency_masks(g);
  NodeCounter nodes(budget);
  bron_kerbosch(adj, {}, all_vertices(g.order()), {}, nodes, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> maximum_cliques(const Graph& g, SearchBudget budget) {
  auto all = maximal_cliques(g, budget);
  std::size_t w = 0;
  for (const auto& c : all) w = std::max(w, c.size());
  std::vector<VertexSet> out;
  for (auto& c : all)
    if (c.size() == w) out.push_back(std::move(c));
  return out;
}

namespace {

template <class F>
bool each_clique_of_size(const std::vector<VertexMask>& adj, int n, int k, F&& f) {
  std::vector<Vertex> cur;
  std::function<bool(VertexMask)> rec = [&](VertexMask cand) -> bool {
    if (static_cast<int>(cur.size()) == k) return f(VertexSet(cur));
    if (static_cast<int>(cur.size() + cand.count()) < k) return true;
    VertexMask rest = cand;
    while (rest.any()) {
      Vertex v = static_cast<Vertex>(first_bit(rest));
      rest.reset(v);
      cur.push_back(v);
      bool go_on = rec(rest & adj[v]);
      cur.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return rec(all_vertices(n));
}

}  // namespace

std::vector<VertexSet> cliques_of_size(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "clique size must be >= 1");
  auto adj = adjacency_masks(g);
  std::vector<VertexSet> out;
  each_clique_of_size(adj, g.order(), k, [&](VertexSet c) {
    out.push_back(std::move(c));
    return true;
  });
  return out;
}

std::optional<VertexSet> find_clique_of_size(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "clique size must be >= 1");
  auto adj = adjacency_masks(g);
  std::optional<VertexSet> found;
  each_clique_of_size(adj, g.order(), k, [&](VertexSet c) {
    found = std::move(c);
    return false;
  });
  return found;
}

std::vector<CliqueComponent> clique_graph_components(const Graph& g, int k) {
  if (k < 3) throw Error(ErrorCode::kInvalidArgument, "clique size must be >= 3");
  std::vector<Edge> marked;
  for (const auto& c : cliques_of_size(g, k))
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) marked.push_back({c[i], c[j]});
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());

  // union-find over the vertices touched by marked edges
  std::vector<Vertex> parent(g.order());
  for (Vertex v = 0; v < g.order(); ++v) parent[v] = v;
  std::function<Vertex(Vertex)> find = [&](Vertex v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const Edge& e : marked) parent[find(e.u)] = find(e.v);

  std::map<Vertex, CliqueComponent> by_root;
  for (const Edge& e : marked) {
    auto& comp = by_root[find(e.u)];
    comp.vertices.insert(e.u);
    comp.vertices.insert(e.v);
    comp.edges.push_back(e);
  }
  std::vector<CliqueComponent> out;
  for (auto& [root, comp] : by_root) out.push_back(std::move(comp));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.vertices < b.vertices;
  });
  return out;
}

// ---- proper coloring ----

namespace {

class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, int k, SearchBudget budget)
      : g_(g), k_(k), nodes_(budget), color_(g.order(), -1),
        seen_(g.order(), std::vector<int>(k, 0)), sat_(g.order(), 0) {}

  bool run() { return g_.order() == 0 || extend(0, 0); }
  const std::vector<int>& colors() const { return color_; }

 private:
  bool extend(int done, int used) {
    if (done == g_.order()) return true;
    if (!nodes_.tick())
      throw ResourceLimitError("coloring search exceeded node budget", nodes_.count());
    Vertex pick = -1;
    int pick_sat = -1, pick_deg = -1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (color_[v] >= 0) continue;
      int deg = 0;
      for (Vertex u : g_.neighbors(v))
        if (color_[u] < 0) ++deg;
      if (sat_[v] > pick_sat || (sat_[v] == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat_[v];
        pick_deg = deg;
      }
    }
    if (pick_sat >= k_) return false;
    int top = std::min(k_ - 1, used);
    for (int c = 0; c <= top; ++c) {
      if (seen_[pick][c]) continue;
      assign(pick, c);
      if (extend(done + 1, std::max(used, c + 1))) return true;
      unassign(pick, c);
    }
    return false;
  }

  void assign(Vertex v, int c) {
    color_[v] = c;
    for (Vertex u : g_.neighbors(v))
      if (seen_[u][c]++ == 0) ++sat_[u];
  }

  void unassign(Vertex v, int c) {
    color_[v] = -1;
    for (Vertex u : g_.neighbors(v))
      if (--seen_[u][c] == 0) --sat_[u];
  }

  const Graph& g_;
  int k_;
  NodeCounter nodes_;
  std::vector<int> color_;
  std::vector<std::vector<int>> seen_;
  std::vector<int> sat_;
};

}  // namespace

std::optional<std::vector<int>> find_proper_coloring(const Graph& g, int k,
                                                     SearchBudget budget) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative color count");
  if (k == 0) {
    if (g.order() == 0) return std::vector<int>{};
    return std::nullopt;
  }
  DsaturSearch s(g, k, budget);
  if (!s.run()) return std::nullopt;
  return s.colors();
}

int chromatic_number(const Graph& g, SearchBudget budget) {
  if (g.order() == 0) return 0;
  for (int k = clique_number(g, budget);; ++k)
    if (find_proper_coloring(g, k, budget)) return k;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& color) {
  if (static_cast<int>(color.size()) != g.order()) return false;
  for (int c : color)
    if (c < 0) return false;
  for (const Edge& e : g.edges())
    if (color[e.u] == color[e.v]) return false;
  return true;
}

std::vector<Vertex> smallest_last_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    removed[pick] = 1;
    order.push_back(pick);
    for (Vertex u : g.neighbors(pick))
      if (!removed[u]) --deg[u];
  }
  return order;
}

}  // namespace fbrooks
