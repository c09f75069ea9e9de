#include "fbrooks/delta4.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "fbrooks/catalog.hpp"
#include "fbrooks/iso.hpp"
#include "fbrooks/structure.hpp"

namespace fbrooks {

std::string to_string(SelectionKind kind) {
  switch (kind) {
    case SelectionKind::kSmallDegree: return "smallDegree";
    case SelectionKind::kNonEdgePair: return "nonEdgePair";
    case SelectionKind::kIndependentTriple: return "independentTriple";
    case SelectionKind::kDoublePair: return "doublePair";
  }
  return "?";
}

std::string to_string(NeighborhoodMode mode) {
  return mode == NeighborhoodMode::kPattern ? "pattern" : "conservative";
}

VertexSet Selection::all() const { return s2 ? s1.unite(*s2) : s1; }

int Selection::label_of(Vertex v) const {
  if (s1.contains(v)) return 1;
  if (s2 && s2->contains(v)) return 2;
  return 0;
}

int Selection::stratum() const {
  switch (kind) {
    case SelectionKind::kSmallDegree:
    case SelectionKind::kNonEdgePair: return 0;
    case SelectionKind::kIndependentTriple: return 1;
    case SelectionKind::kDoublePair: return 2;
  }
  return 0;
}

// ---- selection ----

std::optional<ForbiddenHit> forbidden_after_contraction(const Graph& g, const VertexSet& s1,
                                                        const VertexSet& s2,
                                                        SearchBudget budget) {
  std::vector<VertexSet> pair{s1, s2};
  Contraction c = contract_all(g, pair);
  std::vector<std::vector<Vertex>> preimage(c.graph.order());
  for (Vertex v = 0; v < g.order(); ++v) preimage[c.map[v]].push_back(v);
  for (const char* name : {"K5minus", "G0"}) {
    auto copy = find_copy(c.graph, catalog_graph(name), CopyMode::kSubgraph, budget);
    if (!copy) continue;
    std::vector<Vertex> ids;
    for (Vertex t : *copy) ids.insert(ids.end(), preimage[t].begin(), preimage[t].end());
    return ForbiddenHit{name, VertexSet(ids)};
  }
  return std::nullopt;
}

Selection select_S(const Graph& g, Vertex x, const SelectOptions& options) {
  if (!g.has_vertex(x))
    throw Error(ErrorCode::kInvalidVertex, "vertex " + std::to_string(x) + " out of range");
  Selection s;
  s.x = x;
  const int d = g.degree(x);
  const std::string at = " at vertex " + std::to_string(x);
  if (d > 4) throw Error(ErrorCode::kInputViolation, "degree " + std::to_string(d) + at);
  if (d <= 2) return s;
  std::vector<Vertex> nb(g.neighbors(x).begin(), g.neighbors(x).end());
  std::sort(nb.begin(), nb.end());

  if (d == 3) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (!g.adjacent(nb[i], nb[j])) {
          s.kind = SelectionKind::kNonEdgePair;
          s.s1 = VertexSet{nb[i], nb[j]};
          return s;
        }
    throw Error(ErrorCode::kInputViolation, "K4 on the closed neighbourhood" + at);
  }

  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (!g.adjacent(nb[i], nb[j]) && !g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) {
          s.kind = SelectionKind::kIndependentTriple;
          s.s1 = VertexSet{nb[i], nb[j], nb[k]};
          return s;
        }

  // alpha = 2: the three ways to split Γ(x) into two pairs
  static constexpr int kPairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  s.kind = SelectionKind::kDoublePair;
  std::optional<Selection> first;
  std::optional<ForbiddenHit> last_hit;
  for (const auto& p : kPairings) {
    Vertex a = nb[p[0]], b = nb[p[1]], c = nb[p[2]], e = nb[p[3]];
    if (g.adjacent(a, b) || g.adjacent(c, e)) continue;
    s.s1 = VertexSet{a, b};
    s.s2 = VertexSet{c, e};
    if (!first) first = s;
    last_hit = forbidden_after_contraction(g, s.s1, *s.s2, options.budget);
    if (!last_hit) return s;
  }
  if (!first)
    throw Error(ErrorCode::kInputViolation, "no two disjoint non-edges in the neighbourhood" + at);
  if (options.allow_unvalidated) {
    first->validated = false;
    return *first;
  }
  throw NoValidSelectionError("every pairing leaves " + last_hit->pattern + " after contraction" + at,
                              s.s1, *s.s2, last_hit->witness, last_hit->pattern);
}

std::vector<Selection> select_all(const Graph& g, const SelectOptions& options) {
  std::vector<Selection> out;
  out.reserve(g.order());
  for (Vertex x = 0; x < g.order(); ++x) out.push_back(select_S(g, x, options));
  return out;
}

// ---- neighbourhoods ----

namespace {

void check_selections(const Graph& g, const std::vector<Selection>& sel) {
  if (static_cast<int>(sel.size()) != g.order())
    throw Error(ErrorCode::kSelectionsMissing,
                "expected " + std::to_string(g.order()) + " selections, got " +
                    std::to_string(sel.size()));
  for (Vertex v = 0; v < g.order(); ++v)
    if (sel[v].x != v)
      throw Error(ErrorCode::kSelectionsMissing,
                  "selection " + std::to_string(v) + " belongs to vertex " +
                      std::to_string(sel[v].x));
}

class Relations {
 public:
  Relations(const Graph& g, const std::vector<Selection>& sel)
      : g_(g), sel_(sel), adj_(adjacency_masks(g)), closed_(adj_), outer_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) closed_[v].set(v);
    // outer_[u]: vertices outside N[u] seeing both S1(u) and S2(u)
    for (Vertex u = 0; u < g.order(); ++u) {
      if (!double_pair(u)) continue;
      VertexMask one, two;
      for (Vertex s : sel[u].s1) one |= adj_[s];
      for (Vertex s : *sel[u].s2) two |= adj_[s];
      outer_[u] = one & two & ~closed_[u];
    }
  }

  bool double_pair(Vertex v) const { return sel_[v].kind == SelectionKind::kDoublePair; }

  std::vector<NeighborhoodHit> pattern(Vertex u, int j) const {
    std::map<Vertex, std::vector<Vertex>> hits;
    auto add = [&](std::vector<Vertex> path) { hits.emplace(path.back(), std::move(path)); };
    const Selection& su = sel_[u];
    switch (j) {
      case 1:
        for (Vertex v : g_.neighbors(u))
          if (su.label_of(v) && sel_[v].label_of(u)) add({u, v});
        break;
      case 2:
        for (Vertex a : su.all())
          for (Vertex v : g_.neighbors(a))
            if (v != u && sel_[v].label_of(a)) add({u, a, v});
        break;
      case 3:
        for (Vertex a : su.all())
          for (Vertex b : g_.neighbors(a)) {
            if (b == u) continue;
            for (Vertex v : g_.neighbors(b))
              if (v != u && v != a && sel_[v].label_of(b)) add({u, a, b, v});
          }
        break;
      case 4:
        if (!double_pair(u)) break;
        for (Vertex s : *su.s2)
          for (Vertex w : g_.neighbors(s)) {
            if (closed_[u][w]) continue;
            for (Vertex z : g_.neighbors(w)) {
              if (z == s) continue;
              for (Vertex v : g_.neighbors(z))
                if (v != u && v != s && v != w && sel_[v].label_of(z) == 1)
                  add({u, s, w, z, v});
            }
          }
        break;
      case 5:
        if (!double_pair(u)) break;
        for (Vertex w = 0; w < g_.order(); ++w) {
          if (!outer_[u][w]) continue;
          Vertex a = first_of(su.all(), w);
          for (Vertex z : g_.neighbors(w)) {
            if (closed_[u][z]) continue;
            for (Vertex b : g_.neighbors(z))
              for (Vertex v : g_.neighbors(b)) {
                if (v == u || !double_pair(v) || !sel_[v].label_of(b)) continue;
                if (!outer_[v][z] || closed_[v][w]) continue;
                add({u, a, w, z, b, v});
              }
          }
        }
        break;
      case 7:
        if (!double_pair(u)) break;
        for (Vertex e1 = 0; e1 < g_.order(); ++e1) {
          if (!outer_[u][e1]) continue;
          for (Vertex e2 : g_.neighbors(e1)) {
            if (e2 < e1 || !outer_[u][e2] || !covers(u, e1, e2)) continue;
            VertexMask tri = adj_[e1] & adj_[e2] & ~closed_[u];
            for (Vertex w : g_.neighbors(e1)) {
              if (!tri[w]) continue;
              Vertex s = first_of(su.all(), e1);
              for (Vertex z : g_.neighbors(w))
                seven_from(u, {u, s, e1, w, z}, e2, add);
            }
          }
        }
        break;
      default:
        throw Error(ErrorCode::kInvalidArgument,
                    "relation order must be one of 1,2,3,4,5,7, got " + std::to_string(j));
    }
    std::vector<NeighborhoodHit> out;
    for (auto& [v, path] : hits) out.push_back({v, std::move(path)});
    return out;
  }

  // endpoints of simple paths of length j meeting the degree/alpha conditions
  std::vector<NeighborhoodHit> conservative(Vertex u, int j) const {
    if (j <= 3) return pattern(u, j);
    std::map<Vertex, std::vector<Vertex>> hits;
    for (auto& h : pattern(u, j)) hits.emplace(h.v, std::move(h.path));
    if (!double_pair(u)) return {};
    std::vector<Vertex> path{u};
    VertexMask on;
    on.set(u);
    std::function<void()> walk = [&] {
      Vertex t = path.back();
      if (static_cast<int>(path.size()) == j + 1) {
        if (j == 4 || double_pair(t)) hits.emplace(t, path);
        return;
      }
      for (Vertex y : g_.neighbors(t)) {
        if (on[y]) continue;
        on.set(y);
        path.push_back(y);
        walk();
        path.pop_back();
        on.reset(y);
      }
    };
    walk();
    std::vector<NeighborhoodHit> out;
    for (auto& [v, p] : hits) out.push_back({v, std::move(p)});
    return out;
  }

 private:
  Vertex first_of(const VertexSet& s, Vertex w) const {
    for (Vertex a : s)
      if (adj_[w][a]) return a;
    return -1;
  }

  bool covers(Vertex u, Vertex e1, Vertex e2) const {
    for (Vertex a : g_.neighbors(u))
      if (!adj_[e1][a] && !adj_[e2][a]) return false;
    return true;
  }

  // second triangle z, f1, f2 and the far end v
  template <typename Add>
  void seven_from(Vertex u, std::vector<Vertex> head, Vertex e2, Add& add) const {
    const Vertex e1 = head[2], w = head[3], z = head[4];
    auto inner_ok = [&](Vertex t) { return t != w && t != e1 && t != e2 && !closed_[u][t]; };
    if (!inner_ok(z)) return;
    for (Vertex f1 : g_.neighbors(z)) {
      if (!inner_ok(f1)) continue;
      for (Vertex f2 : g_.neighbors(f1)) {
        if (!adj_[z][f2] || !inner_ok(f2)) continue;
        for (Vertex s : g_.neighbors(f1))
          for (Vertex v : g_.neighbors(s)) {
            if (v == u || !double_pair(v) || !sel_[v].label_of(s)) continue;
            if (!outer_[v][f1] || !outer_[v][f2] || !covers(v, f1, f2)) continue;
            bool clear = true;
            for (Vertex t : {w, e1, e2, z})
              if (closed_[v][t]) clear = false;
            if (!clear) continue;
            auto path = head;
            path.insert(path.end(), {f1, s, v});
            add(std::move(path));
          }
      }
    }
  }

  const Graph& g_;
  const std::vector<Selection>& sel_;
  std::vector<VertexMask> adj_, closed_, outer_;
};

}  // namespace

std::vector<NeighborhoodHit> neighborhood_witnesses(const Graph& g,
                                                    const std::vector<Selection>& sel, Vertex u,
                                                    int j, NeighborhoodMode mode) {
  check_selections(g, sel);
  if (!g.has_vertex(u))
    throw Error(ErrorCode::kInvalidVertex, "vertex " + std::to_string(u) + " out of range");
  Relations rel(g, sel);
  return mode == NeighborhoodMode::kPattern ? rel.pattern(u, j) : rel.conservative(u, j);
}

VertexSet neighborhoods(const Graph& g, const std::vector<Selection>& sel, Vertex u, int j,
                        NeighborhoodMode mode) {
  std::vector<Vertex> ids;
  for (const auto& h : neighborhood_witnesses(g, sel, u, j, mode)) ids.push_back(h.v);
  return VertexSet(ids);
}

AuxiliaryGraph build_auxiliary(const Graph& g, const std::vector<Selection>& sel,
                               NeighborhoodMode mode) {
  check_selections(g, sel);
  Relations rel(g, sel);
  AuxiliaryGraph aux;
  aux.mode = mode;
  aux.counts.resize(g.order());
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back(e);
    aux.tags.push_back({e.u, e.v, 0, {e.u, e.v}});
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    VertexMask near, all;
    for (Vertex v : g.neighbors(u)) near.set(v);
    for (std::size_t i = 0; i < kRelationOrders.size(); ++i) {
      const int j = kRelationOrders[i];
      auto hits = mode == NeighborhoodMode::kPattern ? rel.pattern(u, j) : rel.conservative(u, j);
      aux.counts[u].n[i] = static_cast<int>(hits.size());
      for (auto& h : hits) {
        if (j <= 3) near.set(h.v);
        all.set(h.v);
        if (j == 4) ++aux.counts[h.v].n4_in;
        edges.push_back({u, h.v});
        aux.tags.push_back({u, h.v, j, std::move(h.path)});
      }
    }
    aux.counts[u].near = static_cast<int>(near.count());
    aux.counts[u].all = static_cast<int>((all | near).count());
  }
  aux.graph = Graph(g.order(), edges);
  return aux;
}

CapReport neighborhood_caps(const AuxiliaryGraph& aux, const std::vector<Selection>& sel) {
  CapReport r;
  for (std::size_t u = 0; u < aux.counts.size(); ++u) {
    if (sel.at(u).kind != SelectionKind::kDoublePair) continue;
    const auto& c = aux.counts[u];
    r.near = std::max(r.near, c.near);
    r.n4 = std::max(r.n4, c.n[3]);
    r.n5 = std::max(r.n5, c.n[4]);
    r.n7 = std::max(r.n7, c.n[5]);
    r.all = std::max(r.all, c.all);
  }
  return r;
}

ClassColoring greedy_class_coloring(const AuxiliaryGraph& aux, const std::vector<Selection>& sel) {
  check_selections(aux.graph, sel);
  const int n = aux.graph.order();
  ClassColoring cc;
  cc.color.assign(n, -1);
  cc.order.resize(n);
  for (Vertex v = 0; v < n; ++v) cc.order[v] = v;
  std::stable_sort(cc.order.begin(), cc.order.end(),
                   [&](Vertex a, Vertex b) { return sel[a].stratum() < sel[b].stratum(); });
  for (Vertex v : cc.order) {
    std::vector<bool> used(n + 1, false);
    int forbidden = 0;
    for (Vertex u : aux.graph.neighbors(v))
      if (cc.color[u] >= 0 && !used[cc.color[u]]) {
        used[cc.color[u]] = true;
        ++forbidden;
      }
    int& worst = cc.max_forbidden[sel[v].stratum()];
    worst = std::max(worst, forbidden);
    int c = 0;
    while (used[c]) ++c;
    cc.color[v] = c;
    cc.k = std::max(cc.k, c + 1);
  }
  std::vector<std::vector<Vertex>> classes(cc.k);
  for (Vertex v = 0; v < n; ++v) classes[cc.color[v]].push_back(v);
  for (auto& c : classes) cc.classes.emplace_back(std::move(c));
  if (aux.mode == NeighborhoodMode::kPattern && cc.k > 133)
    throw Error(ErrorCode::kInvariantViolation,
                "greedy used " + std::to_string(cc.k) + " colors, more than 133");
  return cc;
}

// ---- class graphs ----

ClassGraph build_class_graph(const Graph& g, const std::vector<Selection>& sel,
                             const VertexSet& cls) {
  check_selections(g, sel);
  for (Vertex x : cls)
    if (!g.has_vertex(x))
      throw Error(ErrorCode::kInvalidVertex, "vertex " + std::to_string(x) + " out of range");
  if (!is_independent(g, cls))
    throw Error(ErrorCode::kClassInvalid, "class is not independent in the graph");
  const int n = g.order();
  std::vector<int> label(n, 0), owner(n, -1);
  for (Vertex x : cls)
    for (Vertex s : sel[x].all()) {
      if (owner[s] >= 0)
        throw Error(ErrorCode::kClassInvalid,
                    "selections of " + std::to_string(owner[s]) + " and " + std::to_string(x) +
                        " share vertex " + std::to_string(s));
      owner[s] = x;
      label[s] = sel[x].label_of(s);
    }
  for (Vertex s = 0; s < n; ++s) {
    if (owner[s] < 0) continue;
    for (Vertex t : g.neighbors(s))
      if (owner[t] >= 0 && owner[t] != owner[s])
        throw Error(ErrorCode::kClassInvalid,
                    "edge (" + std::to_string(s) + "," + std::to_string(t) +
                        ") joins the selections of " + std::to_string(owner[s]) + " and " +
                        std::to_string(owner[t]));
  }

  ClassGraph cg;
  cg.cls = cls;
  std::vector<Vertex> removed;
  for (Vertex x : cls) {
    auto kind = sel[x].kind;
    if (kind != SelectionKind::kNonEdgePair && kind != SelectionKind::kIndependentTriple) continue;
    for (Vertex y : g.neighbors(x))
      if (!label[y]) removed.push_back(y);
  }
  cg.removed = VertexSet(removed);

  std::vector<Vertex> id(n, -1);
  std::vector<std::vector<Vertex>> members;
  Vertex label_id[3] = {-1, -1, -1};
  for (Vertex v = 0; v < n; ++v) {
    if (cls.contains(v) || cg.removed.contains(v)) continue;
    if (label[v]) {
      Vertex& l = label_id[label[v]];
      if (l < 0) {
        l = static_cast<Vertex>(members.size());
        members.emplace_back();
      }
      id[v] = l;
    } else {
      id[v] = static_cast<Vertex>(members.size());
      members.emplace_back();
    }
    members[id[v]].push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (id[e.u] >= 0 && id[e.v] >= 0 && id[e.u] != id[e.v]) edges.push_back({id[e.u], id[e.v]});
  cg.graph = Graph(static_cast<int>(members.size()), edges);
  for (auto& m : members) cg.members.emplace_back(std::move(m));
  if (label_id[1] >= 0) cg.w1 = label_id[1];
  if (label_id[2] >= 0) cg.w2 = label_id[2];
  return cg;
}

std::optional<std::vector<int>> greedy_five_coloring(const ClassGraph& cg) {
  const Graph& h = cg.graph;
  std::vector<Vertex> order;
  for (auto w : {cg.w1, cg.w2})
    if (w) order.push_back(*w);
  for (Vertex v = 0; v < h.order(); ++v)
    if (v != cg.w1 && v != cg.w2) order.push_back(v);
  std::vector<int> color(h.order(), -1);
  for (Vertex v : order) {
    bool used[6] = {};
    for (Vertex u : h.neighbors(v))
      if (color[u] >= 0 && color[u] < 6) used[color[u]] = true;
    int c = 0;
    while (c < 5 && used[c]) ++c;
    if (c == 5) return std::nullopt;
    color[v] = c;
  }
  return color;
}

std::vector<int> four_color_class_graph(const ClassGraph& cg, SearchBudget budget) {
  const Graph& h = cg.graph;
  if (auto c = find_proper_coloring(h, 4, budget)) return *c;

  // shrink to a vertex-critical subgraph
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < h.order(); ++v) keep.push_back(v);
  for (Vertex v = 0; v < h.order(); ++v) {
    std::vector<Vertex> trial;
    for (Vertex u : keep)
      if (u != v) trial.push_back(u);
    if (!find_proper_coloring(induced_subgraph(h, VertexSet(trial)).graph, 4, budget))
      keep = std::move(trial);
  }
  VertexSet critical(keep);
  Subgraph sub = induced_subgraph(h, critical);
  std::vector<Vertex> four;
  for (Vertex v = 0; v < sub.graph.order(); ++v)
    if (sub.graph.degree(v) == 4) four.push_back(v);
  bool forest = is_gallai_forest(induced_subgraph(sub.graph, VertexSet(four)).graph);
  std::vector<Vertex> four_ids;
  for (Vertex v : four) four_ids.push_back(sub.to_parent[v]);
  throw NotFourColorableError(
      "class graph has a " + std::to_string(critical.size()) +
          "-vertex 5-critical subgraph; its degree-4 vertices " +
          (forest ? "form" : "do not form") + " a Gallai forest",
      critical, VertexSet(four_ids), forest);
}

FoldColoring assemble_fold_coloring(const Graph& g, const std::vector<ClassGraph>& classes,
                                    const std::vector<std::vector<int>>& colorings) {
  if (classes.empty()) throw Error(ErrorCode::kInvalidArgument, "no color classes");
  if (classes.size() != colorings.size())
    throw Error(ErrorCode::kInvalidArgument, "one coloring per class graph is required");
  const int n = g.order();
  const int k = static_cast<int>(classes.size());
  std::vector<std::vector<int>> sets(n);
  for (int i = 0; i < k; ++i) {
    const ClassGraph& cg = classes[i];
    const auto& ci = colorings[i];
    if (static_cast<int>(ci.size()) != cg.graph.order())
      throw Error(ErrorCode::kInvalidArgument,
                  "coloring " + std::to_string(i) + " has the wrong length");
    std::vector<int> col(n, -1);
    for (Vertex t = 0; t < cg.graph.order(); ++t)
      for (Vertex v : cg.members[t]) col[v] = ci[t];
    auto free_colors = [&](Vertex v) {
      bool used[4] = {};
      for (Vertex u : g.neighbors(v))
        if (col[u] >= 0) used[col[u]] = true;
      std::vector<int> out;
      for (int c = 0; c < 4; ++c)
        if (!used[c]) out.push_back(c);
      return out;
    };
    for (Vertex r : cg.removed) {
      auto f = free_colors(r);
      if (f.empty())
        throw Error(ErrorCode::kAssemblyConflict,
                    "deleted vertex " + std::to_string(r) + " sees all four colors of block " +
                        std::to_string(i));
      col[r] = f[0];
    }
    for (Vertex v = 0; v < n; ++v)
      if (col[v] >= 0) sets[v].push_back(4 * i + col[v]);
    for (Vertex x : cg.cls) {
      auto f = free_colors(x);
      if (f.size() < 2)
        throw Error(ErrorCode::kAssemblyConflict,
                    "vertex " + std::to_string(x) + " of class " + std::to_string(i) +
                        " has fewer than two free colors");
      sets[x].push_back(4 * i + f[0]);
      sets[x].push_back(4 * i + f[1]);
    }
  }
  FoldColoring fold(4 * k, k + 1, std::move(sets));
  if (auto verdict = verify_fold_coloring(g, fold); !verdict)
    throw Error(ErrorCode::kAssemblyConflict, "assembled coloring fails: " +
                                                  verdict.violation->describe());
  return fold;
}

// ---- pipeline ----

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<StageTiming>& out) : out_(out) {}

  template <typename F>
  auto run(const std::string& stage, F&& f) {
    auto start = std::chrono::steady_clock::now();
    try {
      if constexpr (std::is_void_v<decltype(f())>) {
        f();
        record(stage, start);
      } else {
        auto r = f();
        record(stage, start);
        return r;
      }
    } catch (const PipelineError&) {
      throw;
    } catch (const Error& e) {
      throw PipelineError(e.code(), stage, e.what());
    }
  }

 private:
  void record(const std::string& stage, std::chrono::steady_clock::time_point start) {
    std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
    out_.push_back({stage, d.count()});
  }
  std::vector<StageTiming>& out_;
};

PipelineResult attempt(const Graph& g, NeighborhoodMode mode, const PipelineOptions& options) {
  PipelineReport report;
  report.requested = options.mode;
  report.used = mode;
  Stopwatch clock(report.timings);

  SelectOptions so{options.allow_unvalidated, options.budget};
  auto sel = clock.run("select", [&] { return select_all(g, so); });
  auto aux = clock.run("auxiliary", [&] { return build_auxiliary(g, sel, mode); });
  auto cc = clock.run("greedy", [&] { return greedy_class_coloring(aux, sel); });
  auto cgs = clock.run("class-graphs", [&] {
    std::vector<ClassGraph> out;
    for (const auto& x : cc.classes) {
      out.push_back(build_class_graph(g, sel, x));
      if (!greedy_five_coloring(out.back()))
        throw Error(ErrorCode::kInvariantViolation, "greedy 5-coloring of a class graph failed");
    }
    return out;
  });
  auto colorings = clock.run("four-color", [&] {
    std::vector<std::vector<int>> out;
    for (const auto& cg : cgs) out.push_back(four_color_class_graph(cg, options.budget));
    return out;
  });
  auto fold = clock.run("assemble", [&] { return assemble_fold_coloring(g, cgs, colorings); });

  report.k = cc.k;
  report.ratio = Rational(4 * cc.k, cc.k + 1);
  report.within_bound = report.ratio <= Rational(266, 67);
  for (const auto& s : sel) {
    ++report.kinds[static_cast<int>(s.kind)];
    if (!s.validated) ++report.unvalidated;
  }
  report.caps = neighborhood_caps(aux, sel);
  report.max_forbidden = cc.max_forbidden;
  report.aux_edges = aux.graph.size();
  for (std::size_t i = 0; i < cgs.size(); ++i) {
    report.class_sizes.push_back(static_cast<int>(cc.classes[i].size()));
    report.class_graph_orders.push_back(cgs[i].graph.order());
  }
  return {std::move(fold), std::move(report)};
}

}  // namespace

PipelineResult run_pipeline(const Graph& g, const PipelineOptions& options) {
  if (g.order() == 0) throw Error(ErrorCode::kInvalidArgument, "graph has no vertices");
  if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, "graph must be connected");
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 4)
      throw Error(ErrorCode::kInputViolation, "vertex " + std::to_string(v) + " has degree " +
                                                  std::to_string(g.degree(v)) + " > 4");
  if (auto k4 = find_clique_of_size(g, 4)) {
    std::string ids;
    for (Vertex v : *k4) ids += (ids.empty() ? "" : ",") + std::to_string(v);
    throw Error(ErrorCode::kInputViolation, "K4 on vertices {" + ids + "}");
  }
  if (g.order() == 8 && is_regular(g) && g.degree(0) == 4)
    if (auto iso = find_isomorphism(g, cycle_power(8, 2), options.budget)) {
      std::string map;
      for (Vertex v = 0; v < 8; ++v)
        map += (v ? " " : "") + std::to_string(v) + "->u" + std::to_string((*iso)[v]);
      throw Error(ErrorCode::kInputViolation, "graph is isomorphic to C8^2 (" + map + ")");
    }

  if (options.mode == NeighborhoodMode::kConservative || !options.retry_conservative)
    return attempt(g, options.mode, options);
  try {
    return attempt(g, NeighborhoodMode::kPattern, options);
  } catch (const PipelineError& e) {
    if (e.code() != ErrorCode::kClassInvalid && e.code() != ErrorCode::kNotFourColorable) throw;
    auto r = attempt(g, NeighborhoodMode::kConservative, options);
    r.report.retry_reason = e.what();
    return r;
  }
}

nlohmann::ordered_json report_to_json(const PipelineReport& r, bool with_timings) {
  nlohmann::ordered_json j;
  j["k"] = r.k;
  j["a"] = 4 * r.k;
  j["b"] = r.k + 1;
  j["ratio"] = r.ratio.str();
  j["within_bound"] = r.within_bound;
  j["mode"] = to_string(r.requested);
  j["mode_used"] = to_string(r.used);
  j["retry_reason"] = r.retry_reason ? nlohmann::ordered_json(*r.retry_reason) : nullptr;
  nlohmann::ordered_json kinds;
  for (int i = 0; i < 4; ++i) kinds[to_string(static_cast<SelectionKind>(i))] = r.kinds[i];
  kinds["unvalidated"] = r.unvalidated;
  j["selections"] = kinds;
  j["caps"] = {{"near", r.caps.near}, {"n4", r.caps.n4}, {"n5", r.caps.n5},
               {"n7", r.caps.n7},     {"all", r.caps.all}, {"ok", r.caps.ok()}};
  j["max_forbidden"] = r.max_forbidden;
  j["forbidden_caps"] = kForbiddenCaps;
  j["aux_edges"] = r.aux_edges;
  auto classes = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.class_sizes.size(); ++i)
    classes.push_back({{"size", r.class_sizes[i]}, {"class_graph_order", r.class_graph_orders[i]}});
  j["classes"] = classes;
  if (with_timings) {
    auto t = nlohmann::ordered_json::array();
    for (const auto& s : r.timings) t.push_back({{"stage", s.stage}, {"ms", s.milliseconds}});
    j["timings"] = t;
  }
  return j;
}

}  // namespace fbrooks
