#include "fbrooks/fractional.hpp"

#include <algorithm>

#include "fbrooks/iso.hpp"
#include "fbrooks/simplex.hpp"
#include "fbrooks/structure.hpp"

namespace fbrooks {

namespace {

std::vector<Rational> indicator(int n, const VertexSet& s) {
  std::vector<Rational> row(n);
  for (Vertex v : s) row[v] = 1;
  return row;
}

std::vector<VertexSet> greedy_cover(const Graph& g) {
  std::vector<char> covered(g.order(), 0);
  std::vector<VertexSet> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (covered[v]) continue;
    std::vector<Vertex> set{v};
    for (Vertex u = 0; u < g.order(); ++u) {
      if (u == v) continue;
      bool free = true;
      for (Vertex w : set)
        if (w == u || g.adjacent(u, w)) free = false;
      if (free) set.push_back(u);
    }
    for (Vertex u : set) covered[u] = 1;
    out.emplace_back(std::move(set));
  }
  return out;
}

VertexSet extend_to_maximal(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (out.contains(u)) continue;
    bool free = true;
    for (Vertex w : out)
      if (g.adjacent(u, w)) free = false;
    if (free) out.insert(u);
  }
  return out;
}

FractionalSolution collect(const Graph& g, const std::vector<VertexSet>& rows,
                           const DictionarySimplex& lp, bool with_dual) {
  FractionalSolution s;
  auto w = lp.row_duals();
  std::vector<std::pair<VertexSet, Rational>> items;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (w[r].sign() > 0) items.emplace_back(rows[r], w[r]);
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [set, weight] : items) {
    s.value += weight;
    s.sets.push_back(set);
    s.weights.push_back(weight);
  }
  if (with_dual) s.dual = lp.primal();
  (void)g;
  return s;
}

Rational sum(const std::vector<Rational>& v) {
  Rational t;
  for (const auto& x : v) t += x;
  return t;
}

}  // namespace

std::pair<Rational, FractionalSolution> chi_f_exact(const Graph& g,
                                                    const ChiFOptions& options) {
  const int n = g.order();
  if (n == 0) {
    FractionalSolution s;
    if (options.with_dual) s.dual = std::vector<Rational>{};
    return {Rational(0), s};
  }
  bool enumerate = options.mode == LpMode::kEnumerate ||
                   (options.mode == LpMode::kAuto && n <= options.enumerate_max_order);

  DictionarySimplex lp(std::vector<Rational>(n, Rational(1)));
  std::vector<VertexSet> rows;

  if (enumerate) {
    rows = max_independent_sets(g, options.budget);
    for (const auto& s : rows) lp.add_row(indicator(n, s), 1);
    try {
      lp.solve(options.max_pivots);
    } catch (const PivotLimitError&) {
      throw LpLimitError("simplex pivot limit reached", Rational(1), std::nullopt);
    }
    FractionalSolution s = collect(g, rows, lp, options.with_dual);
    return {s.value, s};
  }

  // column generation on the covering side = row generation on the packing LP
  rows = greedy_cover(g);
  for (const auto& s : rows) lp.add_row(indicator(n, s), 1);
  Rational lower(1);
  std::optional<Rational> upper;
  while (true) {
    try {
      lp.solve(options.max_pivots);
    } catch (const PivotLimitError&) {
      throw LpLimitError("simplex pivot limit reached", lower, upper);
    }
    std::vector<Rational> y = lp.primal();
    upper = lp.objective();
    std::pair<Rational, VertexSet> priced;
    try {
      priced = max_weight_independent_set(g, y, options.budget);
    } catch (const ResourceLimitError&) {
      throw LpLimitError("pricing search exceeded node budget", lower, upper);
    }
    auto& [weight, set] = priced;
    if (weight > 1) {
      lower = std::max(lower, sum(y) / weight);
    } else {
      FractionalSolution s = collect(g, rows, lp, options.with_dual);
      return {s.value, s};
    }
    VertexSet row = extend_to_maximal(g, set);
    rows.push_back(row);
    lp.add_row(indicator(n, row), 1);
  }
}

Rational chi_f(const Graph& g, const ChiFOptions& options) {
  ChiFOptions o = options;
  o.with_dual = false;
  return chi_f_exact(g, o).first;
}

Rational chi_f_vertex_transitive(const Graph& g, SearchBudget budget) {
  if (!is_vertex_transitive(g, budget))
    throw Error(ErrorCode::kNotVertexTransitive, "graph is not vertex-transitive");
  if (g.order() == 0) return Rational(0);
  return Rational(g.order(), independence_number(g, budget));
}

// ---- weighted independent set ----

namespace {

class WeightedSearch {
 public:
  WeightedSearch(const Graph& g, const std::vector<Rational>& w, SearchBudget budget)
      : adj_(adjacency_masks(g)), w_(w), nodes_(budget) {}

  std::pair<Rational, VertexSet> run(const VertexMask& cand) {
    best_set_.clear();
    expand(cand, Rational(0));
    return {best_, VertexSet(best_set_)};
  }

 private:
  // Sum over a greedy clique partition of the largest weight in each clique.
  Rational clique_cover_bound(VertexMask cand) const {
    Rational total;
    while (cand.any()) {
      Vertex v = static_cast<Vertex>(cand._Find_first());
      VertexMask clique_cand = cand & adj_[v];
      cand.reset(v);
      const Rational* top = &w_[v];
      while (clique_cand.any()) {
        Vertex u = static_cast<Vertex>(clique_cand._Find_first());
        clique_cand.reset(u);
        clique_cand &= adj_[u];
        cand.reset(u);
        if (w_[u] > *top) top = &w_[u];
      }
      total += *top;
    }
    return total;
  }

  void expand(VertexMask cand, const Rational& weight) {
    if (!nodes_.tick())
      throw ResourceLimitError("weighted independent set search exceeded node budget",
                               nodes_.count());
    if (weight > best_) {
      best_ = weight;
      best_set_ = current_;
    }
    if (cand.none()) return;
    if (weight + clique_cover_bound(cand) <= best_) return;
    while (cand.any()) {
      Vertex v = static_cast<Vertex>(cand._Find_first());
      cand.reset(v);
      current_.push_back(v);
      expand(cand & ~adj_[v], weight + w_[v]);
      current_.pop_back();
      if (cand.none() || weight + clique_cover_bound(cand) <= best_) return;
    }
  }

  std::vector<VertexMask> adj_;
  const std::vector<Rational>& w_;
  NodeCounter nodes_;
  std::vector<Vertex> current_, best_set_;
  Rational best_;
};

}  // namespace

std::pair<Rational, VertexSet> max_weight_independent_set(
    const Graph& g, const std::vector<Rational>& weights, SearchBudget budget) {
  if (static_cast<int>(weights.size()) != g.order())
    throw Error(ErrorCode::kInvalidArgument, "one weight per vertex required");
  VertexMask cand;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (weights[v].sign() < 0)
      throw Error(ErrorCode::kInvalidArgument, "weights must be non-negative");
    if (weights[v].sign() > 0) cand.set(v);
  }
  return WeightedSearch(g, weights, budget).run(cand);
}

FractionalCheck verify_fractional_solution(const Graph& g, const FractionalSolution& s,
                                           SearchBudget budget) {
  auto fail = [](std::string why) { return FractionalCheck{false, std::move(why)}; };
  if (s.sets.size() != s.weights.size()) return fail("sets and weights differ in length");
  std::vector<Rational> cover(g.order());
  Rational total;
  for (std::size_t i = 0; i < s.sets.size(); ++i) {
    for (Vertex v : s.sets[i])
      if (!g.has_vertex(v)) return fail("set member out of range");
    if (!is_independent(g, s.sets[i])) return fail("listed set is not independent");
    if (s.weights[i].sign() < 0) return fail("negative weight");
    for (Vertex v : s.sets[i]) cover[v] += s.weights[i];
    total += s.weights[i];
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (cover[v] < 1) return fail("vertex " + std::to_string(v) + " covered less than once");
  if (total != s.value) return fail("value differs from the sum of weights");
  if (s.dual) {
    const auto& y = *s.dual;
    if (static_cast<int>(y.size()) != g.order()) return fail("dual has wrong length");
    for (const auto& x : y)
      if (x.sign() < 0) return fail("negative dual entry");
    if (sum(y) != s.value) return fail("dual value differs from primal value");
    if (max_weight_independent_set(g, y, budget).first > 1)
      return fail("dual exceeds 1 on some independent set");
  }
  return {};
}

}  // namespace fbrooks
