#include "fbrooks/fold.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "fbrooks/fractional.hpp"
#include "fbrooks/structure.hpp"

namespace fbrooks {

FoldColoring::FoldColoring(int a, int b, std::vector<std::vector<int>> assignment)
    : a_(a), b_(b), sets_(std::move(assignment)) {
  if (b < 1) throw Error(ErrorCode::kInvalidArgument, "fold b must be at least 1");
  if (a < b) throw Error(ErrorCode::kInvalidArgument, "palette smaller than fold");
  for (auto& s : sets_) std::sort(s.begin(), s.end());
}

std::string FoldViolation::describe() const {
  switch (kind) {
    case Kind::kVertexCount: return "assignment size differs from the vertex count";
    case Kind::kWrongSize: return "vertex " + std::to_string(u) + " has the wrong number of colors";
    case Kind::kOutOfPalette:
      return "vertex " + std::to_string(u) + " uses color " + std::to_string(color) +
             " outside the palette";
    case Kind::kRepeatedColor:
      return "vertex " + std::to_string(u) + " repeats color " + std::to_string(color);
    case Kind::kEdgeOverlap:
      return "edge (" + std::to_string(u) + "," + std::to_string(v) + ") shares color " +
             std::to_string(color);
  }
  return "unknown violation";
}

FoldVerdict verify_fold_coloring(const Graph& g, const FoldColoring& c) {
  using K = FoldViolation::Kind;
  const auto& sets = c.assignment();
  if (static_cast<int>(sets.size()) != g.order()) return {FoldViolation{K::kVertexCount}};
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& s = sets[v];
    if (static_cast<int>(s.size()) != c.b()) return {FoldViolation{K::kWrongSize, v}};
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= c.a()) return {FoldViolation{K::kOutOfPalette, v, -1, s[i]}};
      if (i > 0 && s[i] == s[i - 1]) return {FoldViolation{K::kRepeatedColor, v, -1, s[i]}};
    }
  }
  for (const Edge& e : g.edges()) {
    std::vector<int> common;
    std::set_intersection(sets[e.u].begin(), sets[e.u].end(), sets[e.v].begin(),
                          sets[e.v].end(), std::back_inserter(common));
    if (!common.empty()) return {FoldViolation{K::kEdgeOverlap, e.u, e.v, common.front()}};
  }
  return {};
}

namespace {

class FoldSearch {
 public:
  FoldSearch(const Graph& g, int a, int b, SearchBudget budget)
      : g_(g), a_(a), b_(b), nodes_(budget), count_(g.order(), std::vector<int>(a, 0)),
        forb_(g.order(), 0), chosen_(g.order(), 0), done_(g.order(), 0) {
    order_ = smallest_last_order(g);
    std::reverse(order_.begin(), order_.end());
    palette_ = a == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << a) - 1;
  }

  std::optional<FoldColoring> run() {
    if (!place(0, 0)) return std::nullopt;
    std::vector<std::vector<int>> sets(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v)
      for (int c = 0; c < a_; ++c)
        if ((chosen_[v] >> c) & 1) sets[v].push_back(c);
    return FoldColoring(a_, b_, std::move(sets));
  }

 private:
  bool place(std::size_t pos, int next_new) {
    if (pos == order_.size()) return true;
    Vertex v = order_[pos];
    std::uint64_t avail = palette_ & ~forb_[v];
    std::uint64_t old_mask = next_new >= 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << next_new) - 1;
    std::uint64_t reuse = avail & old_mask;
    int can_reuse = std::popcount(reuse);
    int fresh_left = a_ - next_new;
    for (int t = std::min(b_, can_reuse); t >= std::max(0, b_ - fresh_left); --t) {
      std::uint64_t fresh = 0;
      for (int i = 0; i < b_ - t; ++i) fresh |= std::uint64_t{1} << (next_new + i);
      if (choose(pos, v, reuse, t, 0, fresh, next_new + (b_ - t))) return true;
    }
    return false;
  }

  // picks t more colors from `pool` (bits at positions >= from), then recurses
  bool choose(std::size_t pos, Vertex v, std::uint64_t pool, int t, std::uint64_t picked,
              std::uint64_t fresh, int next_new) {
    if (t == 0) return commit(pos, v, picked | fresh, next_new);
    while (pool) {
      if (std::popcount(pool) < t) return false;
      std::uint64_t low = pool & (~pool + 1);
      pool &= pool - 1;
      if (choose(pos, v, pool, t - 1, picked | low, fresh, next_new)) return true;
    }
    return false;
  }

  bool commit(std::size_t pos, Vertex v, std::uint64_t set, int next_new) {
    if (!nodes_.tick())
      throw ResourceLimitError("fold coloring search exceeded node budget", nodes_.count());
    chosen_[v] = set;
    done_[v] = 1;
    bool ok = true;
    for (Vertex u : g_.neighbors(v)) {
      for (std::uint64_t s = set; s; s &= s - 1) {
        int c = std::countr_zero(s);
        if (count_[u][c]++ == 0) forb_[u] |= std::uint64_t{1} << c;
      }
      if (!done_[u] && a_ - std::popcount(forb_[u]) < b_) ok = false;
    }
    if (ok && place(pos + 1, next_new)) return true;
    for (Vertex u : g_.neighbors(v))
      for (std::uint64_t s = set; s; s &= s - 1) {
        int c = std::countr_zero(s);
        if (--count_[u][c] == 0) forb_[u] &= ~(std::uint64_t{1} << c);
      }
    done_[v] = 0;
    chosen_[v] = 0;
    return false;
  }

  const Graph& g_;
  int a_, b_;
  NodeCounter nodes_;
  std::vector<std::vector<int>> count_;
  std::vector<std::uint64_t> forb_, chosen_;
  std::vector<char> done_;
  std::vector<Vertex> order_;
  std::uint64_t palette_ = 0;
};

}  // namespace

std::optional<FoldColoring> find_ab_coloring(const Graph& g, int a, int b, SearchBudget budget) {
  if (b < 1 || a < b) throw Error(ErrorCode::kInvalidArgument, "need a >= b >= 1");
  if (a > 64) throw Error(ErrorCode::kSizeOutOfRange, "fold search supports palettes up to 64");
  return FoldSearch(g, a, b, budget).run();
}

int chi_b(const Graph& g, int b, SearchBudget budget) {
  if (b < 1) throw Error(ErrorCode::kInvalidArgument, "need b >= 1");
  if (g.order() == 0) return 0;
  ChiFOptions opt;
  opt.budget = budget;
  Rational lower_bound = chi_f(g, opt) * Rational(b);
  int lo = static_cast<int>(lower_bound.ceil());
  int hi = b * chromatic_number(g, budget);
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (find_ab_coloring(g, mid, b, budget)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

}  // namespace fbrooks
