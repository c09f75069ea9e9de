#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fbrooks/error.hpp"
#include "fbrooks/graph.hpp"
#include "fbrooks/rational.hpp"

namespace fbrooks {

struct FractionalSolution {
  std::vector<VertexSet> sets;     // independent sets
  std::vector<Rational> weights;   // parallel to sets, all > 0
  Rational value;                  // sum of weights
  std::optional<std::vector<Rational>> dual;  // per-vertex weights
};

enum class LpMode { kAuto, kEnumerate, kColumnGeneration };

struct ChiFOptions {
  LpMode mode = LpMode::kAuto;
  bool with_dual = true;
  int enumerate_max_order = 20;  // kAuto switches to column generation above
  SearchBudget budget = {};      // nodes for independent-set searches
  std::uint64_t max_pivots = 1'000'000;
};

// Thrown when the LP cannot be finished within the limits; carries the best
// bounds proved so far (lower from a scaled dual, upper from a cover).
class LpLimitError : public Error {
 public:
  LpLimitError(const std::string& what, Rational lower, std::optional<Rational> upper)
      : Error(ErrorCode::kResourceLimit, what), lower_(std::move(lower)),
        upper_(std::move(upper)) {}
  const Rational& lower() const noexcept { return lower_; }
  const std::optional<Rational>& upper() const noexcept { return upper_; }

 private:
  Rational lower_;
  std::optional<Rational> upper_;
};

std::pair<Rational, FractionalSolution> chi_f_exact(const Graph& g,
                                                    const ChiFOptions& options = {});
Rational chi_f(const Graph& g, const ChiFOptions& options = {});

// |V| / alpha; throws not-vertex-transitive.
Rational chi_f_vertex_transitive(const Graph& g, SearchBudget budget = {});

// Maximum-weight independent set for non-negative weights; among sets of
// equal weight the lexicographically first in ascending-id search order.
std::pair<Rational, VertexSet> max_weight_independent_set(
    const Graph& g, const std::vector<Rational>& weights, SearchBudget budget = {});

struct FractionalCheck {
  bool valid = true;
  std::string problem;
  explicit operator bool() const { return valid; }
};

// Re-checks every FractionalSolution invariant exactly (independence,
// covering, value, and the dual side via an exact weighted search).
FractionalCheck verify_fractional_solution(const Graph& g, const FractionalSolution& s,
                                           SearchBudget budget = {});

}  // namespace fbrooks
