#pragma once

#include <cstdint>
#include <vector>

#include "fbrooks/error.hpp"
#include "fbrooks/rational.hpp"

namespace fbrooks {

enum class LpStatus { kOptimal, kUnbounded, kInfeasible };

// maximize c.x subject to A x <= b, x >= 0, with b >= 0 for the initial rows
// so the slack basis is feasible. Rows added later may have any right-hand
// side; the dictionary is repaired with dual simplex steps. Pivoting uses
// Bland's smallest-index rule in both phases.
class DictionarySimplex {
 public:
  explicit DictionarySimplex(std::vector<Rational> objective);

  // Returns the row index.
  int add_row(const std::vector<Rational>& coeffs, const Rational& rhs);

  LpStatus solve(std::uint64_t max_pivots = 1'000'000);

  int num_vars() const { return n_; }
  int num_rows() const { return static_cast<int>(row_slack_.size()); }
  Rational objective() const { return z0_; }
  std::vector<Rational> primal() const;
  // Multiplier of each row in an optimal dual solution.
  std::vector<Rational> row_duals() const;
  std::uint64_t pivots() const { return pivots_; }

 private:
  void pivot(int r, int c);
  LpStatus primal_phase(std::uint64_t max_pivots);
  LpStatus dual_phase(std::uint64_t max_pivots);

  int n_;
  // dictionary: x_{basis[r]} = beta[r] - sum_c alpha[r][c] x_{nonbasic[c]}
  std::vector<int> basis_, nonbasic_;
  std::vector<Rational> beta_;
  std::vector<std::vector<Rational>> alpha_;
  // z = z0 + sum_c d[c] x_{nonbasic[c]}
  Rational z0_;
  std::vector<Rational> d_;
  std::vector<int> row_slack_;  // row index -> slack variable id
  std::uint64_t pivots_ = 0;
};

class PivotLimitError : public Error {
 public:
  explicit PivotLimitError(std::uint64_t pivots)
      : Error(ErrorCode::kResourceLimit, "simplex pivot limit reached"), pivots_(pivots) {}
  std::uint64_t pivots() const noexcept { return pivots_; }

 private:
  std::uint64_t pivots_;
};

}  // namespace fbrooks
