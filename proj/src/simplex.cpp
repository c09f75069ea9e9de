#include "fbrooks/simplex.hpp"

namespace fbrooks {

DictionarySimplex::DictionarySimplex(std::vector<Rational> objective)
    : n_(static_cast<int>(objective.size())), d_(std::move(objective)) {
  nonbasic_.resize(n_);
  for (int j = 0; j < n_; ++j) nonbasic_[j] = j;
}

int DictionarySimplex::add_row(const std::vector<Rational>& coeffs, const Rational& rhs) {
  if (static_cast<int>(coeffs.size()) != n_)
    throw Error(ErrorCode::kInvalidArgument, "row has wrong number of coefficients");
  std::vector<Rational> row(n_);
  Rational b = rhs;
  for (int c = 0; c < n_; ++c)
    if (nonbasic_[c] < n_) row[c] = coeffs[nonbasic_[c]];
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    int var = basis_[i];
    if (var >= n_ || coeffs[var].is_zero()) continue;
    const Rational& a = coeffs[var];
    b -= a * beta_[i];
    for (int c = 0; c < n_; ++c)
      if (!alpha_[i][c].is_zero()) row[c] -= a * alpha_[i][c];
  }
  int slack = n_ + static_cast<int>(row_slack_.size());
  row_slack_.push_back(slack);
  basis_.push_back(slack);
  beta_.push_back(std::move(b));
  alpha_.push_back(std::move(row));
  return static_cast<int>(row_slack_.size()) - 1;
}

void DictionarySimplex::pivot(int r, int c) {
  ++pivots_;
  const Rational a = alpha_[r][c];
  auto& prow = alpha_[r];
  beta_[r] /= a;
  for (int j = 0; j < n_; ++j)
    if (j != c && !prow[j].is_zero()) prow[j] /= a;
  prow[c] = a.reciprocal();

  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (static_cast<int>(i) == r) continue;
    auto& row = alpha_[i];
    if (row[c].is_zero()) continue;
    const Rational f = row[c];
    beta_[i] -= f * beta_[r];
    for (int j = 0; j < n_; ++j)
      if (j != c && !prow[j].is_zero()) row[j] -= f * prow[j];
    row[c] = -(f * prow[c]);
  }
  if (!d_[c].is_zero()) {
    const Rational f = d_[c];
    z0_ += f * beta_[r];
    for (int j = 0; j < n_; ++j)
      if (j != c && !prow[j].is_zero()) d_[j] -= f * prow[j];
    d_[c] = -(f * prow[c]);
  }
  std::swap(basis_[r], nonbasic_[c]);
}

LpStatus DictionarySimplex::primal_phase(std::uint64_t max_pivots) {
  while (true) {
    int c = -1;
    for (int j = 0; j < n_; ++j)
      if (d_[j].sign() > 0 && (c < 0 || nonbasic_[j] < nonbasic_[c])) c = j;
    if (c < 0) return LpStatus::kOptimal;
    int r = -1;
    Rational best;
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
      if (alpha_[i][c].sign() <= 0) continue;
      Rational ratio = beta_[i] / alpha_[i][c];
      if (r < 0 || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
        r = static_cast<int>(i);
        best = std::move(ratio);
      }
    }
    if (r < 0) return LpStatus::kUnbounded;
    if (pivots_ >= max_pivots) throw PivotLimitError(pivots_);
    pivot(r, c);
  }
}

LpStatus DictionarySimplex::dual_phase(std::uint64_t max_pivots) {
  while (true) {
    int r = -1;
    for (std::size_t i = 0; i < beta_.size(); ++i)
      if (beta_[i].sign() < 0 && (r < 0 || basis_[i] < basis_[r])) r = static_cast<int>(i);
    if (r < 0) return LpStatus::kOptimal;
    int c = -1;
    Rational best;
    for (int j = 0; j < n_; ++j) {
      if (alpha_[r][j].sign() >= 0) continue;
      Rational ratio = d_[j] / alpha_[r][j];
      if (c < 0 || ratio < best || (ratio == best && nonbasic_[j] < nonbasic_[c])) {
        c = j;
        best = std::move(ratio);
      }
    }
    if (c < 0) return LpStatus::kInfeasible;
    if (pivots_ >= max_pivots) throw PivotLimitError(pivots_);
    pivot(r, c);
  }
}

LpStatus DictionarySimplex::solve(std::uint64_t max_pivots) {
  bool infeasible_start = false;
  for (const auto& b : beta_)
    if (b.sign() < 0) infeasible_start = true;
  if (infeasible_start) {
    for (const auto& d : d_)
      if (d.sign() > 0)
        throw Error(ErrorCode::kInvalidArgument,
                    "dictionary is neither primal nor dual feasible");
    if (dual_phase(max_pivots) == LpStatus::kInfeasible) return LpStatus::kInfeasible;
  }
  return primal_phase(max_pivots);
}

std::vector<Rational> DictionarySimplex::primal() const {
  std::vector<Rational> x(n_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] < n_) x[basis_[i]] = beta_[i];
  return x;
}

std::vector<Rational> DictionarySimplex::row_duals() const {
  std::vector<Rational> y(row_slack_.size());
  for (int c = 0; c < n_; ++c)
    if (nonbasic_[c] >= n_) y[nonbasic_[c] - n_] = -d_[c];
  return y;
}

}  // namespace fbrooks
