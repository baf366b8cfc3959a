#include "quclass/lp.hpp"

#include <cmath>
#include <limits>

#include "quclass/error.hpp"

namespace quclass::lp {
namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1), 0.0) {}

  double& at(std::size_t i, std::size_t j) { return t_[i * (cols_ + 1) + j]; }
  double& rhs(std::size_t i) { return at(i, cols_); }
  double& cost(std::size_t j) { return at(rows_, j); }
  double& objective() { return at(rows_, cols_); }

  void pivot(std::size_t r, std::size_t c) {
    const double pv = at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) at(r, j) /= pv;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
    }
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> t_;
};

// Runs simplex iterations on the current cost row. Columns flagged in
// `blocked` never enter. With `stop_at_zero` the loop ends once the
// objective reaches zero (phase 1 has then found a feasible point).
Status iterate(Tableau& t, std::vector<std::size_t>& basis, const std::vector<bool>& blocked, std::size_t rows,
               std::size_t cols, double tol, std::size_t& pivots, std::size_t max_pivots, bool stop_at_zero) {
  while (true) {
    if (stop_at_zero && std::abs(t.objective()) <= tol) return Status::Optimal;
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (!blocked[j] && t.cost(j) < -tol) {
        enter = j;
        break;
      }
    if (enter == cols) return Status::Optimal;

    std::size_t leave = rows;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rows; ++i) {
      const double a = t.at(i, enter);
      if (a <= tol) continue;
      const double ratio = t.rhs(i) / a;
      if (ratio < best - tol || (std::abs(ratio - best) <= tol && leave < rows && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == rows) return Status::Unbounded;
    t.pivot(leave, enter);
    basis[leave] = enter;
    if (++pivots > max_pivots) return Status::IterationLimit;
  }
}

}  // namespace

Result solve(const Problem& problem, double tol, std::size_t max_pivots) {
  const std::size_t m = problem.b.size();
  if (problem.a.size() != m) throw Error(ErrorCode::DimensionMismatch, "LP rows vs right-hand side");
  const std::size_t n = m ? problem.a.front().size() : problem.c.size();
  for (const auto& row : problem.a)
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "ragged LP matrix");
  if (!problem.c.empty() && problem.c.size() != n) throw Error(ErrorCode::DimensionMismatch, "LP cost length");

  // Columns: n structural, then m artificials.
  const std::size_t cols = n + m;
  Tableau t(m, cols);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = problem.b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = sign * problem.a[i][j];
    t.at(i, n + i) = 1.0;
    t.rhs(i) = sign * problem.b[i];
    basis[i] = n + i;
  }

  // Phase 1: minimise the sum of artificials.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.cost(j) -= t.at(i, j);
    t.objective() -= t.rhs(i);
  }

  Result res;
  std::vector<bool> blocked(cols, false);
  Status s = iterate(t, basis, blocked, m, cols, tol, res.pivots, max_pivots, true);
  if (s == Status::IterationLimit) {
    res.status = s;
    return res;
  }
  if (-t.objective() > tol * std::max(1.0, static_cast<double>(m))) {
    res.status = Status::Infeasible;
    return res;
  }

  // Drive remaining artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(t.at(i, j)) > tol) {
        t.pivot(i, j);
        basis[i] = j;
        break;
      }
  }
  for (std::size_t j = n; j < cols; ++j) blocked[j] = true;

  // Phase 2.
  for (std::size_t j = 0; j <= cols; ++j) (j == cols ? t.objective() : t.cost(j)) = 0.0;
  if (!problem.c.empty()) {
    for (std::size_t j = 0; j < n; ++j) t.cost(j) = problem.c[j];
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] >= n) continue;
      const double cb = problem.c[basis[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= cols; ++j) (j == cols ? t.objective() : t.cost(j)) -= cb * t.at(i, j);
    }
    s = iterate(t, basis, blocked, m, cols, tol, res.pivots, max_pivots, false);
    if (s != Status::Optimal) {
      res.status = s;
      return res;
    }
  }

  res.status = Status::Optimal;
  res.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) res.x[basis[i]] = t.rhs(i);
  res.objective = 0.0;
  for (std::size_t j = 0; j < problem.c.size(); ++j) res.objective += problem.c[j] * res.x[j];
  return res;
}

}  // namespace quclass::lp
