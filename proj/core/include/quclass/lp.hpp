#pragma once

#include <cstddef>
#include <vector>

namespace quclass::lp {

/// minimize c·x  subject to  A x = b,  x ≥ 0.
struct Problem {
  std::vector<std::vector<double>> a;  // rows
  std::vector<double> b;
  std::vector<double> c;               // empty means a pure feasibility problem
};

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Result {
  Status status = Status::Infeasible;
  double objective = 0.0;
  std::vector<double> x;
  std::size_t pivots = 0;
};

/// Dense two-phase simplex with Bland's anti-cycling rule.
Result solve(const Problem& problem, double tol = 1e-9, std::size_t max_pivots = 200000);

}  // namespace quclass::lp
