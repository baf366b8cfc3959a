#pragma once

// Small dense real helpers shared by the polytope code. Not installed.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

namespace quclass::detail {

using Rows = std::vector<std::vector<double>>;

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Row rank by Gaussian elimination with partial pivoting; rows are
// normalised first so the threshold is relative.
inline std::size_t rank(Rows rows, double tol) {
  if (rows.empty()) return 0;
  for (auto& r : rows) {
    const double nr = norm(r);
    if (nr > 0.0)
      for (auto& x : r) x /= nr;
  }
  const std::size_t cols = rows.front().size();
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
    std::size_t piv = rk;
    for (std::size_t i = rk + 1; i < rows.size(); ++i)
      if (std::abs(rows[i][c]) > std::abs(rows[piv][c])) piv = i;
    if (std::abs(rows[piv][c]) <= tol) continue;
    std::swap(rows[piv], rows[rk]);
    for (std::size_t i = rk + 1; i < rows.size(); ++i) {
      const double f = rows[i][c] / rows[rk][c];
      if (f == 0.0) continue;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rk][j];
    }
    ++rk;
  }
  return rk;
}

// Gauss-Jordan inverse of a square matrix; nullopt if singular at tol.
inline std::optional<Rows> inverse(Rows a, double tol) {
  const std::size_t n = a.size();
  Rows inv(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::abs(a[i][c]) > std::abs(a[piv][c])) piv = i;
    if (std::abs(a[piv][c]) <= tol) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const double d = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      const double f = a[i][c];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace quclass::detail
