// Double-description enumeration on the cone {(t, θ) : t ≥ 0, t + ⟨w, θ⟩ ≥ 0}.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "dense_real.hpp"
#include "quclass/error.hpp"
#include "quclass/geometry.hpp"

namespace quclass::geometry {
namespace {

constexpr double kZero = 1e-9;

struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
  void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] &= o.w[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
};

struct Ray {
  std::vector<double> x;
  Bits zero;
};

void normalise(std::vector<double>& x) {
  const double n = detail::norm(x);
  for (auto& v : x) v /= n;
}

std::vector<Point> cluster(const std::vector<Point>& pts, double tol) {
  std::vector<Point> reps;
  for (const auto& p : pts) {
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](const Point& q) {
      for (std::size_t i = 0; i < p.size(); ++i)
        if (std::abs(p[i] - q[i]) > tol) return false;
      return true;
    });
    if (!seen) reps.push_back(p);
  }
  return reps;
}

}  // namespace

VertexEnumeration enumerate_vertices(const PolytopeH& h, const Tolerances& tol) {
  const std::size_t d = h.dimension;
  if (d == 0 || d > 14) throw Error(ErrorCode::InvalidArgument, "vertex enumeration needs 1 ≤ dimension ≤ 14");
  const std::size_t dim = d + 1;

  // Row 0 is t ≥ 0, row f+1 is face f.
  detail::Rows rows;
  rows.push_back(std::vector<double>(dim, 0.0));
  rows[0][0] = 1.0;
  for (const auto& w : h.normals) {
    if (w.size() != d) throw Error(ErrorCode::DimensionMismatch, "normal length");
    std::vector<double> r(dim);
    r[0] = 1.0;
    std::copy(w.begin(), w.end(), r.begin() + 1);
    rows.push_back(std::move(r));
  }
  const std::size_t m = rows.size();

  std::vector<std::size_t> basis_rows;
  detail::Rows picked;
  for (std::size_t i = 0; i < m && picked.size() < dim; ++i) {
    picked.push_back(rows[i]);
    if (detail::rank(picked, tol.rank) == picked.size())
      basis_rows.push_back(i);
    else
      picked.pop_back();
  }
  if (picked.size() < dim) throw Error(ErrorCode::UnboundedRegion, "face normals do not span the space");
  const auto inv = detail::inverse(picked, tol.rank);
  if (!inv) throw Error(ErrorCode::NumericalDegeneracy, "initial simplicial cone is singular");

  std::vector<bool> processed(m, false);
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    Ray r{std::vector<double>(dim), Bits(m)};
    for (std::size_t i = 0; i < dim; ++i) r.x[i] = (*inv)[i][j];
    normalise(r.x);
    for (std::size_t k = 0; k < dim; ++k)
      if (k != j) r.zero.set(basis_rows[k]);
    rays.push_back(std::move(r));
  }
  for (auto i : basis_rows) processed[i] = true;

  VertexEnumeration out;
  out.peak_rays = rays.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    std::vector<double> s(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = detail::dot(rows[i], rays[r].x);
      if (s[r] > kZero) {
        pos.push_back(r);
        next.push_back(rays[r]);
      } else if (s[r] < -kZero) {
        neg.push_back(r);
      } else {
        next.push_back(rays[r]);
        next.back().zero.set(i);
      }
    }
    for (auto p : pos) {
      for (auto q : neg) {
        const Bits common = rays[p].zero & rays[q].zero;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && common.subset_of(rays[r].zero)) adjacent = false;
        if (!adjacent) continue;
        Ray nr{std::vector<double>(dim), common};
        for (std::size_t k = 0; k < dim; ++k) nr.x[k] = s[p] * rays[q].x[k] - s[q] * rays[p].x[k];
        normalise(nr.x);
        nr.zero.set(i);
        next.push_back(std::move(nr));
      }
    }
    processed[i] = true;
    rays = std::move(next);
    out.peak_rays = std::max(out.peak_rays, rays.size());
  }

  std::vector<Point> pts;
  for (const auto& r : rays) {
    if (r.x[0] <= kZero) throw Error(ErrorCode::UnboundedRegion, "ray at infinity");
    Point p(d);
    for (std::size_t k = 0; k < d; ++k) p[k] = r.x[k + 1] / r.x[0];
    pts.push_back(std::move(p));
  }
  std::sort(pts.begin(), pts.end(), std::greater<>());
  const auto fine = cluster(pts, tol.dedup);
  const auto coarse = cluster(pts, 100.0 * tol.dedup);
  out.count = fine.size();
  out.coarse_count = coarse.size();
  if (fine.size() != coarse.size())
    throw Error(ErrorCode::NumericalDegeneracy, "dedup ambiguous: " + std::to_string(fine.size()) + " vertices at " +
                                                    "the fine tolerance, " + std::to_string(coarse.size()) +
                                                    " at the coarse one");
  out.polytope.dimension = d;
  out.polytope.vertices = fine;
  return out;
}

}  // namespace quclass::geometry
