#include "quclass/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dense_real.hpp"
#include "quclass/error.hpp"
#include "quclass/lp.hpp"
#include "quclass/povm.hpp"

namespace quclass::geometry {

using detail::dot;

PolytopeH h_polytope(const basis::OperatorBasis& b, const Tolerances& tol) {
  PolytopeH h;
  h.dimension = b.size();
  const std::size_t faces = b.outcome_count();
  h.normals.reserve(faces);
  for (std::size_t l = 0; l < faces; ++l) h.normals.push_back(povm::face_normal(b, l));
  if (!is_bounded(h, tol)) throw Error(ErrorCode::UnboundedRegion, "recession cone is nontrivial");
  return h;
}

bool is_bounded(const PolytopeH& h, const Tolerances& tol) {
  const std::size_t d = h.dimension;
  const std::size_t f = h.normals.size();
  if (f == 0) return d == 0;
  // Bounded iff the normals span R^d and some strictly positive y has
  // Σ y_f w_f = 0. Writing y = 1 + s with s ≥ 0 gives one feasibility LP.
  if (detail::rank(h.normals, tol.rank) < d) return false;
  lp::Problem pr;
  pr.a.assign(d, std::vector<double>(f));
  pr.b.assign(d, 0.0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < f; ++c) {
      pr.a[r][c] = h.normals[c][r];
      pr.b[r] -= h.normals[c][r];
    }
  }
  return lp::solve(pr, tol.lp).status == lp::Status::Optimal;
}

PolytopeV mub_vertices(const basis::OperatorBasis& b) {
  PolytopeV v;
  v.dimension = b.size();
  for (const auto& vecs : b.eigenvectors) {
    for (std::size_t k = 0; k < vecs.dim(); ++k) {
      const CVec psi = vecs.column(k);
      Point p(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) p[i] = inner(psi, b.ops[i] * psi).real();
      v.vertices.push_back(std::move(p));
    }
  }
  return v;
}

double membership(const Point& theta, const PolytopeH& h) {
  if (theta.size() != h.dimension) throw Error(ErrorCode::DimensionMismatch, "θ vs polytope dimension");
  double m = std::numeric_limits<double>::infinity();
  for (const auto& w : h.normals) m = std::min(m, 1.0 + dot(w, theta));
  return m;
}

double insphere_radius(const PolytopeH& h) {
  double r = std::numeric_limits<double>::infinity();
  for (const auto& w : h.normals) r = std::min(r, 1.0 / detail::norm(w));
  return r;
}

std::vector<std::vector<std::size_t>> face_vertex_sets(const PolytopeH& h, const PolytopeV& v,
                                                       const Tolerances& tol) {
  std::vector<std::vector<std::size_t>> sets(h.normals.size());
  for (std::size_t f = 0; f < h.normals.size(); ++f)
    for (std::size_t i = 0; i < v.vertices.size(); ++i)
      if (std::abs(1.0 + dot(h.normals[f], v.vertices[i])) <= tol.boundary) sets[f].push_back(i);
  return sets;
}

TangencyReport centroid_tangency(const PolytopeH& h, const PolytopeV& v, const Tolerances& tol) {
  TangencyReport rep;
  rep.radius = insphere_radius(h);
  const auto sets = face_vertex_sets(h, v, tol);
  for (std::size_t f = 0; f < sets.size(); ++f) {
    if (sets[f].empty()) {
      ++rep.faces_without_vertices;
      rep.centroid_norms.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    const auto& w = h.normals[f];
    Point c(h.dimension, 0.0);
    for (auto i : sets[f])
      for (std::size_t j = 0; j < h.dimension; ++j) c[j] += v.vertices[i][j];
    for (auto& x : c) x /= static_cast<double>(sets[f].size());
    const double cn = detail::norm(c);
    rep.centroid_norms.push_back(cn);
    rep.max_norm_deviation = std::max(rep.max_norm_deviation, std::abs(cn - rep.radius));
    const double w2 = dot(w, w);
    double dd = 0.0;
    for (std::size_t j = 0; j < h.dimension; ++j) dd += std::pow(c[j] + w[j] / w2, 2);
    rep.max_direction_defect = std::max(rep.max_direction_defect, std::sqrt(dd));
    rep.max_plane_residual = std::max(rep.max_plane_residual, std::abs(1.0 + dot(w, c)));
  }
  rep.pass = rep.faces_without_vertices == 0 && rep.max_norm_deviation <= tol.boundary &&
             rep.max_direction_defect <= tol.boundary && rep.max_plane_residual <= tol.boundary;
  return rep;
}

VertexComparison compare_vertex_sets(const PolytopeV& a, const PolytopeV& b, double tol) {
  VertexComparison cmp;
  auto contained = [tol](const Point& p, const PolytopeV& s) {
    return std::any_of(s.vertices.begin(), s.vertices.end(), [&](const Point& q) {
      double m = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) m = std::max(m, std::abs(p[i] - q[i]));
      return m <= tol;
    });
  };
  for (const auto& p : a.vertices)
    if (contained(p, b)) ++cmp.matched;
  std::size_t back = 0;
  for (const auto& q : b.vertices)
    if (contained(q, a)) ++back;
  cmp.same_set = cmp.matched == a.vertices.size() && back == b.vertices.size();
  return cmp;
}

bool is_extreme(const PolytopeV& v, std::size_t index, const Tolerances& tol) {
  if (index >= v.vertices.size()) throw Error(ErrorCode::InvalidArgument, "vertex index out of range");
  const std::size_t d = v.dimension;
  const std::size_t m = v.vertices.size() - 1;
  if (m == 0) return true;
  // v_index = Σ λ_j v_j, Σ λ_j = 1, λ ≥ 0 over the other vertices.
  lp::Problem pr;
  pr.a.assign(d + 1, std::vector<double>(m, 0.0));
  pr.b.assign(d + 1, 0.0);
  std::size_t c = 0;
  for (std::size_t j = 0; j < v.vertices.size(); ++j) {
    if (j == index) continue;
    for (std::size_t r = 0; r < d; ++r) pr.a[r][c] = v.vertices[j][r];
    pr.a[d][c] = 1.0;
    ++c;
  }
  for (std::size_t r = 0; r < d; ++r) pr.b[r] = v.vertices[index][r];
  pr.b[d] = 1.0;
  return lp::solve(pr, tol.lp).status == lp::Status::Infeasible;
}

EdgeReport edge_adjacency(const PolytopeV& v, const PolytopeH& h, const Tolerances& tol) {
  EdgeReport rep;
  const std::size_t nv = v.vertices.size();
  const std::size_t d = h.dimension;
  rep.gram.assign(nv, std::vector<double>(nv, 0.0));
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j) rep.gram[i][j] = dot(v.vertices[i], v.vertices[j]);

  std::vector<std::vector<bool>> active(nv, std::vector<bool>(h.normals.size()));
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t f = 0; f < h.normals.size(); ++f)
      active[i][f] = std::abs(1.0 + dot(h.normals[f], v.vertices[i])) <= tol.boundary;

  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = i + 1; j < nv; ++j) {
      if (std::abs(rep.gram[i][j]) <= tol.boundary) ++rep.orthogonal_pairs;
      detail::Rows rows;
      for (std::size_t f = 0; f < h.normals.size(); ++f)
        if (active[i][f] && active[j][f]) rows.push_back(h.normals[f]);
      if (rows.size() + 1 < d) continue;
      if (detail::rank(rows, tol.rank) + 1 < d) continue;
      Point mid(d);
      for (std::size_t r = 0; r < d; ++r) mid[r] = 0.5 * (v.vertices[i][r] + v.vertices[j][r]);
      if (std::abs(membership(mid, h)) > tol.boundary) continue;
      rep.pairs.emplace_back(i, j);
    }
  }
  rep.edges = rep.pairs.size();
  return rep;
}

}  // namespace quclass::geometry
