#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "quclass/operator_basis.hpp"
#include "quclass/tolerances.hpp"

namespace quclass::geometry {

using Point = std::vector<double>;

/// {θ : 1 + ⟨w, θ⟩ ≥ 0 for every normal w}.
struct PolytopeH {
  std::size_t dimension = 0;
  std::vector<Point> normals;
};

struct PolytopeV {
  std::size_t dimension = 0;
  std::vector<Point> vertices;
};

/// One face per outcome tuple, normal w_λ. Throws UnboundedRegion if the
/// LP finds a recession direction.
PolytopeH h_polytope(const basis::OperatorBasis& b, const Tolerances& tol = default_tolerances());

/// True iff the recession cone {d : ⟨w, d⟩ ≥ 0 ∀w} is {0}.
bool is_bounded(const PolytopeH& h, const Tolerances& tol = default_tolerances());

/// Bloch vectors of all n(n+1) shared eigenvectors, family by family.
PolytopeV mub_vertices(const basis::OperatorBasis& b);

/// min over faces of 1 + ⟨w, θ⟩; θ is inside iff the margin is ≥ −1e−12.
double membership(const Point& theta, const PolytopeH& h);

double insphere_radius(const PolytopeH& h);

/// Indices of vertices lying on each face (|1 + ⟨w, v⟩| ≤ boundary tol).
std::vector<std::vector<std::size_t>> face_vertex_sets(const PolytopeH& h, const PolytopeV& v,
                                                       const Tolerances& tol = default_tolerances());

struct TangencyReport {
  double radius = 0.0;                // insphere radius
  std::vector<double> centroid_norms; // per face; NaN for faces without vertices
  std::size_t faces_without_vertices = 0;
  double max_norm_deviation = 0.0;    // | ‖c‖ − radius |
  double max_direction_defect = 0.0;  // ‖c + w/‖w‖²‖
  double max_plane_residual = 0.0;    // |1 + ⟨w, c⟩|
  bool pass = false;
};

TangencyReport centroid_tangency(const PolytopeH& h, const PolytopeV& v, const Tolerances& tol = default_tolerances());

struct VertexEnumeration {
  PolytopeV polytope;
  std::size_t count = 0;
  std::size_t coarse_count = 0;  // clustering at 100× the dedup tolerance
  std::size_t peak_rays = 0;
};

/// Double-description vertex enumeration on the homogenised cone. Requires
/// dimension ≤ 14. Throws UnboundedRegion on rays at infinity and
/// NumericalDegeneracy when dedup at tol.dedup and 100·tol.dedup disagree.
VertexEnumeration enumerate_vertices(const PolytopeH& h, const Tolerances& tol = default_tolerances());

struct VertexComparison {
  std::size_t matched = 0;       // vertices of `a` found in `b`
  bool same_set = false;
};

VertexComparison compare_vertex_sets(const PolytopeV& a, const PolytopeV& b, double tol = 1e-7);

/// LP check that vertex `index` is not a convex combination of the others.
bool is_extreme(const PolytopeV& v, std::size_t index, const Tolerances& tol = default_tolerances());

struct EdgeReport {
  std::size_t edges = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t orthogonal_pairs = 0;  // among all vertex pairs, ⟨u, v⟩ = 0
  std::vector<std::vector<double>> gram;
};

/// u, v adjacent iff the normals active at both have rank ≥ dimension − 1
/// and the midpoint lies on the boundary.
EdgeReport edge_adjacency(const PolytopeV& v, const PolytopeH& h, const Tolerances& tol = default_tolerances());

}  // namespace quclass::geometry
