#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "quclass/error.hpp"
#include "quclass/geometry.hpp"
#include "quclass/lp.hpp"
#include "quclass/povm.hpp"
#include "quclass/rng.hpp"

using namespace quclass;

namespace {

geometry::PolytopeH cube() {
  geometry::PolytopeH h{3, {}};
  for (std::size_t i = 0; i < 3; ++i)
    for (double s : {1.0, -1.0}) {
      geometry::Point w(3, 0.0);
      w[i] = s;
      h.normals.push_back(w);
    }
  return h;
}

double dist(const geometry::Point& a, const geometry::Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

TEST(Lp, SmallOptimum) {
  // min −x − y  s.t. x + s1 = 2, y + s2 = 3
  lp::Problem p{{{1, 0, 1, 0}, {0, 1, 0, 1}}, {2, 3}, {-1, -1, 0, 0}};
  const auto r = lp::solve(p);
  ASSERT_EQ(r.status, lp::Status::Optimal);
  EXPECT_NEAR(r.objective, -5.0, 1e-12);
}

TEST(Lp, InfeasibleAndUnbounded) {
  EXPECT_EQ(lp::solve({{{1, 1}}, {-1}, {}}).status, lp::Status::Infeasible);
  EXPECT_EQ(lp::solve({{{1, -1}}, {1}, {-1, 0}}).status, lp::Status::Unbounded);
  EXPECT_THROW(lp::solve({{{1, 1}}, {1, 2}, {}}), Error);
}

TEST(Lp, DegenerateZeroRightHandSide) {
  lp::Problem p{{{1, -1, 0}, {0, 1, -1}}, {0, 0}, {}};
  EXPECT_EQ(lp::solve(p).status, lp::Status::Optimal);
}

TEST(Geometry, QubitOctahedron) {
  const auto b = basis::pauli_basis();
  const auto h = geometry::h_polytope(b);
  ASSERT_EQ(h.normals.size(), 8u);
  for (const auto& w : h.normals)
    for (double x : w) EXPECT_NEAR(std::abs(x), 1.0, 1e-12);
  EXPECT_NEAR(geometry::insphere_radius(h), 1.0 / std::sqrt(3.0), 1e-12);
  const auto v = geometry::mub_vertices(b);
  ASSERT_EQ(v.vertices.size(), 6u);
  const auto en = geometry::enumerate_vertices(h);
  EXPECT_EQ(en.count, 6u);
  EXPECT_TRUE(geometry::compare_vertex_sets(v, en.polytope).same_set);
  const auto e = geometry::edge_adjacency(v, h);
  EXPECT_EQ(e.edges, 12u);
  const auto t = geometry::centroid_tangency(h, v);
  EXPECT_TRUE(t.pass);
  for (double c : t.centroid_norms) EXPECT_NEAR(c, 1.0 / std::sqrt(3.0), 1e-12);
}

TEST(Geometry, QubitFacesEquilateral) {
  const auto b = basis::pauli_basis();
  const auto h = geometry::h_polytope(b);
  const auto v = geometry::mub_vertices(b);
  for (const auto& f : geometry::face_vertex_sets(h, v)) {
    ASSERT_EQ(f.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i)
      EXPECT_NEAR(dist(v.vertices[f[i]], v.vertices[f[(i + 1) % 3]]), std::sqrt(2.0), 1e-12);
  }
}

TEST(Geometry, Membership) {
  const auto h = geometry::h_polytope(basis::pauli_basis());
  EXPECT_NEAR(geometry::membership({0, 0, 0}, h), 1.0, 1e-15);
  EXPECT_NEAR(geometry::membership({1, 0, 0}, h), 0.0, 1e-15);
  EXPECT_NEAR(geometry::membership({0.6, 0.6, 0.6}, h), -0.8, 1e-15);
  EXPECT_THROW(geometry::membership({0, 0}, h), Error);
}

TEST(Geometry, MembershipMatchesDistribution) {
  const auto b = basis::qutrit_builtin();
  const auto h = geometry::h_polytope(b);
  Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    states::BlochVector th{std::vector<double>(8)};
    for (auto& x : th.theta) x = 0.3 * rng.normal();
    const double m = geometry::membership(th.theta, h);
    const auto p = povm::joint_distribution(th, b, 1.0);
    EXPECT_NEAR(m, 81.0 * p.min_p, 1e-12);
    EXPECT_EQ(m >= -1e-12, p.valid);
  }
}

TEST(Geometry, QutritPolytope) {
  const auto b = basis::qutrit_builtin();
  const auto h = geometry::h_polytope(b);
  EXPECT_EQ(h.normals.size(), 81u);
  EXPECT_NEAR(geometry::insphere_radius(h), 1.0 / std::sqrt(8.0), 1e-12);
  const auto v = geometry::mub_vertices(b);
  ASSERT_EQ(v.vertices.size(), 12u);
  // First vertex (√3, 1, 0, …)/√2.
  EXPECT_NEAR(v.vertices[0][0], std::sqrt(1.5), 1e-12);
  EXPECT_NEAR(v.vertices[0][1], std::sqrt(0.5), 1e-12);
  for (std::size_t i = 2; i < 8; ++i) EXPECT_NEAR(v.vertices[0][i], 0.0, 1e-12);
  const auto en = geometry::enumerate_vertices(h);
  EXPECT_EQ(en.count, 12u);
  EXPECT_EQ(en.coarse_count, 12u);
  EXPECT_TRUE(geometry::compare_vertex_sets(v, en.polytope).same_set);
  for (std::size_t i = 0; i < 12; ++i) {
    EXPECT_TRUE(geometry::is_extreme(v, i));
    EXPECT_NEAR(geometry::membership(v.vertices[i], h), 0.0, 1e-12);
  }
  const auto e = geometry::edge_adjacency(v, h);
  EXPECT_EQ(e.edges, 66u);  // oracle: scipy ConvexHull adjacency
  EXPECT_EQ(e.orthogonal_pairs, 54u);
  for (std::size_t i = 0; i < 12; ++i) {
    EXPECT_NEAR(e.gram[i][i], 2.0, 1e-12);
    const auto minus = std::count_if(e.gram[i].begin(), e.gram[i].end(), [](double g) { return std::abs(g + 1) < 1e-9; });
    EXPECT_EQ(minus, 2);
  }
  const auto t = geometry::centroid_tangency(h, v);
  EXPECT_TRUE(t.pass);
  EXPECT_EQ(t.faces_without_vertices, 0u);
}

TEST(Geometry, CubeFixture) {
  const auto h = cube();
  EXPECT_TRUE(geometry::is_bounded(h));
  const auto en = geometry::enumerate_vertices(h);
  EXPECT_EQ(en.count, 8u);
  for (const auto& p : en.polytope.vertices)
    for (double x : p) EXPECT_NEAR(std::abs(x), 1.0, 1e-12);
}

TEST(Geometry, UnboundedDetected) {
  auto h = cube();
  h.normals.pop_back();  // drop 1 − θ_3 ≥ 0
  EXPECT_FALSE(geometry::is_bounded(h));
  try {
    geometry::enumerate_vertices(h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnboundedRegion);
  }
}

TEST(Geometry, NonExtremePoint) {
  geometry::PolytopeV v{2, {{0, 0}, {1, 0}, {0, 1}, {0.25, 0.25}}};
  EXPECT_TRUE(geometry::is_extreme(v, 0));
  EXPECT_FALSE(geometry::is_extreme(v, 3));
}

TEST(Geometry, FaceWithoutVerticesReported) {
  const auto b = basis::pauli_basis();
  const auto h = geometry::h_polytope(b);
  auto v = geometry::mub_vertices(b);
  v.vertices.resize(1);
  const auto t = geometry::centroid_tangency(h, v);
  EXPECT_EQ(t.faces_without_vertices, 4u);
  EXPECT_FALSE(t.pass);
}

TEST(Geometry, DimensionLimit) {
  geometry::PolytopeH h{15, {}};
  EXPECT_THROW(geometry::enumerate_vertices(h), Error);
}

TEST(Geometry, FourDimensionalMubPolytope) {
  const auto b = basis::from_mubs(mub::build_mubs(mub::prime_power_decompose(4)), basis::default_spectra(4));
  const auto h = geometry::h_polytope(b);
  EXPECT_EQ(h.normals.size(), 1024u);
  EXPECT_NEAR(geometry::insphere_radius(h), 1.0 / std::sqrt(15.0), 1e-12);
  const auto v = geometry::mub_vertices(b);
  EXPECT_EQ(v.vertices.size(), 20u);
  const auto e = geometry::edge_adjacency(v, h);
  EXPECT_EQ(e.edges, 190u);
  EXPECT_EQ(e.orthogonal_pairs, 160u);
  EXPECT_TRUE(geometry::centroid_tangency(h, v).pass);
}
