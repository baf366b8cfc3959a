#include <gtest/gtest.h>

#include <cmath>

#include "quclass/error.hpp"
#include "quclass/linalg.hpp"
#include "quclass/rng.hpp"

using namespace quclass;

namespace {

CMat random_hermitian(std::size_t n, Rng& rng) {
  CMat h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < n; ++j) {
      h(i, j) = {rng.normal(), rng.normal()};
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

}  // namespace

TEST(Linalg, DiagonalMatrixSortsAscending) {
  const std::vector<double> d{3.0, -1.0, 2.0};
  const auto e = herm_eig(CMat::diagonal(d));
  EXPECT_DOUBLE_EQ(e.values[0], -1.0);
  EXPECT_DOUBLE_EQ(e.values[1], 2.0);
  EXPECT_DOUBLE_EQ(e.values[2], 3.0);
  EXPECT_NEAR(std::abs(e.vectors(1, 0)), 1.0, 1e-15);
}

TEST(Linalg, PauliYSpectrum) {
  const CMat y{{0.0, {0.0, -1.0}}, {{0.0, 1.0}, 0.0}};
  const auto e = herm_eig(y);
  EXPECT_NEAR(e.values[0], -1.0, 1e-14);
  EXPECT_NEAR(e.values[1], 1.0, 1e-14);
  // Largest-modulus component real positive (first on ties).
  EXPECT_NEAR(e.vectors(0, 1).imag(), 0.0, 1e-15);
  EXPECT_GT(e.vectors(0, 1).real(), 0.0);
}

TEST(Linalg, DegenerateSpectrum) {
  const auto e = herm_eig(CMat::identity(4) * 2.5);
  for (double v : e.values) EXPECT_DOUBLE_EQ(v, 2.5);
  EXPECT_LT(unitarity_defect(e.vectors), 1e-14);
}

TEST(Linalg, RejectsNonHermitian) {
  CMat a(2);
  a(0, 1) = 1.0;
  try {
    herm_eig(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonHermitian);
  }
  CMat nan(2);
  nan(0, 0) = std::nan("");
  EXPECT_THROW(herm_eig(nan), Error);
}

TEST(Linalg, ZeroMatrix) {
  const auto e = herm_eig(CMat(3));
  for (double v : e.values) EXPECT_EQ(v, 0.0);
}

TEST(Linalg, RandomReconstructionProperty) {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 15;
    const CMat h = random_hermitian(n, rng);
    const auto e = herm_eig(h);
    EXPECT_LT(unitarity_defect(e.vectors), 1e-12);
    const CMat back = e.vectors * CMat::diagonal(e.values) * e.vectors.adjoint();
    EXPECT_LT((back - h).frobenius_norm(), 1e-11 * (1.0 + h.frobenius_norm()));
    for (std::size_t k = 1; k < n; ++k) EXPECT_LE(e.values[k - 1], e.values[k]);
    double tr = 0.0;
    for (double v : e.values) tr += v;
    EXPECT_NEAR(tr, h.trace().real(), 1e-11);
  }
}

TEST(Linalg, UnitaryExponential) {
  Rng rng(5);
  const CMat h = random_hermitian(5, rng);
  const CMat u = unitary_exp(h, 0.7);
  EXPECT_LT(unitarity_defect(u), 1e-13);
  // e^{ish} e^{-ish} = I
  EXPECT_LT((u * unitary_exp(h, -0.7) - CMat::identity(5)).frobenius_norm(), 1e-13);
  const CMat z{{1.0, 0.0}, {0.0, -1.0}};
  const CMat ez = unitary_exp(z, 0.3);
  EXPECT_NEAR(std::abs(ez(0, 0) - std::polar(1.0, 0.3)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ez(1, 1) - std::polar(1.0, -0.3)), 0.0, 1e-15);
}

TEST(Linalg, HelpersAndShapeErrors) {
  const CMat a{{1.0, 2.0}, {3.0, 4.0}};
  const CMat b{{0.0, 1.0}, {1.0, 0.0}};
  EXPECT_NEAR(std::abs(trace_product(a, b) - (a * b).trace()), 0.0, 1e-15);
  EXPECT_NEAR(min_eigenvalue(b), -1.0, 1e-15);
  EXPECT_THROW(a + CMat(3), Error);
  EXPECT_THROW((CMat{{1.0, 2.0}, {3.0}}), Error);
  const CVec u{1.0, {0.0, 1.0}};
  EXPECT_NEAR(norm(u), std::sqrt(2.0), 1e-15);
}

TEST(Rng, DeterministicStreams) {
  Rng a(42, 3), b(42, 3), c(42, 4);
  for (int i = 0; i < 10; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
  }
  Rng u(1);
  double s = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double x = u.uniform();
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
    s += x;
  }
  EXPECT_NEAR(s / 20000.0, 0.5, 0.01);
}
