#include <gtest/gtest.h>

#include "quclass/error.hpp"
#include "quclass/galois_field.hpp"
#include "quclass/mub.hpp"

using namespace quclass;

TEST(GaloisField, GF4Tables) {
  const GaloisField f(2, 2);
  EXPECT_EQ(f.modulus(), (std::vector<int>{1, 1, 1}));  // x² + x + 1
  // x · x = x + 1, encoded 2 · 2 = 3
  EXPECT_EQ(f.mul(2, 2), 3);
  EXPECT_EQ(f.add(2, 3), 1);
  EXPECT_EQ(f.trace(0), 0);
  EXPECT_EQ(f.trace(1), 0);
  EXPECT_EQ(f.trace(2), 1);
  EXPECT_EQ(f.trace(3), 1);
}

TEST(GaloisField, FieldAxioms) {
  for (auto [p, k] : {std::pair{2, 3}, {3, 2}, {2, 4}, {5, 1}}) {
    const GaloisField f(p, k);
    const int q = f.order();
    for (int a = 1; a < q; ++a) {
      int inverses = 0;
      for (int b = 1; b < q; ++b) inverses += f.mul(a, b) == 1;
      EXPECT_EQ(inverses, 1) << "GF(" << q << ") element " << a;
      EXPECT_EQ(f.add(a, f.neg(a)), 0);
      EXPECT_LT(f.trace(a), p);
    }
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) EXPECT_EQ(f.trace(f.add(a, b)), (f.trace(a) + f.trace(b)) % p);
  }
}

TEST(GaloisField, BadParameters) { EXPECT_THROW(GaloisField(1, 2), Error); }

TEST(Mub, PrimePowerDecomposition) {
  const auto pp = mub::prime_power_decompose(8);
  EXPECT_EQ(pp.p, 2);
  EXPECT_EQ(pp.k, 3);
  EXPECT_EQ(mub::prime_power_decompose(9).p, 3);
  for (int n : {6, 10, 12, 14, 15}) {
    try {
      mub::prime_power_decompose(n);
      FAIL() << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotPrimePower);
    }
  }
  EXPECT_THROW(mub::prime_power_decompose(1), Error);
}

TEST(Mub, AllPrimePowersUpTo16) {
  for (int n : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const auto m = mub::build_mubs(mub::prime_power_decompose(n));
    ASSERT_EQ(m.bases.size(), static_cast<std::size_t>(n + 1)) << n;
    const auto r = mub::unbiasedness_report(m);
    EXPECT_TRUE(r.pass) << n;
    EXPECT_LT(r.max_cross_deviation, 1e-12) << n;
    EXPECT_LT(r.max_intra_deviation, 1e-12) << n;
    // Basis 0 is the computational basis.
    EXPECT_LT(max_abs_diff(m.bases[0], CMat::identity(static_cast<std::size_t>(n))), 1e-15);
  }
}

TEST(Mub, QubitBasesAreSigmaEigenbases) {
  const auto m = mub::build_mubs(mub::prime_power_decompose(2));
  const CMat x{{0.0, 1.0}, {1.0, 0.0}};
  const CMat& b = m.bases[1];
  const CMat d = b.adjoint() * x * b;
  EXPECT_LT(d.offdiag_norm(), 1e-15);
}

TEST(Mub, DetectsBrokenCandidate) {
  auto m = mub::build_mubs(mub::prime_power_decompose(3));
  m.bases[2] = m.bases[1];
  const auto r = mub::unbiasedness_report(m);
  EXPECT_FALSE(r.pass);
  EXPECT_NEAR(r.max_cross_deviation, 2.0 / 3.0, 1e-12);
  m.bases[1] = CMat(2);
  EXPECT_THROW(mub::unbiasedness_report(m), Error);
}
