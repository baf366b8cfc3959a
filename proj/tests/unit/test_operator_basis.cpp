#include <gtest/gtest.h>

#include <cmath>

#include "quclass/error.hpp"
#include "quclass/operator_basis.hpp"

using namespace quclass;

TEST(OperatorBasis, QutritBuiltinValidates) {
  const auto b = basis::qutrit_builtin();
  ASSERT_EQ(b.size(), 8u);
  ASSERT_EQ(b.family_count(), 4u);
  EXPECT_EQ(b.outcome_count(), 81u);
  const auto v = basis::validate(b, 1e-9);
  EXPECT_TRUE(v.pass);
  EXPECT_TRUE(v.complete);
  EXPECT_LT(v.orthonormality, 1e-12);
  EXPECT_LT(v.unbiasedness, 1e-12);
}

TEST(OperatorBasis, QutritEigenTable) {
  const auto b = basis::qutrit_builtin();
  const double r32 = std::sqrt(1.5), r12 = std::sqrt(0.5), r2 = std::sqrt(2.0);
  const std::vector<std::vector<double>> expected{{r32, r12}, {0.0, -r2}, {-r32, r12}};
  for (const auto& fam : b.table.outcomes)
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t j = 0; j < 2; ++j) EXPECT_NEAR(fam[k][j], expected[k][j], 1e-12);
}

TEST(OperatorBasis, CrossFamilyCommutator) {
  const auto b = basis::qutrit_builtin();
  EXPECT_NEAR(commutator(b.ops[0], b.ops[2]).frobenius_norm(), 3.0, 1e-12);
  EXPECT_LT(commutator(b.ops[0], b.ops[1]).frobenius_norm(), 1e-14);
}

TEST(OperatorBasis, PauliAndGellMann) {
  const auto p = basis::pauli_basis();
  EXPECT_TRUE(basis::validate(p).pass);
  EXPECT_EQ(p.outcome_count(), 8u);
  const auto g = basis::gell_mann_basis();
  const auto v = basis::validate(g);
  EXPECT_FALSE(v.complete);  // eight singleton families
  EXPECT_LT(v.orthonormality, 1e-12);
  EXPECT_LT(v.trace, 1e-15);
  EXPECT_FALSE(v.pass);
}

TEST(OperatorBasis, MubBasesForPrimePowers) {
  for (int n : {2, 3, 4, 5, 7, 8, 9}) {
    const auto b = basis::from_mubs(mub::build_mubs(mub::prime_power_decompose(n)), basis::default_spectra(n));
    EXPECT_EQ(b.size(), static_cast<std::size_t>(n * n - 1));
    EXPECT_TRUE(basis::validate(b).pass) << n;
  }
}

TEST(OperatorBasis, DefaultSpectraConditions) {
  for (int n = 2; n <= 9; ++n) {
    const auto c = basis::default_spectra(n);
    ASSERT_EQ(c.size(), static_cast<std::size_t>(n - 1));
    for (std::size_t a = 0; a < c.size(); ++a) {
      double s = 0.0;
      for (double x : c[a]) s += x;
      EXPECT_NEAR(s, 0.0, 1e-13);
      for (std::size_t b = 0; b < c.size(); ++b) {
        double d = 0.0;
        for (int k = 0; k < n; ++k) d += c[a][k] * c[b][k];
        EXPECT_NEAR(d, a == b ? n : 0.0, 1e-12);
      }
    }
  }
}

TEST(OperatorBasis, BadSpectraRejected) {
  const auto m = mub::build_mubs(mub::prime_power_decompose(3));
  auto c = basis::default_spectra(3);
  c[0][0] += 0.1;
  try {
    basis::from_mubs(m, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadSpectra);
  }
  EXPECT_THROW(basis::from_mubs(m, {c[1]}), Error);
}

TEST(OperatorBasis, FamilyPartitionErrors) {
  const auto b = basis::qutrit_builtin();
  EXPECT_THROW(basis::regroup(b, {{0, 1}, {2, 3}}), Error);
  EXPECT_THROW(basis::regroup(b, {{0, 1, 2, 3, 4, 5, 6, 8}}), Error);
  EXPECT_THROW(basis::regroup(b, {{0, 0}, {1, 2, 3, 4, 5, 6, 7}}), Error);
}

TEST(OperatorBasis, FamilyCombination) {
  const auto b = basis::qutrit_builtin();
  const std::vector<double> t{0.3, -0.7};
  const CMat a = basis::family_combination(b, 0, t);
  EXPECT_LT(max_abs_diff(a, b.ops[0] * 0.3 + b.ops[1] * -0.7), 1e-15);
  EXPECT_THROW(basis::family_combination(b, 0, std::vector<double>{1.0}), Error);
  EXPECT_EQ(basis::entrywise_deviation(b, b), 0.0);
}
