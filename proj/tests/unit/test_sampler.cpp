#include <gtest/gtest.h>

#include <cmath>

#include "quclass/error.hpp"
#include "quclass/sampler.hpp"

using namespace quclass;

namespace {

povm::JointDistribution uniform(std::size_t k) {
  povm::JointDistribution d;
  d.p.assign(k, 1.0 / static_cast<double>(k));
  d.valid = true;
  return d;
}

}  // namespace

TEST(Sampler, UniformQutritCountsWithinFiveSigma) {
  const auto c = sampler::sample(uniform(81), 81000, 3);
  const double sigma = std::sqrt(81000.0 * (1.0 / 81) * (80.0 / 81));
  std::uint64_t total = 0;
  for (auto x : c.counts) {
    EXPECT_LT(std::abs(static_cast<double>(x) - 1000.0), 5 * sigma);
    total += x;
  }
  EXPECT_EQ(total, 81000u);
  EXPECT_EQ(c.total, 81000u);
}

TEST(Sampler, PointMass) {
  povm::JointDistribution d;
  d.p.assign(9, 0.0);
  d.p[4] = 1.0;
  const auto c = sampler::sample(d, 5000, 1);
  EXPECT_EQ(c.counts[4], 5000u);
}

TEST(Sampler, Reproducible) {
  const auto a = sampler::sample(uniform(27), 200000, 8);
  const auto b = sampler::sample(uniform(27), 200000, 8);
  EXPECT_EQ(a.counts, b.counts);
  const auto c = sampler::sample(uniform(27), 200000, 9);
  EXPECT_NE(a.counts, c.counts);
}

TEST(Sampler, BlocksMergeAssociatively) {
  const auto law = sampler::sampling_law(uniform(8).p);
  const auto b0 = sampler::sample_block(law, 100, 5, 0);
  const auto b1 = sampler::sample_block(law, 100, 5, 1);
  const auto b2 = sampler::sample_block(law, 100, 5, 2);
  EXPECT_EQ(sampler::merge(sampler::merge(b0, b1), b2).counts, sampler::merge(b0, sampler::merge(b1, b2)).counts);
  EXPECT_THROW(sampler::merge(b0, sampler::sample_block(law, 10, 6, 0)), Error);
}

TEST(Sampler, NegativeMass) {
  povm::JointDistribution d;
  d.p = {0.5, 0.5 + 1e-11, -1e-11};
  EXPECT_NO_THROW(sampler::sample(d, 10, 0));
  d.p = {0.6, 0.5, -0.1};
  try {
    sampler::sample(d, 10, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidDistribution);
  }
}

TEST(Sampler, OutsidePolytopeRejected) {
  const auto b = basis::qutrit_builtin();
  const auto rho = states::random_state(3, states::StateKind::Pure, 2);
  const auto p = povm::joint_distribution(states::bloch_from_density(rho, b), b, 1.0);
  ASSERT_FALSE(p.valid);
  EXPECT_THROW(sampler::sample(p, 100, 0), Error);
}

TEST(Sampler, ExactCountsGiveZeroStatistics) {
  sampler::OutcomeCounts c{std::vector<std::uint64_t>(81, 100), 8100, 0};
  const auto f = sampler::goodness_of_fit(c, uniform(81).p);
  EXPECT_EQ(f.chi2, 0.0);
  EXPECT_EQ(f.tv, 0.0);
  EXPECT_EQ(f.dof, 80u);
  EXPECT_TRUE(f.chi2_ok);
}

TEST(Sampler, WrongLawFailsChiSquare) {
  povm::JointDistribution d;
  d.p = {0.4, 0.3, 0.2, 0.1};
  const auto c = sampler::sample(d, 20000, 4);
  EXPECT_TRUE(sampler::goodness_of_fit(c, d.p).chi2_ok);
  const std::vector<double> swapped{0.1, 0.3, 0.2, 0.4};
  EXPECT_FALSE(sampler::goodness_of_fit(c, swapped).chi2_ok);
}

TEST(Sampler, PoolingSmallExpectations) {
  sampler::OutcomeCounts c{{95, 3, 2}, 100, 0};
  const auto f = sampler::goodness_of_fit(c, {0.95, 0.03, 0.02});
  EXPECT_EQ(f.dof, 1u);  // {0}, pooled {1, 2}
  EXPECT_NEAR(f.chi2, 0.0, 1e-12);
}

// scipy.stats.chi2.ppf(0.999, dof)
TEST(Sampler, ChiSquareQuantiles) {
  EXPECT_NEAR(sampler::chi2_quantile_999(1), 10.827566, 1e-6);
  EXPECT_NEAR(sampler::chi2_quantile_999(30), 59.703064, 1e-6);
  EXPECT_NEAR(sampler::chi2_quantile_999(80), 124.839224, 1e-6);
  EXPECT_NEAR(sampler::chi2_quantile_999(1023), 1168.497164, 1e-6);
  EXPECT_NEAR(sampler::chi2_quantile_999(200), 267.540648, 0.2);
}

TEST(Sampler, MarginalsTrackEffects) {
  const auto b = basis::qutrit_builtin();
  const auto rho = states::random_state(3, states::StateKind::Mixed, 6);
  const auto p = povm::joint_distribution(states::bloch_from_density(rho, b), b, 0.25);
  const auto c = sampler::sample(p, 100000, 2);
  for (std::size_t m = 0; m < 4; ++m) {
    const auto e = povm::unsharp_effects(b, m, 0.25);
    std::vector<double> exact;
    for (const auto& x : e.effects) exact.push_back(trace_product(rho.mat(), x).real());
    EXPECT_LT(sampler::total_variation(sampler::empirical_marginal(b, c, m), exact), 0.02);
  }
}
