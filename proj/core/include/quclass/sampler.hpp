#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quclass/povm.hpp"
#include "quclass/tolerances.hpp"

namespace quclass::sampler {

struct OutcomeCounts {
  std::vector<std::uint64_t> counts;  // lexicographic outcome order
  std::uint64_t total = 0;
  std::uint64_t seed = 0;
};

/// Cleaned probability vector used for sampling. Negative entries are set to
/// zero and the rest renormalised, provided the clipped mass stays below
/// tol.sample_clip; otherwise InvalidDistribution.
std::vector<double> sampling_law(const std::vector<double>& p, const Tolerances& tol = default_tolerances());

/// Shots are cut into fixed blocks of `block_shots`; block b draws from
/// Rng(seed, b). Counts therefore depend only on (p, shots, seed).
inline constexpr std::uint64_t block_shots = 1u << 16;

/// One block's draws: inverse CDF over the lexicographic order.
OutcomeCounts sample_block(const std::vector<double>& law, std::uint64_t shots, std::uint64_t seed,
                           std::uint64_t block);

/// Associative and commutative; seeds must match.
OutcomeCounts merge(const OutcomeCounts& a, const OutcomeCounts& b);

OutcomeCounts sample(const povm::JointDistribution& p, std::uint64_t shots, std::uint64_t seed,
                     const Tolerances& tol = default_tolerances());

struct Fit {
  double chi2 = 0.0;
  std::size_t dof = 0;          // bins after pooling, minus one
  double quantile999 = 0.0;     // χ² 99.9% point for dof
  double tv = 0.0;              // ½ Σ |f − p|
  bool chi2_ok = false;         // chi2 ≤ quantile999
};

/// Pearson χ²; outcomes with expected count < 5 are pooled into one bin.
Fit goodness_of_fit(const OutcomeCounts& c, const std::vector<double>& p);

/// Table for dof ≤ 30 and dof ∈ {80, 1023}; Wilson-Hilferty otherwise.
double chi2_quantile_999(std::size_t dof);

/// Per-family empirical frequencies.
std::vector<double> empirical_marginal(const basis::OperatorBasis& b, const OutcomeCounts& c, std::size_t family);

double total_variation(const std::vector<double>& p, const std::vector<double>& q);

}  // namespace quclass::sampler
