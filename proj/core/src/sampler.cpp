#include "quclass/sampler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "quclass/error.hpp"
#include "quclass/rng.hpp"

namespace quclass::sampler {

std::vector<double> sampling_law(const std::vector<double>& p, const Tolerances& tol) {
  if (p.empty()) throw Error(ErrorCode::InvalidDistribution, "empty distribution");
  double clipped = 0.0;
  std::vector<double> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i])) throw Error(ErrorCode::InvalidDistribution, "non-finite probability");
    if (p[i] < 0.0) clipped -= p[i];
    q[i] = std::max(p[i], 0.0);
  }
  if (clipped >= tol.sample_clip) throw Error(ErrorCode::InvalidDistribution, "negative probability mass");
  const double s = std::accumulate(q.begin(), q.end(), 0.0);
  if (std::abs(s - 1.0) > 1e-9) throw Error(ErrorCode::InvalidDistribution, "probabilities do not sum to one");
  for (auto& x : q) x /= s;
  return q;
}

OutcomeCounts sample_block(const std::vector<double>& law, std::uint64_t shots, std::uint64_t seed,
                           std::uint64_t block) {
  std::vector<double> cdf(law.size());
  std::partial_sum(law.begin(), law.end(), cdf.begin());
  // Last nonzero outcome absorbs rounding in the final cumulative sum.
  std::size_t last = law.size() - 1;
  while (last > 0 && law[last] == 0.0) --last;
  OutcomeCounts c{std::vector<std::uint64_t>(law.size(), 0), shots, seed};
  Rng rng(seed, block);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform();
    auto k = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    ++c.counts[std::min(k, last)];
  }
  return c;
}

OutcomeCounts merge(const OutcomeCounts& a, const OutcomeCounts& b) {
  if (a.counts.size() != b.counts.size()) throw Error(ErrorCode::DimensionMismatch, "outcome spaces differ");
  if (a.seed != b.seed) throw Error(ErrorCode::InvalidArgument, "merging counts from different seeds");
  OutcomeCounts c = a;
  for (std::size_t i = 0; i < c.counts.size(); ++i) c.counts[i] += b.counts[i];
  c.total += b.total;
  return c;
}

OutcomeCounts sample(const povm::JointDistribution& p, std::uint64_t shots, std::uint64_t seed,
                     const Tolerances& tol) {
  const auto law = sampling_law(p.p, tol);
  OutcomeCounts total{std::vector<std::uint64_t>(law.size(), 0), 0, seed};
  for (std::uint64_t b = 0; b * block_shots < shots; ++b) {
    const std::uint64_t n = std::min<std::uint64_t>(block_shots, shots - b * block_shots);
    total = merge(total, sample_block(law, n, seed, b));
  }
  return total;
}

double chi2_quantile_999(std::size_t dof) {
  static constexpr std::array<double, 30> table{
      10.827566, 13.815511, 16.266236, 18.466827, 20.515006, 22.457744, 24.321886, 26.124482,
      27.877165, 29.588298, 31.264134, 32.90949,  34.528179, 36.123274, 37.697298, 39.252355,
      40.790217, 42.312396, 43.820196, 45.314747, 46.797038, 48.267942, 49.728232, 51.178598,
      52.619656, 54.051962, 55.47602,  56.892285, 58.301173, 59.703064};
  if (dof == 0) return 0.0;
  if (dof <= table.size()) return table[dof - 1];
  // Exact points for the full qutrit (81 outcomes) and n = 4 (1024) tables.
  if (dof == 80) return 124.839224;
  if (dof == 1023) return 1168.497164;
  const double k = static_cast<double>(dof);
  const double z = 3.090232306;
  const double a = 2.0 / (9.0 * k);
  return k * std::pow(1.0 - a + z * std::sqrt(a), 3);
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::DimensionMismatch, "distributions differ in length");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

Fit goodness_of_fit(const OutcomeCounts& c, const std::vector<double>& p) {
  if (c.counts.size() != p.size()) throw Error(ErrorCode::DimensionMismatch, "counts vs distribution");
  Fit fit;
  const double n = static_cast<double>(c.total);
  std::vector<double> freq(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) freq[i] = n > 0 ? static_cast<double>(c.counts[i]) / n : 0.0;
  fit.tv = total_variation(freq, p);

  double pooled_e = 0.0, pooled_o = 0.0;
  std::size_t bins = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double e = n * std::max(p[i], 0.0);
    const double o = static_cast<double>(c.counts[i]);
    if (e < 5.0) {
      pooled_e += e;
      pooled_o += o;
      continue;
    }
    fit.chi2 += (o - e) * (o - e) / e;
    ++bins;
  }
  if (pooled_e > 0.0) {
    fit.chi2 += (pooled_o - pooled_e) * (pooled_o - pooled_e) / pooled_e;
    ++bins;
  } else if (pooled_o > 0.0) {
    fit.chi2 = std::numeric_limits<double>::infinity();
  }
  fit.dof = bins > 0 ? bins - 1 : 0;
  fit.quantile999 = chi2_quantile_999(fit.dof);
  fit.chi2_ok = fit.chi2 <= fit.quantile999;
  return fit;
}

std::vector<double> empirical_marginal(const basis::OperatorBasis& b, const OutcomeCounts& c, std::size_t family) {
  if (c.counts.size() != b.outcome_count()) throw Error(ErrorCode::DimensionMismatch, "counts vs basis");
  if (family >= b.family_count()) throw Error(ErrorCode::InvalidArgument, "family index out of range");
  std::vector<double> m(static_cast<std::size_t>(b.n), 0.0);
  for (std::size_t l = 0; l < c.counts.size(); ++l) m[povm::decode_outcome(b, l)[family]] += static_cast<double>(c.counts[l]);
  for (auto& x : m) x /= static_cast<double>(c.total);
  return m;
}

}  // namespace quclass::sampler
