#include "quclass/charfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "quclass/error.hpp"
#include "quclass/rng.hpp"

namespace quclass::charfun {

TVector operator-(const TVector& a, const TVector& b) {
  if (a.t.size() != b.t.size()) throw Error(ErrorCode::DimensionMismatch, "t vectors");
  TVector d{a.t};
  for (std::size_t i = 0; i < d.t.size(); ++i) d.t[i] -= b.t[i];
  return d;
}

namespace {

std::vector<double> family_slice(const basis::OperatorBasis& b, std::size_t m, const TVector& t) {
  std::vector<double> s;
  for (auto i : b.families[m]) s.push_back(t.t[i]);
  return s;
}

}  // namespace

std::vector<cplx> mh_charfun_terms(const CMat& rho, const basis::OperatorBasis& b, const TVector& t) {
  if (t.t.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "t length vs basis size");
  if (static_cast<int>(rho.dim()) != b.n) throw Error(ErrorCode::DimensionMismatch, "state vs basis");
  const std::size_t f = b.family_count();
  std::vector<CMat> exps;
  for (std::size_t m = 0; m < f; ++m) exps.push_back(unitary_exp(basis::family_combination(b, m, family_slice(b, m, t)), 1.0));

  std::vector<std::size_t> perm(f);
  std::iota(perm.begin(), perm.end(), 0);
  double count = 1.0;
  for (std::size_t k = 2; k <= f; ++k) count *= static_cast<double>(k);

  std::vector<cplx> terms;
  do {
    CMat prod = exps[perm[0]];
    for (std::size_t k = 1; k < f; ++k) prod = prod * exps[perm[k]];
    terms.push_back(trace_product(rho, prod) / count);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return terms;
}

cplx mh_charfun(const CMat& rho, const basis::OperatorBasis& b, const TVector& t) {
  const auto terms = mh_charfun_terms(rho, b, t);
  return std::accumulate(terms.begin(), terms.end(), cplx{});
}

cplx classical_charfun(const povm::JointDistribution& p, const basis::OperatorBasis& b, const TVector& t) {
  if (p.p.size() != b.outcome_count()) throw Error(ErrorCode::DimensionMismatch, "distribution vs basis");
  if (t.t.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "t length vs basis size");
  // Phase of outcome k in family m: ⟨t^{(m)}, z^{(m)}_k⟩.
  std::vector<std::vector<double>> phase(b.family_count());
  for (std::size_t m = 0; m < b.family_count(); ++m) {
    const auto tm = family_slice(b, m, t);
    for (const auto& z : b.table.outcomes[m]) phase[m].push_back(std::inner_product(z.begin(), z.end(), tm.begin(), 0.0));
  }
  cplx s = 0.0;
  for (std::size_t l = 0; l < p.p.size(); ++l) {
    const auto digits = povm::decode_outcome(b, l);
    double ph = 0.0;
    for (std::size_t m = 0; m < digits.size(); ++m) ph += phase[m][digits[m]];
    s += p.p[l] * std::polar(1.0, ph);
  }
  return s;
}

std::vector<TVector> random_grid(const basis::OperatorBasis& b, std::size_t points, std::uint64_t seed) {
  Rng rng(seed, 0x7A);
  std::vector<TVector> grid(points);
  for (auto& g : grid) {
    g.t.resize(b.size());
    for (auto& x : g.t) x = rng.uniform(-std::numbers::pi, std::numbers::pi);
  }
  return grid;
}

CoincidenceReport coincidence_scan(const CMat& rho, const basis::OperatorBasis& b, std::span<const TVector> grid) {
  if (grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty t grid");
  const auto theta = states::bloch_from_density(rho, b);
  const auto p = povm::joint_distribution(theta, b, 1.0);
  CoincidenceReport r;
  r.points = grid.size();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double d = std::abs(mh_charfun(rho, b, grid[i]) - classical_charfun(p, b, grid[i]));
    if (d > r.max_deviation) {
      r.max_deviation = d;
      r.argmax = i;
    }
  }
  return r;
}

double bochner_check(const CharFn& phi, std::span<const TVector> points) {
  const std::size_t r = points.size();
  if (r < 1 || r > 16) throw Error(ErrorCode::InvalidArgument, "Bochner point sets need 1 ≤ r ≤ 16");
  CMat gram(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram(i, j) = phi(points[i] - points[j]);
  return min_eigenvalue(hermitian_part(gram));
}

BochnerSearch bochner_search(const CharFn& phi, std::size_t dimension, std::size_t candidates, std::uint64_t seed) {
  static constexpr double kScales[] = {0.5, 1.0, 2.0};
  static constexpr std::size_t kSizes[] = {4, 8};
  Rng rng(seed, 0xB0C);
  BochnerSearch s;
  s.best_min_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < candidates; ++c) {
    const std::size_t r = kSizes[c % 2];
    const double scale = kScales[(c / 2) % 3];
    std::vector<TVector> pts(r);
    for (auto& p : pts) {
      p.t.resize(dimension);
      for (auto& x : p.t) x = scale * rng.normal();
    }
    const double lo = bochner_check(phi, pts);
    if (lo < s.best_min_eigenvalue) {
      s.best_min_eigenvalue = lo;
      s.best_r = r;
      s.best_scale = scale;
      s.witness = std::move(pts);
    }
  }
  s.candidates = candidates;
  s.violation = s.best_min_eigenvalue < -1e-9;
  return s;
}

std::vector<CMat> qutrit_diagonalizers() {
  const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const cplx w2 = w * w;
  const cplx one = 1.0;
  return {
      CMat{{one, one, one}, {one, w, w2}, {one, w2, w}},
      CMat{{one, w2, one}, {one, one, w2}, {one, w, w}},
      CMat{{one, w, one}, {one, w2, w2}, {one, one, w}},
  };
}

DiagonalizerReport diagonalizer_check(const basis::OperatorBasis& qutrit, std::size_t trials, std::uint64_t seed) {
  if (qutrit.n != 3 || qutrit.family_count() != 4)
    throw Error(ErrorCode::InvalidArgument, "diagonalizer check needs the four-family qutrit basis");
  DiagonalizerReport r;
  r.trials = trials;
  std::vector<CMat> u;
  for (auto& m : qutrit_diagonalizers()) {
    u.push_back(m * (1.0 / std::sqrt(3.0)));
    r.max_unitarity_defect = std::max(r.max_unitarity_defect, unitarity_defect(u.back()));
  }

  Rng rng(seed, 0xD1A);
  double forward = 0.0, backward = 0.0;  // U A U† and U† A U
  for (std::size_t k = 0; k < trials; ++k) {
    const double t0[] = {rng.uniform(-3, 3), rng.uniform(-3, 3)};
    r.first_family_offdiag = std::max(r.first_family_offdiag, basis::family_combination(qutrit, 0, t0).offdiag_norm());
    for (std::size_t j = 0; j < 3; ++j) {
      const double tj[] = {rng.uniform(-3, 3), rng.uniform(-3, 3)};
      const CMat a = basis::family_combination(qutrit, j + 1, tj);
      forward = std::max(forward, (u[j] * a * u[j].adjoint()).offdiag_norm());
      backward = std::max(backward, (u[j].adjoint() * a * u[j]).offdiag_norm());
    }
  }
  if (std::min(forward, backward) > 1e-9)
    throw Error(ErrorCode::NoDiagonalizingConvention, "neither U A U† nor U† A U is diagonal");
  r.convention = forward <= backward ? "U A U^dagger" : "U^dagger A U";
  r.max_offdiag = std::min(forward, backward);
  return r;
}

}  // namespace quclass::charfun
