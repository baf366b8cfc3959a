#include "quclass/povm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quclass/error.hpp"

namespace quclass::povm {
namespace {

void check_eta(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw Error(ErrorCode::EtaOutOfRange, "η must lie in [0, 1]");
}

double outcome_weight(const basis::OperatorBasis& b) { return 1.0 / static_cast<double>(b.outcome_count()); }

// ⟨z^{(m)}_k, θ restricted to family m⟩ for every family m and outcome k.
std::vector<std::vector<double>> family_projections(const basis::OperatorBasis& b, std::span<const double> theta) {
  std::vector<std::vector<double>> out(b.family_count());
  for (std::size_t m = 0; m < b.family_count(); ++m) {
    const auto& fam = b.families[m];
    for (const auto& z : b.table.outcomes[m]) {
      double s = 0.0;
      for (std::size_t j = 0; j < fam.size(); ++j) s += z[j] * theta[fam[j]];
      out[m].push_back(s);
    }
  }
  return out;
}

// Minimum eigenvalue of G(λ) over all λ at unsharpness eta, computed from
// the actual POVM elements.
double global_min_eigenvalue(const basis::OperatorBasis& b, const std::vector<CMat>& faces, double eta,
                             const Tolerances& tol) {
  const double w = outcome_weight(b);
  const CMat id = CMat::identity(static_cast<std::size_t>(b.n));
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& s : faces) lo = std::min(lo, min_eigenvalue((id + s * eta) * w, tol));
  return lo;
}

}  // namespace

std::vector<std::size_t> decode_outcome(const basis::OperatorBasis& b, std::size_t index) {
  if (index >= b.outcome_count()) throw Error(ErrorCode::InvalidArgument, "outcome index out of range");
  std::vector<std::size_t> digits(b.family_count());
  const auto n = static_cast<std::size_t>(b.n);
  for (std::size_t m = b.family_count(); m-- > 0;) {
    digits[m] = index % n;
    index /= n;
  }
  return digits;
}

std::string outcome_label(const basis::OperatorBasis& b, std::size_t index) {
  std::string s;
  for (auto d : decode_outcome(b, index)) {
    if (!s.empty()) s += '.';
    s += std::to_string(d);
  }
  return s;
}

std::vector<double> face_normal(const basis::OperatorBasis& b, std::size_t index) {
  const auto digits = decode_outcome(b, index);
  std::vector<double> w(b.size(), 0.0);
  for (std::size_t m = 0; m < b.family_count(); ++m) {
    const auto& z = b.table.outcomes[m][digits[m]];
    for (std::size_t j = 0; j < b.families[m].size(); ++j) w[b.families[m][j]] = z[j];
  }
  return w;
}

CMat face_operator(const basis::OperatorBasis& b, std::size_t index) {
  const auto w = face_normal(b, index);
  CMat s(static_cast<std::size_t>(b.n));
  for (std::size_t i = 0; i < b.size(); ++i)
    if (w[i] != 0.0) s += b.ops[i] * w[i];
  return s;
}

EffectSet unsharp_effects(const basis::OperatorBasis& b, std::size_t family, double eta) {
  check_eta(eta);
  if (family >= b.family_count()) throw Error(ErrorCode::InvalidArgument, "family index out of range");
  const auto n = static_cast<std::size_t>(b.n);
  EffectSet e{family, eta, {}};
  for (const auto& z : b.table.outcomes[family]) {
    CMat m = CMat::identity(n);
    for (std::size_t j = 0; j < z.size(); ++j) m += b.ops[b.families[family][j]] * (eta * z[j]);
    m *= 1.0 / static_cast<double>(n);
    e.effects.push_back(std::move(m));
  }
  return e;
}

EffectSet sharp_projectors(const basis::OperatorBasis& b, std::size_t family) {
  return unsharp_effects(b, family, 1.0);
}

GlobalPovm global_povm(const basis::OperatorBasis& b, double eta, const Tolerances& tol) {
  check_eta(eta);
  const double w = outcome_weight(b);
  const CMat id = CMat::identity(static_cast<std::size_t>(b.n));
  GlobalPovm g;
  g.eta = eta;
  g.min_eigenvalue = std::numeric_limits<double>::infinity();
  const std::size_t count = b.outcome_count();
  g.elements.reserve(count);
  for (std::size_t l = 0; l < count; ++l) {
    CMat e = (id + face_operator(b, l) * eta) * w;
    const double lo = min_eigenvalue(e, tol);
    if (lo < g.min_eigenvalue) {
      g.min_eigenvalue = lo;
      g.argmin = l;
    }
    g.elements.push_back(std::move(e));
  }
  g.psd = g.min_eigenvalue >= -tol.psd;
  return g;
}

double completeness_defect(const GlobalPovm& g) {
  if (g.elements.empty()) return 0.0;
  CMat s(g.elements.front().dim());
  for (const auto& e : g.elements) s += e;
  return (s - CMat::identity(s.dim())).frobenius_norm();
}

CriticalEta critical_eta(const basis::OperatorBasis& b, bool with_bisection, const Tolerances& tol) {
  CriticalEta c;
  std::vector<CMat> faces;
  faces.reserve(b.outcome_count());
  c.worst_face_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < b.outcome_count(); ++l) {
    faces.push_back(face_operator(b, l));
    const double lo = min_eigenvalue(faces.back(), tol);
    if (lo < c.worst_face_eigenvalue) {
      c.worst_face_eigenvalue = lo;
      c.worst_outcome = l;
    }
  }
  if (c.worst_face_eigenvalue >= -tol.psd)
    throw Error(ErrorCode::DegenerateBasis, "every face operator is PSD; no finite threshold");
  c.analytic = -1.0 / c.worst_face_eigenvalue;

  if (with_bisection) {
    // Invariant: all elements PSD at lo, some element indefinite at hi.
    double lo = 0.0, hi = 1.0;
    if (global_min_eigenvalue(b, faces, hi, tol) >= 0.0) {
      c.bisection = 1.0;
    } else {
      while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (global_min_eigenvalue(b, faces, mid, tol) >= 0.0 ? lo : hi) = mid;
      }
      c.bisection = 0.5 * (lo + hi);
    }
    c.bisected = true;
  }
  return c;
}

EffectSet marginalize(const basis::OperatorBasis& b, const GlobalPovm& g, std::size_t family) {
  if (family >= b.family_count()) throw Error(ErrorCode::InvalidArgument, "family index out of range");
  if (g.elements.size() != b.outcome_count()) throw Error(ErrorCode::DimensionMismatch, "POVM vs basis");
  const auto n = static_cast<std::size_t>(b.n);
  EffectSet e{family, g.eta, std::vector<CMat>(n, CMat(n))};
  for (std::size_t l = 0; l < g.elements.size(); ++l) e.effects[decode_outcome(b, l)[family]] += g.elements[l];
  return e;
}

JointDistribution joint_distribution(const states::BlochVector& theta, const basis::OperatorBasis& b, double eta,
                                     const Tolerances& tol) {
  check_eta(eta);
  if (theta.theta.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "θ length vs basis size");
  const auto proj = family_projections(b, theta.theta);
  const double w = outcome_weight(b);
  JointDistribution d;
  d.eta = eta;
  d.p.resize(b.outcome_count());
  for (std::size_t l = 0; l < d.p.size(); ++l) {
    const auto digits = decode_outcome(b, l);
    double dot = 0.0;
    for (std::size_t m = 0; m < digits.size(); ++m) dot += proj[m][digits[m]];
    d.p[l] = w * (1.0 + eta * dot);
  }
  d.min_p = *std::min_element(d.p.begin(), d.p.end());
  d.valid = d.min_p >= -tol.distribution;
  return d;
}

JointDistribution joint_distribution(const CMat& rho, const GlobalPovm& g, const Tolerances& tol) {
  JointDistribution d;
  d.eta = g.eta;
  d.p.reserve(g.elements.size());
  for (const auto& e : g.elements) d.p.push_back(trace_product(rho, e).real());
  d.min_p = d.p.empty() ? 0.0 : *std::min_element(d.p.begin(), d.p.end());
  d.valid = d.min_p >= -tol.distribution;
  return d;
}

std::vector<double> family_marginal(const basis::OperatorBasis& b, const JointDistribution& d, std::size_t family) {
  if (d.p.size() != b.outcome_count()) throw Error(ErrorCode::DimensionMismatch, "distribution vs basis");
  std::vector<double> q(static_cast<std::size_t>(b.n), 0.0);
  for (std::size_t l = 0; l < d.p.size(); ++l) q[decode_outcome(b, l)[family]] += d.p[l];
  return q;
}

}  // namespace quclass::povm
