#include "quclass/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "quclass/error.hpp"

namespace quclass {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadSpectra: return "BadSpectra";
    case ErrorCode::EtaOutOfRange: return "EtaOutOfRange";
    case ErrorCode::DegenerateBasis: return "DegenerateBasis";
    case ErrorCode::UnboundedRegion: return "UnboundedRegion";
    case ErrorCode::NumericalDegeneracy: return "NumericalDegeneracy";
    case ErrorCode::NoDiagonalizingConvention: return "NoDiagonalizingConvention";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::FormatError: return "FormatError";
  }
  return "Unknown";
}

CMat::CMat(std::initializer_list<std::initializer_list<cplx>> rows) : n_(rows.size()), a_() {
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw Error(ErrorCode::DimensionMismatch, "CMat rows must form a square");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

CMat CMat::identity(std::size_t n) {
  CMat m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::diagonal(std::span<const double> d) {
  CMat m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMat CMat::outer(std::span<const cplx> u, std::span<const cplx> v) {
  if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "outer product");
  CMat m(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

CVec CMat::column(std::size_t j) const {
  CVec v(n_);
  for (std::size_t i = 0; i < n_; ++i) v[i] = (*this)(i, j);
  return v;
}

void CMat::set_column(std::size_t j, std::span<const cplx> v) {
  for (std::size_t i = 0; i < n_; ++i) (*this)(i, j) = v[i];
}

CMat CMat::adjoint() const {
  CMat m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

cplx CMat::trace() const noexcept {
  cplx t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double CMat::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& x : a_) s += std::norm(x);
  return std::sqrt(s);
}

double CMat::offdiag_norm() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j) s += std::norm((*this)(i, j));
  return std::sqrt(s);
}

bool CMat::is_finite() const noexcept {
  return std::all_of(a_.begin(), a_.end(),
                     [](const cplx& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
}

CMat& CMat::operator+=(const CMat& o) {
  if (o.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

CMat& CMat::operator-=(const CMat& o) {
  if (o.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

CMat& CMat::operator*=(cplx s) noexcept {
  for (auto& x : a_) x *= s;
  return *this;
}

CMat operator*(const CMat& a, const CMat& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  const std::size_t n = a.n_;
  CMat c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

CVec operator*(const CMat& a, std::span<const cplx> v) {
  if (a.n_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  CVec r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j) r[i] += a(i, j) * v[j];
  return r;
}

cplx inner(std::span<const cplx> u, std::span<const cplx> v) {
  if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "inner product");
  cplx s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

cplx trace_product(const CMat& a, const CMat& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "trace of product");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) s += a(i, k) * b(k, i);
  return s;
}

CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }

double hermiticity_defect(const CMat& h) { return (h - h.adjoint()).frobenius_norm(); }

CMat hermitian_part(const CMat& h) { return (h + h.adjoint()) * 0.5; }

double max_abs_diff(const CMat& a, const CMat& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "matrix comparison");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

namespace {

// Rotate the largest-modulus entry (first on ties) onto the positive real axis.
void fix_phase(CMat& v, std::size_t col) {
  const std::size_t n = v.dim();
  std::size_t best = 0;
  double best_mod = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double m = std::abs(v(i, col));
    if (m > best_mod + 1e-12) {
      best_mod = m;
      best = i;
    }
  }
  if (best_mod <= 0.0) return;
  const cplx phase = std::conj(v(best, col)) / best_mod;
  for (std::size_t i = 0; i < n; ++i) v(i, col) *= phase;
  v(best, col) = best_mod;
}

bool lex_less(const CMat& v, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const cplx x = v(i, a), y = v(i, b);
    if (std::abs(x.real() - y.real()) > 1e-12) return x.real() < y.real();
    if (std::abs(x.imag() - y.imag()) > 1e-12) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

// Cyclic complex Jacobi. Each rotation first removes the phase of a(p,q)
// and then applies the classical real rotation, so J = D·R with
// D = diag(.., 1 at p, e^{-iφ} at q, ..).
HermEig herm_eig(const CMat& h, const Tolerances& tol) {
  const std::size_t n = h.dim();
  const double hnorm = h.frobenius_norm();
  if (!h.is_finite()) throw Error(ErrorCode::NonHermitian, "non-finite entries");
  if (hermiticity_defect(h) > tol.hermitian * std::max(1.0, hnorm))
    throw Error(ErrorCode::NonHermitian, "‖h − h†‖_F = " + std::to_string(hermiticity_defect(h)));

  CMat a = hermitian_part(h);
  CMat v = CMat::identity(n);
  const double target = tol.jacobi_offdiag * hnorm;

  bool converged = n <= 1 || a.offdiag_norm() <= target;
  for (int sweep = 0; sweep < tol.jacobi_max_sweeps && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const double app = a(p, p).real(), aqq = a(q, q).real();
        // Skip rotations that cannot change the diagonal at double precision.
        if (g < 1e-300 || (std::abs(app) + 100.0 * g == std::abs(app) &&
                           std::abs(aqq) + 100.0 * g == std::abs(aqq))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotated = true;
        const cplx e = apq / g;  // e^{iφ}
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx jpq = s;                       // J(p,q)
        const cplx jqp = -s * std::conj(e);       // J(q,p)
        const cplx jqq = c * std::conj(e);        // J(q,q)

        // a ← a J (columns p, q)
        for (std::size_t i = 0; i < n; ++i) {
          const cplx aip = a(i, p), aiq = a(i, q);
          a(i, p) = aip * c + aiq * jqp;
          a(i, q) = aip * jpq + aiq * jqq;
        }
        // a ← J† a (rows p, q)
        for (std::size_t j = 0; j < n; ++j) {
          const cplx apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj + std::conj(jqp) * aqj;
          a(q, j) = std::conj(jpq) * apj + std::conj(jqq) * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        // v ← v J
        for (std::size_t i = 0; i < n; ++i) {
          const cplx vip = v(i, p), viq = v(i, q);
          v(i, p) = vip * c + viq * jqp;
          v(i, q) = vip * jpq + viq * jqq;
        }
      }
    }
    converged = a.offdiag_norm() <= target || !rotated;
  }
  if (!converged) throw Error(ErrorCode::NoConvergence, "Jacobi sweep cap reached");

  for (std::size_t k = 0; k < n; ++k) fix_phase(v, k);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const double dx = a(x, x).real(), dy = a(y, y).real();
    if (std::abs(dx - dy) > 1e-12 * std::max(1.0, hnorm)) return dx < dy;
    return lex_less(v, x, y);
  });

  HermEig out{std::vector<double>(n), CMat(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

CMat unitary_exp(const CMat& h, double s, const Tolerances& tol) {
  const HermEig eig = herm_eig(h, tol);
  const std::size_t n = h.dim();
  CMat u(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx ph = std::polar(1.0, s * eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = eig.vectors(i, k) * ph;
      for (std::size_t j = 0; j < n; ++j) u(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return u;
}

double min_eigenvalue(const CMat& h, const Tolerances& tol) { return herm_eig(h, tol).values.front(); }

double unitarity_defect(const CMat& u) {
  return (u.adjoint() * u - CMat::identity(u.dim())).frobenius_norm();
}

}  // namespace quclass
