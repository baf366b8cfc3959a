#include "quclass/states.hpp"

#include <cmath>
#include <string>

#include "quclass/error.hpp"
#include "quclass/rng.hpp"

namespace quclass::states {

DensityMatrix::DensityMatrix(CMat mat, const Tolerances& tol) : mat_(std::move(mat)) {
  if (mat_.dim() == 0) throw Error(ErrorCode::InvalidArgument, "empty density matrix");
  const double herm = hermiticity_defect(mat_);
  if (herm > 1e-10) throw Error(ErrorCode::InvalidArgument, "density matrix not Hermitian");
  mat_ = hermitian_part(mat_);
  const double tr = mat_.trace().real();
  if (std::abs(tr - 1.0) > 1e-10)
    throw Error(ErrorCode::InvalidArgument, "density matrix trace " + std::to_string(tr));
  const double lo = min_eigenvalue(mat_, tol);
  if (lo < -tol.psd) throw Error(ErrorCode::InvalidArgument, "density matrix not PSD");
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n) {
  return DensityMatrix(CMat::identity(n) * (1.0 / static_cast<double>(n)));
}

DensityMatrix DensityMatrix::pure(std::span<const cplx> psi) {
  const double nrm = norm(psi);
  if (nrm == 0.0) throw Error(ErrorCode::InvalidArgument, "zero state vector");
  CVec v(psi.begin(), psi.end());
  for (auto& x : v) x /= nrm;
  return DensityMatrix(CMat::projector(v));
}

double DensityMatrix::purity() const { return trace_product(mat_, mat_).real(); }

double BlochVector::norm2() const {
  double s = 0.0;
  for (double x : theta) s += x * x;
  return s;
}

BlochVector bloch_from_density(const CMat& rho, const basis::OperatorBasis& b) {
  if (static_cast<int>(rho.dim()) != b.n) throw Error(ErrorCode::DimensionMismatch, "state vs basis");
  BlochVector v;
  v.theta.reserve(b.size());
  for (const auto& op : b.ops) v.theta.push_back(trace_product(rho, op).real());
  return v;
}

BlochVector bloch_from_density(const DensityMatrix& rho, const basis::OperatorBasis& b) {
  return bloch_from_density(rho.mat(), b);
}

BlochDensity density_from_bloch(const BlochVector& theta, const basis::OperatorBasis& b, const Tolerances& tol) {
  if (theta.theta.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "θ length vs basis size");
  const auto n = static_cast<std::size_t>(b.n);
  CMat m = CMat::identity(n);
  for (std::size_t i = 0; i < b.size(); ++i) m += b.ops[i] * theta.theta[i];
  m *= 1.0 / static_cast<double>(n);
  m = hermitian_part(m);
  const double lo = min_eigenvalue(m, tol);
  return {std::move(m), lo >= -tol.psd, lo};
}

DensityMatrix random_state(std::size_t n, StateKind kind, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "dimension must be ≥ 2");
  Rng rng(seed, kind == StateKind::Pure ? 1 : 2);
  if (kind == StateKind::Pure) {
    CVec psi(n);
    for (auto& x : psi) x = cplx{rng.normal(), rng.normal()};
    return DensityMatrix::pure(psi);
  }
  CMat g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = cplx{rng.normal(), rng.normal()};
  CMat rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  return DensityMatrix(hermitian_part(rho));
}

}  // namespace quclass::states
