#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "quclass/tolerances.hpp"

namespace quclass {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

/// Dense square complex matrix, row-major. Sized for the small Hermitian
/// operators used throughout (dimension ≤ 16).
class CMat {
 public:
  CMat() = default;
  explicit CMat(std::size_t n) : n_(n), a_(n * n) {}
  CMat(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMat identity(std::size_t n);
  static CMat diagonal(std::span<const double> d);
  static CMat outer(std::span<const cplx> u, std::span<const cplx> v);  // |u⟩⟨v|
  static CMat projector(std::span<const cplx> v) { return outer(v, v); }

  std::size_t dim() const noexcept { return n_; }
  cplx& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
  std::span<const cplx> data() const noexcept { return a_; }

  CVec column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const cplx> v);

  CMat adjoint() const;
  cplx trace() const noexcept;
  double frobenius_norm() const noexcept;
  double offdiag_norm() const noexcept;
  bool is_finite() const noexcept;

  CMat& operator+=(const CMat& o);
  CMat& operator-=(const CMat& o);
  CMat& operator*=(cplx s) noexcept;

  friend CMat operator+(CMat a, const CMat& b) { return a += b; }
  friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
  friend CMat operator*(CMat a, cplx s) { return a *= s; }
  friend CMat operator*(cplx s, CMat a) { return a *= s; }
  friend CMat operator*(const CMat& a, const CMat& b);
  friend CVec operator*(const CMat& a, std::span<const cplx> v);

 private:
  std::size_t n_ = 0;
  std::vector<cplx> a_;
};

cplx inner(std::span<const cplx> u, std::span<const cplx> v);  // ⟨u|v⟩
double norm(std::span<const cplx> v);
cplx trace_product(const CMat& a, const CMat& b);  // Tr(ab) without forming ab
CMat commutator(const CMat& a, const CMat& b);
double hermiticity_defect(const CMat& h);  // ‖h − h†‖_F
CMat hermitian_part(const CMat& h);
double max_abs_diff(const CMat& a, const CMat& b);

/// Spectral decomposition of a Hermitian matrix. Eigenvalues ascend; column k
/// of `vectors` belongs to values[k] and has its largest-modulus component
/// (first one on ties) made real positive.
struct HermEig {
  std::vector<double> values;
  CMat vectors;
};

HermEig herm_eig(const CMat& h, const Tolerances& tol = default_tolerances());

/// e^{i s h} computed from the eigendecomposition, so the result is unitary
/// to rounding.
CMat unitary_exp(const CMat& h, double s, const Tolerances& tol = default_tolerances());

double min_eigenvalue(const CMat& h, const Tolerances& tol = default_tolerances());

/// ‖U†U − I‖_F
double unitarity_defect(const CMat& u);

}  // namespace quclass
