#pragma once

#include <cstdint>
#include <vector>

#include "quclass/linalg.hpp"
#include "quclass/operator_basis.hpp"

namespace quclass::states {

/// A validated density matrix: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  /// Throws InvalidArgument when any invariant fails beyond 1e−10.
  explicit DensityMatrix(CMat mat, const Tolerances& tol = default_tolerances());

  static DensityMatrix maximally_mixed(std::size_t n);
  static DensityMatrix pure(std::span<const cplx> psi);

  const CMat& mat() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.dim(); }
  double purity() const;  // Tr ρ²

 private:
  CMat mat_;
};

/// Coefficients θ_i = Tr(ρ α_i) in some operator basis. Unphysical vectors
/// are representable; physicality is reported by density_from_bloch.
struct BlochVector {
  std::vector<double> theta;

  double norm2() const;
};

BlochVector bloch_from_density(const DensityMatrix& rho, const basis::OperatorBasis& b);
BlochVector bloch_from_density(const CMat& rho, const basis::OperatorBasis& b);

struct BlochDensity {
  CMat mat;        // (1/n)(I + Σ θ_i α_i)
  bool physical;   // min eigenvalue ≥ −psd tolerance
  double min_eigenvalue;
};

BlochDensity density_from_bloch(const BlochVector& theta, const basis::OperatorBasis& b,
                                const Tolerances& tol = default_tolerances());

enum class StateKind { Pure, Mixed };

/// Pure: Haar-random ray. Mixed: G G† / Tr(G G†) with complex Gaussian G
/// (Hilbert-Schmidt measure). Deterministic in (n, kind, seed).
DensityMatrix random_state(std::size_t n, StateKind kind, std::uint64_t seed);

}  // namespace quclass::states
