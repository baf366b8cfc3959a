#pragma once

namespace quclass {

/// Numerical thresholds shared by every module. Defaults are the values the
/// toolkit is validated against; the CLI can override individual fields.
struct Tolerances {
  // linalg
  double hermitian = 1e-8;         // relative ‖h − h†‖_F before NonHermitian
  double jacobi_offdiag = 1e-14;   // relative off-diagonal norm at convergence
  int jacobi_max_sweeps = 100;

  // positivity and validity
  double psd = 1e-10;              // min eigenvalue ≥ −psd counts as PSD
  double distribution = 1e-12;     // min p ≥ −distribution counts as valid
  double sample_clip = 1e-9;       // negative mass the sampler may clip

  // basis validation
  double basis_pass = 1e-8;

  // geometry
  double boundary = 1e-9;          // |1 + ⟨w, θ⟩| below this is "on the face"
  double dedup = 1e-7;
  double rank = 1e-8;
  double lp = 1e-9;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace quclass
