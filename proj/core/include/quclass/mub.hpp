#pragma once

#include <cstddef>
#include <vector>

#include "quclass/linalg.hpp"

namespace quclass::mub {

struct PrimePower {
  int n = 0;
  int p = 0;
  int k = 0;
};

/// Throws NotPrimePower for composite n that is not a prime power (e.g. 6).
PrimePower prime_power_decompose(int n);

/// n+1 orthonormal bases of C^n. Column j of bases[b] is vector j of basis b;
/// basis 0 is the computational basis.
struct MubFamily {
  int n = 0;
  std::vector<CMat> bases;
};

/// Complete set of mutually unbiased bases for a prime power n ≤ 16.
///
///  - p = 2, k = 1: eigenbases of σ_z, σ_x, σ_y.
///  - odd p: basis a ∈ {1..n} has vectors v_j(x) = ω^{tr(a x² + j x)} / √n
///    over GF(n), ω = e^{2πi/p}, field element a ≡ a mod n (so a = n is the
///    Fourier basis). For k = 1 this is ω^{a x² + j x}.
///  - p = 2, k ≥ 2: joint eigenbases of the commuting Weyl classes
///    {X(x) Z(a x) : x ≠ 0} for a ∈ GF(n), followed by the Z class of the
///    computational basis.
MubFamily build_mubs(const PrimePower& pp);

struct UnbiasednessReport {
  int n = 0;
  std::size_t basis_count = 0;
  double max_intra_deviation = 0.0;  // max |⟨e_i|e_j⟩ − δ_ij|
  double max_cross_deviation = 0.0;  // max ||⟨e|f⟩|² − 1/n|
  bool pass = false;                 // both deviations ≤ threshold
};

/// Works on any candidate family, including externally supplied ones for
/// composite n. Throws DimensionMismatch on ragged input.
UnbiasednessReport unbiasedness_report(const MubFamily& m, double threshold = 1e-8);

}  // namespace quclass::mub
