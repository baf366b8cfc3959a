#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "quclass/linalg.hpp"
#include "quclass/operator_basis.hpp"
#include "quclass/povm.hpp"

namespace quclass::charfun {

/// Frequency vector t, one component per basis operator (operator order).
struct TVector {
  std::vector<double> t;
};

TVector operator-(const TVector& a, const TVector& b);

/// Margenau-Hill ordering: average over all F! orderings of the family
/// exponentials e^{i A_m(t)}, A_m(t) = Σ_j t_{m,j} α_{m,j}, then Tr(ρ ·).
cplx mh_charfun(const CMat& rho, const basis::OperatorBasis& b, const TVector& t);

/// The individual per-ordering terms Tr(ρ β_π) / F!, in next_permutation
/// order. Their sum is mh_charfun.
std::vector<cplx> mh_charfun_terms(const CMat& rho, const basis::OperatorBasis& b, const TVector& t);

/// Σ_λ p(λ) exp(i ⟨t, w_λ⟩)
cplx classical_charfun(const povm::JointDistribution& p, const basis::OperatorBasis& b, const TVector& t);

/// Fixed-seed grid with components uniform on [−π, π].
std::vector<TVector> random_grid(const basis::OperatorBasis& b, std::size_t points, std::uint64_t seed);

struct CoincidenceReport {
  double max_deviation = 0.0;
  std::size_t argmax = 0;
  std::size_t points = 0;
};

/// max over the grid of |mh_charfun − classical_charfun(p at η = 1)|. The p
/// used is the signed quasi-distribution when ρ lies outside the polytope.
CoincidenceReport coincidence_scan(const CMat& rho, const basis::OperatorBasis& b, std::span<const TVector> grid);

using CharFn = std::function<cplx(const TVector&)>;

/// Smallest eigenvalue of the Hermitised Gram matrix φ(t_i − t_j); r in [1, 16].
double bochner_check(const CharFn& phi, std::span<const TVector> points);

struct BochnerSearch {
  double best_min_eigenvalue = 0.0;
  std::size_t best_r = 0;
  double best_scale = 0.0;
  std::size_t candidates = 0;
  bool violation = false;  // best_min_eigenvalue < −1e−9
  std::vector<TVector> witness;
};

/// Random Gaussian point sets, r ∈ {4, 8}, scales {0.5, 1, 2} cycled.
BochnerSearch bochner_search(const CharFn& phi, std::size_t dimension, std::size_t candidates, std::uint64_t seed);

struct DiagonalizerReport {
  double max_unitarity_defect = 0.0;  // over Û_j = M_j / √3
  std::string convention;             // "U A U^dagger" or "U^dagger A U"
  double max_offdiag = 0.0;           // of the winning convention, over families 2..4
  double first_family_offdiag = 0.0;  // Â_1 as is
  std::size_t trials = 0;
};

/// The printed qutrit matrices M_2, M_3, M_4 (ω = e^{2πi/3}).
std::vector<CMat> qutrit_diagonalizers();

/// Throws NoDiagonalizingConvention if neither conjugation direction makes
/// Â_2..Â_4 diagonal for random t.
DiagonalizerReport diagonalizer_check(const basis::OperatorBasis& qutrit, std::size_t trials = 20,
                                      std::uint64_t seed = 0);

}  // namespace quclass::charfun
