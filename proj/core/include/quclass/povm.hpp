#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quclass/linalg.hpp"
#include "quclass/operator_basis.hpp"
#include "quclass/states.hpp"

namespace quclass::povm {

// Outcome tuples λ = (k_0, …, k_{F−1}) are indexed in mixed radix n with
// family 0 as the most significant digit.
std::vector<std::size_t> decode_outcome(const basis::OperatorBasis& b, std::size_t index);
std::string outcome_label(const basis::OperatorBasis& b, std::size_t index);  // "k0.k1.…"

/// w_λ: the concatenated eigenvalue tuples, laid out in operator order.
std::vector<double> face_normal(const basis::OperatorBasis& b, std::size_t index);
/// S_λ = Σ_m Σ_j z^{(m)}_j α_{m,j}
CMat face_operator(const basis::OperatorBasis& b, std::size_t index);

struct EffectSet {
  std::size_t family = 0;
  double eta = 1.0;
  std::vector<CMat> effects;  // indexed by outcome k of the family
};

/// P(z_k) = (1/n)(I + Σ_j z_{k,j} α_{m,j})
EffectSet sharp_projectors(const basis::OperatorBasis& b, std::size_t family);
/// E(z_k) = (1/n)(I + η Σ_j z_{k,j} α_{m,j}) = η P(z_k) + (1 − η) I/n
EffectSet unsharp_effects(const basis::OperatorBasis& b, std::size_t family, double eta);

struct GlobalPovm {
  double eta = 0.0;
  std::vector<CMat> elements;    // G(λ) = (I + η S_λ) / n^F
  double min_eigenvalue = 0.0;   // over all elements
  std::size_t argmin = 0;
  bool psd = false;              // min_eigenvalue ≥ −psd tolerance
};

GlobalPovm global_povm(const basis::OperatorBasis& b, double eta, const Tolerances& tol = default_tolerances());
double completeness_defect(const GlobalPovm& g);  // ‖Σ_λ G(λ) − I‖_F

struct CriticalEta {
  double analytic = 0.0;             // 1 / max_λ(−λ_min(S_λ))
  double bisection = 0.0;            // largest η with every G(λ) ⪰ 0, to 1e−12
  double worst_face_eigenvalue = 0;  // min_λ λ_min(S_λ)
  std::size_t worst_outcome = 0;
  bool bisected = false;
};

/// Throws DegenerateBasis if no face operator has a negative eigenvalue.
CriticalEta critical_eta(const basis::OperatorBasis& b, bool with_bisection = true,
                         const Tolerances& tol = default_tolerances());

/// Σ over tuples whose slot `family` equals k, for each k.
EffectSet marginalize(const basis::OperatorBasis& b, const GlobalPovm& g, std::size_t family);

struct JointDistribution {
  std::vector<double> p;
  double eta = 1.0;
  double min_p = 0.0;
  bool valid = false;  // min_p ≥ −distribution tolerance
};

/// p(λ) = (1 + η ⟨w_λ, θ⟩) / n^F; may be signed outside the polytope.
JointDistribution joint_distribution(const states::BlochVector& theta, const basis::OperatorBasis& b, double eta,
                                     const Tolerances& tol = default_tolerances());
/// p(λ) = Tr[ρ G(λ)] via the operators.
JointDistribution joint_distribution(const CMat& rho, const GlobalPovm& g,
                                     const Tolerances& tol = default_tolerances());

/// Probabilities of one family's outcomes: Σ over all other slots.
std::vector<double> family_marginal(const basis::OperatorBasis& b, const JointDistribution& d,
                                    std::size_t family);

}  // namespace quclass::povm
