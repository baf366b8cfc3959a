#pragma once

#include <cstdint>
#include <vector>

namespace quclass {

/// GF(p^k) realised as F_p[x]/(f), f the lexicographically smallest monic
/// irreducible of degree k. Element e ∈ [0, p^k) encodes the polynomial
/// Σ c_i x^i with c_i the base-p digits of e (c_0 least significant).
class GaloisField {
 public:
  GaloisField(int p, int k);

  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return k_; }
  int order() const noexcept { return q_; }
  /// Coefficients c_0..c_k of the modulus (c_k = 1).
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  int add(int a, int b) const noexcept { return add_[a * q_ + b]; }
  int mul(int a, int b) const noexcept { return mul_[a * q_ + b]; }
  int neg(int a) const noexcept { return neg_[a]; }
  /// Absolute trace a + a^p + … + a^{p^{k−1}}, an element of the prime field.
  int trace(int a) const noexcept { return trace_[a]; }

 private:
  int p_, k_, q_;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, trace_;
};

}  // namespace quclass
