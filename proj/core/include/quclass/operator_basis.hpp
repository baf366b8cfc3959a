#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "quclass/linalg.hpp"
#include "quclass/mub.hpp"

namespace quclass::basis {

/// outcomes[m][k][j]: eigenvalue of the j-th member of family m on the k-th
/// shared eigenvector. Outcomes within a family are sorted by descending
/// tuple (lexicographic), so k = 0 carries the largest first component.
struct EigenvalueTable {
  std::vector<std::vector<std::vector<double>>> outcomes;
};

/// Traceless Hermitian operators with Tr(α_i α_j) = n δ_ij, partitioned into
/// commuting families. For a complete MUB basis there are n+1 families of
/// n−1 operators each.
struct OperatorBasis {
  int n = 0;
  std::vector<CMat> ops;
  std::vector<std::vector<std::size_t>> families;
  EigenvalueTable table;
  /// Column k of eigenvectors[m] is the shared eigenvector for outcome k.
  std::vector<CMat> eigenvectors;
  std::string label;

  std::size_t size() const noexcept { return ops.size(); }
  std::size_t family_count() const noexcept { return families.size(); }
  /// Number of outcome tuples of the global measurement, n^(family count).
  std::size_t outcome_count() const;
};

/// Builds a basis from explicit operators and a family partition; the
/// eigenvalue table comes from simultaneous diagonalisation of each family
/// through a fixed-seed random real combination of its members.
OperatorBasis make_basis(int n, std::vector<CMat> ops, std::vector<std::vector<std::size_t>> families,
                         std::string label);

/// The eight hardcoded MUB-driven qutrit operators (ω = e^{2πi/3}) in
/// families {0,1}, {2,3}, {4,5}, {6,7}.
OperatorBasis qutrit_builtin();

/// σ_x, σ_y, σ_z as three singleton families.
OperatorBasis pauli_basis();

/// Gell-Mann matrices scaled by √(3/2) so Tr(Λ_i Λ_j) = 3 δ_ij. Each
/// operator is its own family.
OperatorBasis gell_mann_basis();

/// Weight vectors (n−1 of them, length n) with Σ_k c_k = 0 and
/// Σ_k c_k c'_k = n δ. n = 3 uses √(3/2)(1,0,−1) and (1/√2)(1,−2,1); other
/// n use the orthogonalised ramps (1,−1,0,…), (1,1,−2,0,…), … rescaled.
std::vector<std::vector<double>> default_spectra(int n);

/// α = Σ_k c_k |e_k^b⟩⟨e_k^b| for every basis b and weight vector c.
/// Throws BadSpectra if the weight vectors violate the conditions above.
OperatorBasis from_mubs(const mub::MubFamily& m, const std::vector<std::vector<double>>& spectra);

/// Same operators, new family partition (eigen table recomputed).
OperatorBasis regroup(const OperatorBasis& b, std::vector<std::vector<std::size_t>> families);

struct ValidationReport {
  double hermiticity = 0.0;     // max ‖α − α†‖_F
  double trace = 0.0;           // max |Tr α|
  double orthonormality = 0.0;  // max |Tr(α_i α_j) − n δ_ij|
  double commutation = 0.0;     // max ‖[α_i, α_j]‖_F within a family
  double unbiasedness = 0.0;    // max ||⟨e|f⟩|² − 1/n| across families
  double eigentable = 0.0;      // max defect of Σ_k z_k = 0, Σ_k z_kj z_kj' = n δ
  bool complete = false;        // n²−1 operators in n+1 families of n−1
  bool pass = false;
};

ValidationReport validate(const OperatorBasis& b, double threshold = 1e-8);

/// max over operators of the largest entrywise |a_i − b_i|.
double entrywise_deviation(const OperatorBasis& a, const OperatorBasis& b);

/// Family members combined with weights t: A_m(t) = Σ_j t_{m,j} α_{m,j}.
CMat family_combination(const OperatorBasis& b, std::size_t family, std::span<const double> t);

}  // namespace quclass::basis
