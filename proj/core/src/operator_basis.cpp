#include "quclass/operator_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "quclass/error.hpp"
#include "quclass/rng.hpp"

namespace quclass::basis {

std::size_t OperatorBasis::outcome_count() const {
  std::size_t c = 1;
  for (std::size_t m = 0; m < families.size(); ++m) c *= static_cast<std::size_t>(n);
  return c;
}

namespace {

constexpr std::uint64_t kDiagonalisationSeed = 20190415;

struct FamilySpectrum {
  std::vector<std::vector<double>> outcomes;  // [k][j]
  CMat vectors;
};

// Sorts outcomes descending lexicographically and permutes eigenvector
// columns to match.
FamilySpectrum sorted_spectrum(std::vector<std::vector<double>> outcomes, const CMat& vectors) {
  const std::size_t n = outcomes.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < outcomes[a].size(); ++j) {
      const double x = outcomes[a][j], y = outcomes[b][j];
      if (std::abs(x - y) > 1e-9) return x > y;
    }
    return false;
  });
  FamilySpectrum s{{}, CMat(vectors.dim())};
  for (std::size_t k = 0; k < n; ++k) {
    s.outcomes.push_back(outcomes[order[k]]);
    s.vectors.set_column(k, vectors.column(order[k]));
  }
  return s;
}

FamilySpectrum diagonalise_family(const std::vector<CMat>& ops, std::size_t family_index) {
  const std::size_t n = ops.front().dim();
  Rng rng(kDiagonalisationSeed, family_index);
  CMat h(n);
  for (const auto& op : ops) h += op * rng.normal();
  const HermEig eig = herm_eig(h);
  std::vector<std::vector<double>> outcomes(n);
  for (std::size_t k = 0; k < n; ++k) {
    const CVec v = eig.vectors.column(k);
    for (const auto& op : ops) outcomes[k].push_back(inner(v, op * v).real());
  }
  return sorted_spectrum(std::move(outcomes), eig.vectors);
}

void check_partition(std::size_t count, const std::vector<std::vector<std::size_t>>& families) {
  std::vector<int> seen(count, 0);
  for (const auto& f : families) {
    if (f.empty()) throw Error(ErrorCode::InvalidArgument, "empty family");
    for (auto i : f) {
      if (i >= count) throw Error(ErrorCode::InvalidArgument, "family index out of range");
      ++seen[i];
    }
  }
  for (int s : seen)
    if (s != 1) throw Error(ErrorCode::InvalidArgument, "families must partition the operators");
}

}  // namespace

OperatorBasis make_basis(int n, std::vector<CMat> ops, std::vector<std::vector<std::size_t>> families,
                         std::string label) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "dimension must be ≥ 2");
  for (const auto& op : ops)
    if (static_cast<int>(op.dim()) != n) throw Error(ErrorCode::DimensionMismatch, "operator dimension");
  check_partition(ops.size(), families);

  OperatorBasis b{n, std::move(ops), std::move(families), {}, {}, std::move(label)};
  for (std::size_t m = 0; m < b.families.size(); ++m) {
    std::vector<CMat> members;
    for (auto i : b.families[m]) members.push_back(b.ops[i]);
    FamilySpectrum s = diagonalise_family(members, m);
    b.table.outcomes.push_back(std::move(s.outcomes));
    b.eigenvectors.push_back(std::move(s.vectors));
  }
  return b;
}

OperatorBasis qutrit_builtin() {
  const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const cplx w2 = w * w;
  const cplx i{0.0, 1.0};
  const double r = 1.0 / std::sqrt(2.0);
  const double s = std::sqrt(1.5);

  std::vector<CMat> a;
  a.push_back(CMat{{s, 0, 0}, {0, 0, 0}, {0, 0, -s}});
  a.push_back(CMat{{r, 0, 0}, {0, -2.0 * r, 0}, {0, 0, r}});
  a.push_back(CMat{{0, -i * w, i * w2}, {i * w2, 0, -i * w}, {-i * w, i * w2, 0}} * r);
  a.push_back(CMat{{0, -w, -w2}, {-w2, 0, -w}, {-w, -w2, 0}} * r);
  a.push_back(CMat{{0, -i, i * w2}, {i, 0, -i * w2}, {-i * w, i * w, 0}} * r);
  a.push_back(CMat{{0, -1.0, -w2}, {-1.0, 0, -w2}, {-w, -w, 0}} * r);
  a.push_back(CMat{{0, -i * w2, i * w2}, {i * w, 0, -i}, {-i * w, i, 0}} * r);
  a.push_back(CMat{{0, -w2, -w2}, {-w, 0, -1.0}, {-w, -1.0, 0}} * r);
  return make_basis(3, std::move(a), {{0, 1}, {2, 3}, {4, 5}, {6, 7}}, "qutrit-builtin");
}

OperatorBasis pauli_basis() {
  const cplx i{0.0, 1.0};
  std::vector<CMat> s{CMat{{0, 1}, {1, 0}}, CMat{{0, -i}, {i, 0}}, CMat{{1, 0}, {0, -1}}};
  return make_basis(2, std::move(s), {{0}, {1}, {2}}, "pauli");
}

OperatorBasis gell_mann_basis() {
  const cplx i{0.0, 1.0};
  const double k = 1.0 / std::sqrt(3.0);
  std::vector<CMat> g{
      CMat{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}},
      CMat{{0, -i, 0}, {i, 0, 0}, {0, 0, 0}},
      CMat{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}},
      CMat{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}},
      CMat{{0, 0, -i}, {0, 0, 0}, {i, 0, 0}},
      CMat{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}},
      CMat{{0, 0, 0}, {0, 0, -i}, {0, i, 0}},
      CMat{{k, 0, 0}, {0, k, 0}, {0, 0, -2.0 * k}},
  };
  for (auto& m : g) m *= std::sqrt(1.5);
  std::vector<std::vector<std::size_t>> fam;
  for (std::size_t j = 0; j < g.size(); ++j) fam.push_back({j});
  return make_basis(3, std::move(g), std::move(fam), "gell-mann");
}

std::vector<std::vector<double>> default_spectra(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "dimension must be ≥ 2");
  if (n == 3) {
    const double s = std::sqrt(1.5), r = 1.0 / std::sqrt(2.0);
    return {{s, 0.0, -s}, {r, -2.0 * r, r}};
  }
  std::vector<std::vector<double>> out;
  for (int j = 1; j < n; ++j) {
    std::vector<double> c(n, 0.0);
    for (int k = 0; k < j; ++k) c[k] = 1.0;
    c[j] = -static_cast<double>(j);
    const double norm2 = static_cast<double>(j) + static_cast<double>(j) * j;
    for (auto& x : c) x *= std::sqrt(n / norm2);
    out.push_back(std::move(c));
  }
  return out;
}

OperatorBasis from_mubs(const mub::MubFamily& m, const std::vector<std::vector<double>>& spectra) {
  const int n = m.n;
  if (static_cast<int>(spectra.size()) != n - 1)
    throw Error(ErrorCode::BadSpectra, "need n−1 weight vectors");
  for (std::size_t a = 0; a < spectra.size(); ++a) {
    if (static_cast<int>(spectra[a].size()) != n) throw Error(ErrorCode::BadSpectra, "weight vector length");
    const double sum = std::accumulate(spectra[a].begin(), spectra[a].end(), 0.0);
    if (std::abs(sum) > 1e-10) throw Error(ErrorCode::BadSpectra, "weights must sum to zero");
    for (std::size_t b = 0; b < spectra.size(); ++b) {
      const double d = std::inner_product(spectra[a].begin(), spectra[a].end(), spectra[b].begin(), 0.0);
      if (std::abs(d - (a == b ? n : 0.0)) > 1e-10)
        throw Error(ErrorCode::BadSpectra, "weights must satisfy Σ c c' = n δ");
    }
  }
  for (const auto& bas : m.bases)
    if (static_cast<int>(bas.dim()) != n) throw Error(ErrorCode::DimensionMismatch, "basis dimension");

  OperatorBasis b;
  b.n = n;
  b.label = "mub-n" + std::to_string(n);
  for (std::size_t basis = 0; basis < m.bases.size(); ++basis) {
    std::vector<std::size_t> fam;
    std::vector<std::vector<double>> outcomes(n);
    for (const auto& c : spectra) {
      CMat alpha(n);
      for (int k = 0; k < n; ++k) {
        const CVec e = m.bases[basis].column(k);
        alpha += CMat::projector(e) * c[k];
        outcomes[k].push_back(c[k]);
      }
      fam.push_back(b.ops.size());
      b.ops.push_back(hermitian_part(alpha));
    }
    b.families.push_back(std::move(fam));
    FamilySpectrum s = sorted_spectrum(std::move(outcomes), m.bases[basis]);
    b.table.outcomes.push_back(std::move(s.outcomes));
    b.eigenvectors.push_back(std::move(s.vectors));
  }
  return b;
}

OperatorBasis regroup(const OperatorBasis& b, std::vector<std::vector<std::size_t>> families) {
  return make_basis(b.n, b.ops, std::move(families), b.label + "-regrouped");
}

ValidationReport validate(const OperatorBasis& b, double threshold) {
  ValidationReport r;
  const double n = b.n;
  for (std::size_t i = 0; i < b.ops.size(); ++i) {
    r.hermiticity = std::max(r.hermiticity, hermiticity_defect(b.ops[i]));
    r.trace = std::max(r.trace, std::abs(b.ops[i].trace()));
    for (std::size_t j = 0; j < b.ops.size(); ++j)
      r.orthonormality = std::max(r.orthonormality,
                                  std::abs(trace_product(b.ops[i], b.ops[j]) - (i == j ? n : 0.0)));
  }
  for (const auto& fam : b.families)
    for (std::size_t x = 0; x < fam.size(); ++x)
      for (std::size_t y = x + 1; y < fam.size(); ++y)
        r.commutation = std::max(r.commutation, commutator(b.ops[fam[x]], b.ops[fam[y]]).frobenius_norm());
  for (std::size_t m = 0; m < b.eigenvectors.size(); ++m)
    for (std::size_t m2 = m + 1; m2 < b.eigenvectors.size(); ++m2) {
      const CMat ov = b.eigenvectors[m].adjoint() * b.eigenvectors[m2];
      for (const auto& x : ov.data()) r.unbiasedness = std::max(r.unbiasedness, std::abs(std::norm(x) - 1.0 / n));
    }
  for (const auto& fam : b.table.outcomes) {
    const std::size_t members = fam.empty() ? 0 : fam.front().size();
    for (std::size_t j = 0; j < members; ++j) {
      double sum = 0.0;
      for (const auto& z : fam) sum += z[j];
      r.eigentable = std::max(r.eigentable, std::abs(sum));
      for (std::size_t j2 = 0; j2 < members; ++j2) {
        double dot = 0.0;
        for (const auto& z : fam) dot += z[j] * z[j2];
        r.eigentable = std::max(r.eigentable, std::abs(dot - (j == j2 ? n : 0.0)));
      }
    }
  }

  r.complete = static_cast<int>(b.ops.size()) == b.n * b.n - 1 &&
               static_cast<int>(b.families.size()) == b.n + 1 &&
               std::all_of(b.families.begin(), b.families.end(),
                           [&](const auto& f) { return static_cast<int>(f.size()) == b.n - 1; });
  r.pass = r.complete && r.hermiticity <= threshold && r.trace <= threshold &&
           r.orthonormality <= threshold && r.commutation <= threshold && r.unbiasedness <= threshold &&
           r.eigentable <= threshold;
  return r;
}

double entrywise_deviation(const OperatorBasis& a, const OperatorBasis& b) {
  if (a.n != b.n || a.ops.size() != b.ops.size())
    throw Error(ErrorCode::DimensionMismatch, "bases differ in shape");
  double d = 0.0;
  for (std::size_t i = 0; i < a.ops.size(); ++i) d = std::max(d, max_abs_diff(a.ops[i], b.ops[i]));
  return d;
}

CMat family_combination(const OperatorBasis& b, std::size_t family, std::span<const double> t) {
  const auto& fam = b.families.at(family);
  if (t.size() != fam.size()) throw Error(ErrorCode::DimensionMismatch, "family weights");
  CMat a(static_cast<std::size_t>(b.n));
  for (std::size_t j = 0; j < fam.size(); ++j) a += b.ops[fam[j]] * t[j];
  return a;
}

}  // namespace quclass::basis
