#include "quclass/mub.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "quclass/error.hpp"
#include "quclass/galois_field.hpp"
#include "quclass/rng.hpp"

namespace quclass::mub {

PrimePower prime_power_decompose(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "dimension must be ≥ 2");
  int p = 0;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return {n, n, 1};
  int m = n, k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1)
    throw Error(ErrorCode::NotPrimePower, std::to_string(n) + " is not a prime power");
  return {n, p, k};
}

namespace {

MubFamily qubit_mubs() {
  const double r = 1.0 / std::sqrt(2.0);
  const cplx i{0.0, 1.0};
  MubFamily f{2, {}};
  f.bases.push_back(CMat::identity(2));
  f.bases.push_back(CMat{{r, r}, {r, -r}});
  f.bases.push_back(CMat{{r, r}, {i * r, -i * r}});
  return f;
}

int field_element_for_basis(int b, int n) { return b % n; }

MubFamily odd_mubs(const PrimePower& pp) {
  const GaloisField gf(pp.p, pp.k);
  const int n = pp.n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  MubFamily f{n, {CMat::identity(n)}};
  for (int b = 1; b <= n; ++b) {
    const int a = field_element_for_basis(b, n);
    CMat basis(n);
    for (int j = 0; j < n; ++j)
      for (int x = 0; x < n; ++x) {
        const int arg = gf.add(gf.mul(a, gf.mul(x, x)), gf.mul(j, x));
        basis(x, j) = std::polar(scale, 2.0 * std::numbers::pi * gf.trace(arg) / pp.p);
      }
    f.bases.push_back(std::move(basis));
  }
  return f;
}

// X(x)|y⟩ = |y + x⟩, Z(z)|y⟩ = (−1)^{tr(z y)}|y⟩ over GF(2^k). The pairs
// (x, a x) span an isotropic subspace, so each class commutes.
MubFamily even_mubs(const PrimePower& pp) {
  const GaloisField gf(pp.p, pp.k);
  const int n = pp.n;
  MubFamily f{n, {CMat::identity(n)}};
  Rng rng(0x5eedULL, static_cast<std::uint64_t>(n));
  for (int b = 1; b <= n; ++b) {
    const int a = field_element_for_basis(b, n);
    CMat h(n);
    for (int x = 1; x < n; ++x) {
      const int z = gf.mul(a, x);
      CMat u(n);
      for (int y = 0; y < n; ++y) u(gf.add(y, x), y) = gf.trace(gf.mul(z, y)) ? -1.0 : 1.0;
      const CMat ud = u.adjoint();
      h += (u + ud) * rng.normal();
      h += (u - ud) * cplx{0.0, rng.normal()};
    }
    f.bases.push_back(herm_eig(h).vectors);
  }
  return f;
}

}  // namespace

MubFamily build_mubs(const PrimePower& pp) {
  if (pp.n < 2 || pp.n > 16) throw Error(ErrorCode::InvalidArgument, "MUB construction supports 2 ≤ n ≤ 16");
  int check = 1;
  for (int i = 0; i < pp.k; ++i) check *= pp.p;
  if (check != pp.n) throw Error(ErrorCode::InvalidArgument, "inconsistent prime power");
  if (pp.p == 2) return pp.k == 1 ? qubit_mubs() : even_mubs(pp);
  return odd_mubs(pp);
}

UnbiasednessReport unbiasedness_report(const MubFamily& m, double threshold) {
  UnbiasednessReport r;
  r.n = m.n;
  r.basis_count = m.bases.size();
  for (const auto& b : m.bases)
    if (static_cast<int>(b.dim()) != m.n)
      throw Error(ErrorCode::DimensionMismatch, "basis vectors must have length n");
  const auto n = static_cast<std::size_t>(m.n);
  for (std::size_t a = 0; a < m.bases.size(); ++a) {
    const CMat gram = m.bases[a].adjoint() * m.bases[a];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        r.max_intra_deviation = std::max(r.max_intra_deviation, std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)));
    for (std::size_t b = a + 1; b < m.bases.size(); ++b) {
      const CMat ov = m.bases[a].adjoint() * m.bases[b];
      for (const auto& x : ov.data())
        r.max_cross_deviation = std::max(r.max_cross_deviation, std::abs(std::norm(x) - 1.0 / m.n));
    }
  }
  r.pass = r.max_intra_deviation <= threshold && r.max_cross_deviation <= threshold;
  return r;
}

}  // namespace quclass::mub
