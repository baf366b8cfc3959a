#include "quclass/galois_field.hpp"

#include <string>

#include "quclass/error.hpp"

namespace quclass {
namespace {

std::vector<int> digits(int e, int p, int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i, e /= p) c[i] = e % p;
  return c;
}

int encode(const std::vector<int>& c, int p) {
  int e = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) e = e * p + *it;
  return e;
}

// Product of two polynomials of degree < k, reduced modulo the monic f.
std::vector<int> polymulmod(const std::vector<int>& a, const std::vector<int>& b,
                            const std::vector<int>& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  std::vector<int> r(2 * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * k - 1; d >= k; --d) {
    const int lead = r[d];
    if (lead == 0) continue;
    for (int i = 0; i <= k; ++i) r[d - k + i] = ((r[d - k + i] - lead * f[i]) % p + p) % p;
  }
  r.resize(k);
  return r;
}

// Irreducible iff no monic factor of degree ≤ k/2 divides f.
bool irreducible(const std::vector<int>& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  auto divides = [&](const std::vector<int>& g) {
    std::vector<int> r = f;
    const int dg = static_cast<int>(g.size()) - 1;
    for (int d = k; d >= dg; --d) {
      const int lead = r[d];
      if (lead == 0) continue;
      for (int i = 0; i <= dg; ++i) r[d - dg + i] = ((r[d - dg + i] - lead * g[i]) % p + p) % p;
    }
    for (int i = 0; i < dg; ++i)
      if (r[i] != 0) return false;
    return true;
  };
  for (int dg = 1; dg <= k / 2; ++dg) {
    int count = 1;
    for (int i = 0; i < dg; ++i) count *= p;
    for (int e = 0; e < count; ++e) {
      std::vector<int> g = digits(e, p, dg);
      g.push_back(1);
      if (divides(g)) return false;
    }
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(int p, int k) : p_(p), k_(k), q_(1) {
  if (p < 2 || k < 1) throw Error(ErrorCode::InvalidArgument, "GF(p^k) needs p ≥ 2, k ≥ 1");
  for (int i = 0; i < k; ++i) q_ *= p;

  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    for (int e = 0; e < q_; ++e) {
      std::vector<int> f = digits(e, p, k);
      f.push_back(1);
      if (irreducible(f, p)) {
        modulus_ = f;
        break;
      }
    }
    if (modulus_.empty())
      throw Error(ErrorCode::InvalidArgument, "no irreducible polynomial for GF(" + std::to_string(q_) + ")");
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  trace_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    const auto ca = digits(a, p, k);
    std::vector<int> n(k);
    for (int i = 0; i < k; ++i) n[i] = (p - ca[i]) % p;
    neg_[a] = encode(n, p);
    for (int b = 0; b < q_; ++b) {
      const auto cb = digits(b, p, k);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (ca[i] + cb[i]) % p;
      add_[a * q_ + b] = encode(s, p);
      mul_[a * q_ + b] = k == 1 ? (a * b) % p : encode(polymulmod(ca, cb, modulus_, p), p);
    }
  }
  for (int a = 0; a < q_; ++a) {
    int t = 0, pw = a;
    for (int i = 0; i < k; ++i) {
      t = add(t, pw);
      int next = 1;
      for (int j = 0; j < p; ++j) next = mul(next, pw);
      pw = next;
    }
    if (t >= p) throw Error(ErrorCode::InvalidArgument, "trace left the prime field");
    trace_[a] = t;
  }
}

}  // namespace quclass
