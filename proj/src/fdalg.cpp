#include "tors/fdalg.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "tors/error.hpp"

namespace tors {

Poly poly_trim(Poly p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return poly_trim(std::move(c));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return poly_trim(std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  Poly bb = poly_trim(b);
  if (bb.empty()) fail(ErrorCode::Internal, "polynomial division by zero");
  Poly r = poly_trim(a);
  if (r.size() < bb.size()) return {{}, r};
  Poly q(r.size() - bb.size() + 1);
  while (!r.empty() && r.size() >= bb.size()) {
    const std::size_t shift = r.size() - bb.size();
    const Rational f = r.back() / bb.back();
    q[shift] = f;
    for (std::size_t i = 0; i < bb.size(); ++i) r[shift + i] -= f * bb[i];
    r = poly_trim(std::move(r));
  }
  return {poly_trim(std::move(q)), r};
}

std::pair<Poly, Poly> poly_bezout(const Poly& a, const Poly& b) {
  // invariant: r0 = s0 a + t0 b, r1 = s1 a + t1 b
  Poly r0 = poly_trim(a), r1 = poly_trim(b);
  Poly s0{1}, t0{}, s1{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    Poly t2 = poly_sub(t0, poly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) fail(ErrorCode::Internal, "polynomials are not coprime");
  const Rational inv = 1 / r0[0];
  for (auto& x : s0) x *= inv;
  for (auto& x : t0) x *= inv;
  return {s0, t0};
}

namespace {

const mpz_class kDivisorLimit("1000000000000");

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

Rational eval_poly(const Poly& p, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

}  // namespace

std::vector<std::pair<Rational, std::size_t>> rational_roots(const Poly& p0) {
  Poly p = poly_trim(p0);
  std::vector<std::pair<Rational, std::size_t>> out;
  if (p.size() <= 1) return out;
  std::size_t zeros = 0;
  while (sgn(p[zeros]) == 0) ++zeros;
  if (zeros) {
    out.emplace_back(Rational(0), zeros);
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(zeros));
  }
  if (p.size() <= 1) return out;
  mpz_class den = 1;
  for (const auto& c : p) den = lcm(den, mpz_class(c.get_den()));
  std::vector<mpz_class> ints;
  for (const auto& c : p) ints.push_back(mpz_class(c * den));
  if (abs(ints.front()) > kDivisorLimit || abs(ints.back()) > kDivisorLimit) return out;
  std::set<Rational> candidates;
  for (const auto& num : divisors(ints.front()))
    for (const auto& dn : divisors(ints.back())) {
      Rational r(num, dn);
      r.canonicalize();
      candidates.insert(r);
      candidates.insert(-r);
    }
  for (const auto& r : candidates) {
    std::size_t mult = 0;
    while (p.size() > 1 && sgn(eval_poly(p, r)) == 0) {
      p = poly_divmod(p, Poly{-r, 1}).first;
      ++mult;
    }
    if (mult) out.emplace_back(r, mult);
  }
  return out;
}

FdAlgebra::Vec FdAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec z(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational f = x[i] * y[j];
      const auto& pr = product[i][j];
      for (std::size_t k = 0; k < dim; ++k)
        if (sgn(pr[k]) != 0) z[k] += f * pr[k];
    }
  }
  return z;
}

FdAlgebra::Vec FdAlgebra::eval(const Poly& p, const Vec& x) const {
  Vec v(dim);
  for (std::size_t i = p.size(); i-- > 0;) {
    v = mul(v, x);
    for (std::size_t k = 0; k < dim; ++k) v[k] += p[i] * one[k];
  }
  return v;
}

Poly FdAlgebra::minimal_polynomial(const Vec& x) const {
  EchelonBasis b(true);
  Vec power = one;
  for (std::size_t k = 0; k <= dim; ++k) {
    auto ins = b.insert(from_dense(power), SparseVec::unit(k));
    if (!ins.independent) {
      Poly mu(k + 1);
      for (const auto& [i, c] : ins.relation.e) mu[i] = c;
      const Rational lead = mu[k];
      for (auto& c : mu) c /= lead;
      return mu;
    }
    power = mul(x, power);
  }
  fail(ErrorCode::Internal, "no minimal polynomial within the dimension");
}

std::vector<FdAlgebra::Vec> radical_basis(const FdAlgebra& a) {
  std::vector<Rational> trace(a.dim);
  for (std::size_t k = 0; k < a.dim; ++k)
    for (std::size_t j = 0; j < a.dim; ++j) trace[k] += a.product[k][j][j];
  DenseMatrix form(a.dim, std::vector<Rational>(a.dim));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        if (sgn(a.product[i][j][k]) != 0) form[i][j] += a.product[i][j][k] * trace[k];
  return dense_kernel(form, a.dim);
}

namespace {

bool is_nontrivial_idempotent(const FdAlgebra& a, const FdAlgebra::Vec& e) {
  if (e == a.one) return false;
  if (std::all_of(e.begin(), e.end(), [](const Rational& x) { return sgn(x) == 0; })) return false;
  return a.mul(e, e) == e;
}

std::optional<FdAlgebra::Vec> idempotent_from(const FdAlgebra& a, const FdAlgebra::Vec& x) {
  const Poly mu = a.minimal_polynomial(x);
  for (const auto& [root, mult] : rational_roots(mu)) {
    Poly factor{1};
    for (std::size_t i = 0; i < mult; ++i) factor = poly_mul(factor, Poly{-root, 1});
    const Poly rest = poly_divmod(mu, factor).first;
    if (rest.size() <= 1) continue;
    // s factor + t rest = 1, and t rest projects onto the root's generalized eigenspace
    auto [s, t] = poly_bezout(factor, rest);
    auto e = a.eval(poly_mul(t, rest), x);
    if (is_nontrivial_idempotent(a, e)) return e;
  }
  return std::nullopt;
}

}  // namespace

std::optional<FdAlgebra::Vec> find_idempotent(const FdAlgebra& a) {
  using Vec = FdAlgebra::Vec;
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vec x(a.dim);
    x[i] = 1;
    if (auto e = idempotent_from(a, x)) return e;
  }
  const std::size_t pair_dim = std::min<std::size_t>(a.dim, 24);
  for (std::size_t i = 0; i < pair_dim; ++i)
    for (std::size_t j = i + 1; j < pair_dim; ++j) {
      Vec x(a.dim);
      x[i] = 1;
      x[j] = 2;
      if (auto e = idempotent_from(a, x)) return e;
    }
  // fixed linear congruential sequence of small coefficients
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (int trial = 0; trial < 64; ++trial) {
    Vec x(a.dim);
    for (auto& c : x) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      c = static_cast<long>((state >> 33) % 7) - 3;
    }
    if (auto e = idempotent_from(a, x)) return e;
  }
  return std::nullopt;
}

}  // namespace tors
