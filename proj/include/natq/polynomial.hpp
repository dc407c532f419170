// Univariate polynomials and split-root extraction.
//
// Only linear factors are ever needed downstream (minimal polynomials of
// central elements of split semisimple algebras), so factorization stops at
// root isolation: GF(p) goes through gcd(f, x^p - x), the rationals through
// the rational root theorem on the primitive integer form.
#pragma once

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <optional>
#include <vector>

#include "natq/field.hpp"
#include "natq/matrix.hpp"

namespace natq {

template <class F>
class Polynomial {
 public:
  using Elem = typename F::Elem;

  explicit Polynomial(const F& field) : field_(field) {}
  Polynomial(const F& field, std::vector<Elem> coeffs)
      : field_(field), c_(std::move(coeffs)) {
    trim();
  }

  static Polynomial x_power(const F& field, size_t k) {
    std::vector<Elem> c(k + 1, field.zero());
    c[k] = field.one();
    return Polynomial(field, std::move(c));
  }

  const F& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is reported as -1
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Elem leading() const {
    if (c_.empty()) return field_.zero();
    return c_.back();
  }
  Elem coeff(size_t i) const {
    return i < c_.size() ? c_[i] : field_.zero();
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    auto inv = c_.back().inv();
    auto r = c_;
    for (auto& x : r) x *= inv;
    return Polynomial(field_, std::move(r));
  }

  Elem eval(const Elem& x) const {
    Elem acc = field_.zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (size_t i = 0; i < r.size(); ++i) {
      if (i < a.c_.size()) r[i] += a.c_[i];
      if (i < b.c_.size()) r[i] += b.c_[i];
    }
    return Polynomial(a.field_, std::move(r));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (size_t i = 0; i < r.size(); ++i) {
      if (i < a.c_.size()) r[i] += a.c_[i];
      if (i < b.c_.size()) r[i] -= b.c_[i];
    }
    return Polynomial(a.field_, std::move(r));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(a.field_, std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  // division with remainder; divisor must be nonzero
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                  const Polynomial& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    Polynomial q(a.field_), r = a;
    std::vector<Elem> qc;
    if (r.degree() >= b.degree())
      qc.assign(r.degree() - b.degree() + 1, a.field_.zero());
    auto lead_inv = b.c_.back().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      size_t shift = r.degree() - b.degree();
      Elem f = r.c_.back() * lead_inv;
      qc[shift] = f;
      for (size_t i = 0; i < b.c_.size(); ++i)
        r.c_[shift + i] -= f * b.c_[i];
      r.trim();
    }
    q = Polynomial(a.field_, std::move(qc));
    return {q, r};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  F field_;
  std::vector<Elem> c_;
};

template <class F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto [q, r] = Polynomial<F>::divmod(a, b);
    a = b;
    b = r;
  }
  return a.monic();
}

template <class F>
Polynomial<F> poly_mod(const Polynomial<F>& a, const Polynomial<F>& m) {
  return Polynomial<F>::divmod(a, m).second;
}

// base^e mod m, with a big-integer exponent
template <class F>
Polynomial<F> poly_powmod(Polynomial<F> base, bigint e,
                          const Polynomial<F>& m) {
  auto result = poly_mod(
      Polynomial<F>(base.field(), {base.field().one()}), m);
  base = poly_mod(base, m);
  while (e > 0) {
    if ((e & 1) != 0) result = poly_mod(result * base, m);
    e >>= 1;
    if (e > 0) base = poly_mod(base * base, m);
  }
  return result;
}

// Divides f by (x - r) as long as the remainder vanishes; returns the
// multiplicity and leaves f deflated.
template <class F>
size_t peel_root(Polynomial<F>& f, const typename F::Elem& r) {
  const F& field = f.field();
  Polynomial<F> lin(field, {-r, field.one()});
  size_t mult = 0;
  while (!f.is_zero() && f.degree() >= 1) {
    auto [q, rem] = Polynomial<F>::divmod(f, lin);
    if (!rem.is_zero()) break;
    f = q;
    ++mult;
  }
  return mult;
}

namespace detail {

// All distinct roots in GF(p) of a squarefree product of linear factors.
inline std::vector<Fp> roots_of_split_part(const Polynomial<FpField>& g,
                                           std::mt19937_64& rng) {
  const FpField& field = g.field();
  long long p = field.characteristic();
  std::vector<Fp> roots;
  if (g.degree() <= 0) return roots;
  if (g.degree() == 1) {
    roots.push_back(-(g.coeff(0) / g.coeff(1)));
    return roots;
  }
  if (p <= (1 << 16)) {
    for (long long v = 0; v < p; ++v) {
      Fp x = field.from_int(v);
      if (g.eval(x).is_zero()) roots.push_back(x);
    }
    return roots;
  }
  // random-shift splitting: gcd(g(x), (x+a)^((p-1)/2) - 1) separates roots
  // by quadratic-residue class of r + a
  Polynomial<FpField> one(field, {field.one()});
  for (int attempt = 0; attempt < 256; ++attempt) {
    Fp a = field.random(rng);
    Polynomial<FpField> xa(field, {a, field.one()});
    auto pw = poly_powmod(xa, bigint((p - 1) / 2), g);
    auto h = poly_gcd(g, pw - one);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      auto [q, rem] = Polynomial<FpField>::divmod(g, h);
      check(rem.is_zero(), "splitting factor must divide");
      auto left = roots_of_split_part(h, rng);
      auto right = roots_of_split_part(q, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
  throw SearchExhaustedError("random root splitting did not converge");
}

// Distinct roots of f in GF(p); ignores nonlinear factors.
inline std::vector<Fp> distinct_roots(const Polynomial<FpField>& f,
                                      uint64_t seed = 0) {
  const FpField& field = f.field();
  long long p = field.characteristic();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  Polynomial<FpField> x = Polynomial<FpField>::x_power(field, 1);
  auto xp = poly_powmod(x, bigint(p), f.monic());
  auto g = poly_gcd(f.monic(), xp - x);  // product of distinct linear factors
  auto rng2 = rng;
  return roots_of_split_part(g, rng2);
}

inline std::vector<bigint> divisors_from_factorization(const bigint& n_in) {
  bigint n = n_in < 0 ? bigint(-n_in) : n_in;
  if (n == 0) throw Error("divisors of zero requested");
  std::vector<std::pair<bigint, unsigned>> fac;
  for (long long d = 2; d <= 1000000 && bigint(d) * d <= n; ++d) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.push_back({bigint(d), e});
    }
  }
  if (n > 1) {
    if (n < bigint(1000000) * 1000000 ||
        boost::multiprecision::miller_rabin_test(n, 32)) {
      fac.push_back({n, 1});
    } else {
      throw OracleLimitError(
          "cannot enumerate divisors: composite cofactor beyond trial bound");
    }
  }
  std::vector<bigint> divs{bigint(1)};
  for (auto& [prime, e] : fac) {
    size_t base = divs.size();
    bigint pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= prime;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Distinct rational roots via the rational root theorem.
inline std::vector<Rat> distinct_roots(const Polynomial<RatField>& f,
                                       uint64_t /*seed*/ = 0) {
  // primitive integer form
  bigint den_lcm = 1;
  for (const auto& c : f.coeffs())
    den_lcm = boost::multiprecision::lcm(den_lcm, Rat(c).den());
  std::vector<bigint> ic;
  for (const auto& c : f.coeffs()) {
    bigrat v = c.value() * bigrat(den_lcm);
    check(boost::multiprecision::denominator(v) == 1, "primitive form");
    ic.push_back(boost::multiprecision::numerator(v));
  }
  bigint content = 0;
  for (auto& v : ic) content = boost::multiprecision::gcd(content, v);
  if (content > 1)
    for (auto& v : ic) v /= content;

  std::vector<Rat> roots;
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low == ic.size()) throw Error("zero polynomial has no root set");
  if (low > 0) roots.push_back(Rat());
  if (ic.size() - low <= 1) return roots;

  auto ps = divisors_from_factorization(ic[low]);
  auto qs = divisors_from_factorization(ic.back());
  for (const auto& pd : ps)
    for (const auto& qd : qs) {
      if (boost::multiprecision::gcd(pd, qd) != 1) continue;
      for (int sign = 0; sign < 2; ++sign) {
        Rat cand(sign ? bigrat(-pd, qd) : bigrat(pd, qd));
        if (f.eval(cand).is_zero()) roots.push_back(cand);
      }
    }
  std::sort(roots.begin(), roots.end(), [](const Rat& a, const Rat& b) {
    return a.value() < b.value();
  });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace detail

// Roots with multiplicity when f splits into linear factors over its field;
// nullopt when an irreducible factor of degree >= 2 remains.
template <class F>
std::optional<std::vector<typename F::Elem>> split_roots(
    const Polynomial<F>& f, uint64_t seed = 0) {
  if (f.is_zero()) throw Error("split_roots of the zero polynomial");
  if (f.degree() == 0) return std::vector<typename F::Elem>{};
  auto distinct = detail::distinct_roots(f, seed);
  std::vector<typename F::Elem> out;
  Polynomial<F> rem = f;
  for (const auto& r : distinct) {
    size_t mult = peel_root(rem, r);
    for (size_t i = 0; i < mult; ++i) out.push_back(r);
  }
  if (rem.degree() > 0) return std::nullopt;
  return out;
}

// Distinct roots only, with no splitness requirement (used by searches that
// just need one eigenvalue).
template <class F>
std::vector<typename F::Elem> any_roots(const Polynomial<F>& f,
                                        uint64_t seed = 0) {
  return detail::distinct_roots(f, seed);
}

}  // namespace natq
