// natq: exact arithmetic over prime fields GF(p) and the rationals.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <random>
#include <variant>

namespace natq {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Error hierarchy. Domain failures are exceptions; expected alternative
// outcomes (e.g. a polynomial that does not split) use optional returns.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define NATQ_ERROR_TYPE(NAME)                    \
  class NAME : public Error {                    \
   public:                                       \
    using Error::Error;                          \
  }

NATQ_ERROR_TYPE(DimensionError);      // mismatched vector/matrix shapes
NATQ_ERROR_TYPE(FieldMismatchError);  // mixing elements of different fields
NATQ_ERROR_TYPE(ParseError);          // bad input files / specs
NATQ_ERROR_TYPE(ValidationError);     // algebra table fails validate()
NATQ_ERROR_TYPE(NonSplitError);       // algebra not split over the base field
NATQ_ERROR_TYPE(NotSemisimpleError);
NATQ_ERROR_TYPE(RadicalGuardError);   // small characteristic, no certificate
NATQ_ERROR_TYPE(OracleLimitError);    // instance exceeds an oracle's budget
NATQ_ERROR_TYPE(NotAnIdealError);
NATQ_ERROR_TYPE(MalformedBimoduleError);
NATQ_ERROR_TYPE(BadCharacteristicError);
NATQ_ERROR_TYPE(NotRadicalGradedError);
NATQ_ERROR_TYPE(NotApplicableError);
NATQ_ERROR_TYPE(InfiniteDimensionError);
NATQ_ERROR_TYPE(SearchExhaustedError);
NATQ_ERROR_TYPE(InternalError);  // a verified postcondition failed

#undef NATQ_ERROR_TYPE

inline void check(bool cond, const char* msg) {
  if (!cond) throw InternalError(msg);
}

// ---------------------------------------------------------------------------
// GF(p)
// ---------------------------------------------------------------------------

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Element of GF(p), canonical residue in [0, p). Each element carries its
// modulus so values stay self-describing across containers.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(long long v, long long p) : p_(p) {
    v_ = v % p;
    if (v_ < 0) v_ += p;
  }

  long long value() const { return v_; }
  long long modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    long long p = match(a, b);
    long long s = a.v_ + b.v_;
    if (s >= p) s -= p;
    return raw(s, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    long long p = match(a, b);
    long long s = a.v_ - b.v_;
    if (s < 0) s += p;
    return raw(s, p);
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  friend Fp operator*(const Fp& a, const Fp& b) {
    long long p = match(a, b);
    return raw(static_cast<long long>(
                   static_cast<unsigned __int128>(a.v_) * b.v_ % p),
               p);
  }
  Fp inv() const {
    if (v_ == 0) throw Error("division by zero in GF(p)");
    return raw(inv_mod(v_, p_), p_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    return a.v_ == b.v_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  std::string str() const { return std::to_string(v_); }

 private:
  static Fp raw(long long v, long long p) {
    Fp e;
    e.v_ = v;
    e.p_ = p;
    return e;
  }
  static long long match(const Fp& a, const Fp& b) {
    if (a.p_ != b.p_) throw FieldMismatchError("GF(p) moduli differ");
    return a.p_;
  }
  static long long inv_mod(long long a, long long p) {
    long long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
      long long q = r / newr;
      long long tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (t < 0) t += p;
    return t;
  }

  long long v_;
  long long p_;
};

// ---------------------------------------------------------------------------
// Rationals (exact, arbitrary precision)
// ---------------------------------------------------------------------------

class Rat {
 public:
  Rat() : v_(0) {}
  explicit Rat(bigrat v) : v_(std::move(v)) {}
  Rat(long long num, long long den) {
    if (den == 0) throw Error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    v_ = bigrat(num, den);
  }
  Rat(const bigint& num, const bigint& den) {
    if (den == 0) throw Error("zero denominator");
    if (den < 0)
      v_ = bigrat(-num, -den);
    else
      v_ = bigrat(num, den);
  }

  const bigrat& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bigint num() const { return boost::multiprecision::numerator(v_); }
  bigint den() const { return boost::multiprecision::denominator(v_); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
  Rat operator-() const { return Rat(-v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
  Rat inv() const {
    if (v_ == 0) throw Error("division by zero in Q");
    return Rat(1 / v_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) { return a * b.inv(); }

  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

  std::string str() const {
    return num().str() + "/" + den().str();
  }

 private:
  bigrat v_;
};

// ---------------------------------------------------------------------------
// Field contexts. These mint elements and describe the field; all algebra
// code is templated on the context type.
// ---------------------------------------------------------------------------

class FpField {
 public:
  using Elem = Fp;

  explicit FpField(long long p) : p_(p) {
    if (!is_prime(p)) throw ParseError("field characteristic must be prime");
  }

  long long characteristic() const { return p_; }
  long long order() const { return p_; }
  bool is_rationals() const { return false; }

  Elem zero() const { return Fp(0, p_); }
  Elem one() const { return Fp(1, p_); }
  Elem from_int(long long v) const { return Fp(v, p_); }
  Elem random(std::mt19937_64& rng) const {
    return Fp(static_cast<long long>(rng() % static_cast<uint64_t>(p_)), p_);
  }
  // nonzero random element
  Elem random_unit(std::mt19937_64& rng) const {
    return Fp(1 + static_cast<long long>(rng() % static_cast<uint64_t>(p_ - 1)),
              p_);
  }

  friend bool operator==(const FpField& a, const FpField& b) {
    return a.p_ == b.p_;
  }

 private:
  long long p_;
};

class RatField {
 public:
  using Elem = Rat;

  long long characteristic() const { return 0; }
  bool is_rationals() const { return true; }

  Elem zero() const { return Rat(); }
  Elem one() const { return Rat(1, 1); }
  Elem from_int(long long v) const { return Rat(v, 1); }
  Elem random(std::mt19937_64& rng) const {
    // small numerators keep downstream arithmetic tame
    return Rat(static_cast<long long>(rng() % 7) - 3, 1);
  }
  Elem random_unit(std::mt19937_64& rng) const {
    long long v = 1 + static_cast<long long>(rng() % 5);
    return Rat((rng() & 1) ? v : -v, 1);
  }

  friend bool operator==(const RatField&, const RatField&) { return true; }
};

// Runtime descriptor used by file formats and the CLI.
struct FieldSpec {
  long long characteristic = 0;  // 0 means rationals

  bool is_rationals() const { return characteristic == 0; }
};

}  // namespace natq
