#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "hypadic/errors.hpp"

namespace hypadic {

using Integer = mpz_class;

// An integer extended with +infinity. Codomain of p-adic valuations and of
// carry counts: v_p(0) = +inf, and adding n to a negative integer produces
// infinitely many carries when the sum is negative.
class ExtInt {
 public:
  ExtInt(long v) : finite_(true), v_(v) {}  // implicit on purpose

  static ExtInt infinity() {
    ExtInt e(0);
    e.finite_ = false;
    return e;
  }

  bool is_infinite() const { return !finite_; }

  // Finite value; querying +infinity is a bug in the caller.
  long value() const {
    if (!finite_) throw InternalError("ExtInt: value() called on +infinity");
    return v_;
  }

  std::string str() const { return finite_ ? std::to_string(v_) : "inf"; }

  friend bool operator==(const ExtInt& x, const ExtInt& y) {
    return x.finite_ == y.finite_ && (!x.finite_ || x.v_ == y.v_);
  }
  friend bool operator!=(const ExtInt& x, const ExtInt& y) { return !(x == y); }

  // +infinity absorbs.
  friend ExtInt operator+(const ExtInt& x, const ExtInt& y) {
    if (!x.finite_ || !y.finite_) return infinity();
    return ExtInt(x.v_ + y.v_);
  }

 private:
  bool finite_;
  long v_;
};

// Arbitrary-precision rational, always in canonical form: gcd(|num|, den) = 1
// and den >= 1; zero is 0/1. All arithmetic is exact.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}            // implicit: n/1
  Rational(const Integer& n) : q_(n) {}  // implicit: n/1
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den);

  // Parses "n/d" or "n": optional leading '-', ASCII digits, no whitespace,
  // no '+'. Anything else (including zero denominators) is rejected.
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Integer floor() const;
  // x - floor(x), always in [0, 1).
  Rational frac() const;

  // Canonical text form, "n" or "n/d". parse() round-trips it.
  std::string str() const { return q_.get_str(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }
  friend bool operator!=(const Rational& x, const Rational& y) { return x.q_ != y.q_; }
  friend bool operator<(const Rational& x, const Rational& y) { return x.q_ < y.q_; }
  friend bool operator<=(const Rational& x, const Rational& y) { return x.q_ <= y.q_; }
  friend bool operator>(const Rational& x, const Rational& y) { return x.q_ > y.q_; }
  friend bool operator>=(const Rational& x, const Rational& y) { return x.q_ >= y.q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

// Exact power of the prime p dividing x; +infinity for x = 0. Non-prime p is
// rejected.
ExtInt valuation(const Rational& x, long p);

// v_p restricted to nonzero integers.
long integer_valuation(const Integer& n, long p);

}  // namespace hypadic
