#pragma once

#include <string>
#include <vector>

#include "hypadic/numtheory.hpp"

namespace hypadic {

using CarryCount = ExtInt;

// Canonical eventually periodic base-p expansion of an element of Z_(p)
// (rationals with p-free denominator). Digits are least significant first,
// the preperiod is as short as possible and the period is nonempty and
// aperiodic. Satisfies
//   value = sum_i preperiod[i] p^i + p^|preperiod| * y / (1 - p^M)
// where y is the integer whose base-p digits are the period and M = |period|.
struct PAdicExpansion {
  long prime;
  std::vector<long> preperiod;
  std::vector<long> period;
  Rational value;

  // j-th digit of the infinite stream.
  long digit(size_t j) const {
    if (j < preperiod.size()) return preperiod[j];
    return period[(j - preperiod.size()) % period.size()];
  }

  bool purely_periodic() const { return preperiod.empty(); }

  // "pre0,pre1|(per0,per1,...)"; the bar is omitted when the preperiod is
  // empty, so -4/5 at 7 prints "(2,1,4,5)" and 3 at 5 prints "3|(0)".
  std::string str() const;
};

// Digit extraction: x0 = tau_1(x), x <- (x - x0)/p, with cycle detection on
// the exact rational state. Requires p prime and v_p(x) >= 0 (p-free
// denominator).
PAdicExpansion expand(const Rational& x, long p);

// j-th digit of the purely periodic expansion of x - 1 computed in closed
// form as floor({-p^{M-1-j} x} * p), with M the multiplicative order of p
// modulo denominator(x). No digit extraction involved. Requires x in (0,1)
// strictly, x - 1 a p-adic unit (p divides neither numerator nor denominator
// of x - 1), and 0 <= j < M.
long digit_closed_form(const Rational& x, long p, long j);

// tau_j(x): the unique integer in [0, p^j) congruent to x mod p^j.
// Requires p prime, j >= 0, v_p(x) >= 0.
Integer truncate(const Rational& x, long p, long j);

// Number of base-p carries when adding n to x digit by digit. Infinite
// exactly when value(x) is one of -n..-1 (the carry chain never stops).
CarryCount carries(const PAdicExpansion& x, const Integer& n);

// v_p of the binomial value C(x+n, n), by Kummer carry counting on the
// expansion of x. Requires n >= 0, p prime, v_p(x) >= 0.
ExtInt binom_valuation(const Rational& x, const Integer& n, long p);

// The same quantity by the independent route
//   sum_{i=1..n} v_p(x+i) - v_p(n!),
// with the factorial part from Legendre's formula. Kept deliberately separate
// from the carry route; their agreement is a standing test. Only usable at
// oracle scale (n must fit a machine word).
ExtInt binom_valuation_oracle(const Rational& x, const Integer& n, long p);

}  // namespace hypadic
