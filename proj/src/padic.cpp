#include "hypadic/padic.hpp"

#include <map>
#include <sstream>

namespace hypadic {

namespace {

// Inverse of a mod p by extended Euclid; a in [1, p).
long inv_mod(long a, long p) {
  long t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    long q = r / newr;
    long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw InternalError("inv_mod: argument not invertible");
  return t < 0 ? t + p : t;
}

// Residue of x mod p for v_p(x) >= 0, as a machine word. p prime.
long residue_mod_p(const Rational& x, long p) {
  unsigned long up = static_cast<unsigned long>(p);
  unsigned long n = mpz_fdiv_ui(x.num().get_mpz_t(), up);
  unsigned long d = mpz_fdiv_ui(x.den().get_mpz_t(), up);
  // d != 0 by the v_p(x) >= 0 precondition.
  long inv = inv_mod(static_cast<long>(d), p);
  return static_cast<long>(n * static_cast<unsigned long>(inv) % up);
}

void require_prime(long p, const char* who) {
  if (p < 2 || !is_prime(p)) {
    throw PreconditionError(std::string(who) + ": " + std::to_string(p) + " is not prime");
  }
}

void require_p_integral(const Rational& x, long p, const char* who) {
  if (mpz_divisible_ui_p(x.den().get_mpz_t(), static_cast<unsigned long>(p))) {
    throw PreconditionError(std::string(who) + ": " + x.str() + " has " + std::to_string(p) +
                            " in its denominator");
  }
}

}  // namespace

std::string PAdicExpansion::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < preperiod.size(); ++i) {
    if (i) os << ',';
    os << preperiod[i];
  }
  if (!preperiod.empty()) os << '|';
  os << '(';
  for (size_t i = 0; i < period.size(); ++i) {
    if (i) os << ',';
    os << period[i];
  }
  os << ')';
  return os.str();
}

PAdicExpansion expand(const Rational& x, long p) {
  require_prime(p, "expand");
  require_p_integral(x, p, "expand");

  // The state determines the entire future digit stream, so the first
  // repeated state marks both the minimal preperiod and the minimal period.
  std::vector<long> digits;
  std::map<Rational, size_t> seen;
  Rational state = x;
  size_t cycle_start;
  for (;;) {
    auto [it, inserted] = seen.emplace(state, digits.size());
    if (!inserted) {
      cycle_start = it->second;
      break;
    }
    long d = residue_mod_p(state, p);
    digits.push_back(d);
    state = (state - Rational(d)) / Rational(p);
  }

  PAdicExpansion e;
  e.prime = p;
  e.value = x;
  e.preperiod.assign(digits.begin(), digits.begin() + cycle_start);
  e.period.assign(digits.begin() + cycle_start, digits.end());
  return e;
}

long digit_closed_form(const Rational& x, long p, long j) {
  require_prime(p, "digit_closed_form");
  if (!(Rational(0) < x && x < Rational(1))) {
    throw PreconditionError("digit_closed_form: " + x.str() + " is not strictly inside (0,1)");
  }
  Rational xm1 = x - Rational(1);
  if (mpz_divisible_ui_p(xm1.den().get_mpz_t(), static_cast<unsigned long>(p)) ||
      mpz_divisible_ui_p(xm1.num().get_mpz_t(), static_cast<unsigned long>(p))) {
    throw PreconditionError("digit_closed_form: " + xm1.str() + " is not a unit at " +
                            std::to_string(p));
  }
  long M = multiplicative_order(Integer(p), x.den());
  if (j < 0 || j >= M) {
    throw PreconditionError("digit_closed_form: index " + std::to_string(j) +
                            " outside [0, " + std::to_string(M) + ")");
  }
  Rational t = -(Rational(pow_int(Integer(p), static_cast<unsigned long>(M - 1 - j))) * x);
  Integer d = (t.frac() * Rational(p)).floor();
  return d.get_si();
}

Integer truncate(const Rational& x, long p, long j) {
  require_prime(p, "truncate");
  require_p_integral(x, p, "truncate");
  if (j < 0) throw PreconditionError("truncate: negative digit count");
  if (j == 0) return 0;
  Integer pj = pow_int(Integer(p), static_cast<unsigned long>(j));
  Integer dinv;
  if (!mpz_invert(dinv.get_mpz_t(), x.den().get_mpz_t(), pj.get_mpz_t())) {
    throw InternalError("truncate: denominator not invertible");
  }
  return mod_floor(x.num() * dinv, pj);
}

CarryCount carries(const PAdicExpansion& x, const Integer& n) {
  if (n < 0) throw PreconditionError("carries: negative addend");
  // The carry chain never terminates exactly when x + n is a negative
  // integer, i.e. value in {-n, ..., -1}.
  if (x.value.is_integer() && x.value.sign() < 0 && -Rational(n) <= x.value) {
    return CarryCount::infinity();
  }
  const long p = x.prime;
  long count = 0;
  long carry = 0;
  size_t i = 0;
  if (n.fits_slong_p()) {
    for (long rest = n.get_si(); rest > 0; rest /= p, ++i) {
      long s = x.digit(i) + rest % p + carry;
      if (s >= p) {
        carry = 1;
        ++count;
      } else {
        carry = 0;
      }
    }
  } else {
    Integer rest = n;
    while (rest > 0) {
      long nd = static_cast<long>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(),
                                                static_cast<unsigned long>(p)));
      long s = x.digit(i) + nd + carry;
      if (s >= p) {
        carry = 1;
        ++count;
      } else {
        carry = 0;
      }
      ++i;
    }
  }
  // A pending carry dies at the first digit below p-1; one lap of the stream
  // must contain such a digit, or x + n would have been a negative integer.
  size_t guard = x.preperiod.size() + x.period.size() + 1;
  for (size_t steps = 0; carry == 1; ++steps, ++i) {
    if (steps > guard) throw InternalError("carries: carry chain outran the period");
    if (x.digit(i) == p - 1) {
      ++count;
    } else {
      carry = 0;
    }
  }
  return count;
}

ExtInt binom_valuation(const Rational& x, const Integer& n, long p) {
  require_prime(p, "binom_valuation");
  require_p_integral(x, p, "binom_valuation");
  if (n < 0) throw PreconditionError("binom_valuation: negative n");
  return carries(expand(x, p), n);
}

ExtInt binom_valuation_oracle(const Rational& x, const Integer& n, long p) {
  require_prime(p, "binom_valuation_oracle");
  require_p_integral(x, p, "binom_valuation_oracle");
  if (n < 0) throw PreconditionError("binom_valuation_oracle: negative n");
  if (!n.fits_slong_p()) {
    throw PreconditionError("binom_valuation_oracle: n too large for the oracle route");
  }
  // C(x+n, n) = (x+1)(x+2)...(x+n) / n!
  long nn = n.get_si();
  long acc = 0;
  for (long i = 1; i <= nn; ++i) {
    Rational term = x + Rational(i);
    if (term.is_zero()) return ExtInt::infinity();
    acc += valuation(term, p).value();
  }
  return acc - factorial_valuation(n, p).get_si();
}

}  // namespace hypadic
