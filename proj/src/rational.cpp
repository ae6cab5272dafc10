#include "hypadic/rational.hpp"

#include <ostream>

#include "hypadic/numtheory.hpp"

namespace hypadic {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(std::string_view text) {
  // Exactly -?[0-9]+(/[0-9]+)? and nothing else.
  auto bad = [&](const char* why) {
    return PreconditionError("Rational: cannot parse \"" + std::string(text) + "\": " + why);
  };
  size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  size_t num_begin = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == num_begin) throw bad("missing numerator digits");
  std::string num_part(text.substr(0, i));
  std::string den_part = "1";
  if (i < text.size()) {
    if (text[i] != '/') throw bad("unexpected character");
    ++i;
    size_t den_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == den_begin || i != text.size()) throw bad("malformed denominator");
    den_part = std::string(text.substr(den_begin));
  }
  Integer n(num_part), d(den_part);
  if (d == 0) throw bad("zero denominator");
  return Rational(n, d);
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

ExtInt valuation(const Rational& x, long p) {
  if (p < 2 || !is_prime(p)) {
    throw PreconditionError("valuation: " + std::to_string(p) + " is not prime");
  }
  if (x.is_zero()) return ExtInt::infinity();
  // Canonical form: p divides at most one of numerator and denominator.
  Integer n = x.num(), d = x.den();
  if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
    return integer_valuation(n, p);
  }
  if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) {
    return -integer_valuation(d, p);
  }
  return 0;
}

long integer_valuation(const Integer& n, long p) {
  if (n == 0) throw PreconditionError("integer_valuation: zero input");
  Integer rest, pp(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

}  // namespace hypadic
