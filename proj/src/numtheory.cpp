#include "hypadic/numtheory.hpp"

#include <numeric>

namespace hypadic {

namespace {

// Composites below 67*67 all have a factor in this list.
constexpr long kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                 29, 31, 37, 41, 43, 47, 53, 59, 61};

bool miller_rabin_witness(const Integer& n, const Integer& d, long s, long a) {
  Integer base(a), x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return false;
  }
  return true;  // a proves n composite
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (long q : kSmallPrimes) {
    if (n == q) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(q))) return false;
  }
  if (n < 67L * 67L) return true;
  Integer d = n - 1;
  long s = static_cast<long>(mpz_scan1(d.get_mpz_t(), 0));
  d >>= s;
  // Deterministic for n < 3.3e24 with these bases.
  for (long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, d, s, a)) return false;
  }
  return true;
}

bool is_prime(long n) { return is_prime(Integer(n)); }

long multiplicative_order(const Integer& base, const Integer& modulus) {
  if (modulus < 1) throw PreconditionError("multiplicative_order: modulus must be positive");
  if (modulus == 1) return 1;
  Integer g;
  mpz_gcd(g.get_mpz_t(), base.get_mpz_t(), modulus.get_mpz_t());
  if (g != 1) {
    throw PreconditionError("multiplicative_order: base " + base.get_str() +
                            " and modulus " + modulus.get_str() + " are not coprime");
  }
  Integer r = mod_floor(base, modulus);
  Integer acc = r;
  long order = 1;
  while (acc != 1) {
    acc = mod_floor(acc * r, modulus);
    ++order;
    if (modulus < order) throw InternalError("multiplicative_order: order exceeded modulus");
  }
  return order;
}

UnitGroup unit_group(long modulus) {
  if (modulus < 1) throw PreconditionError("unit_group: modulus must be positive");
  UnitGroup g;
  g.modulus = modulus;
  if (modulus == 1) {
    // Synthetic single class: every integer is congruent mod 1.
    g.units = {0};
    g.order = 1;
    return g;
  }
  for (long u = 1; u < modulus; ++u) {
    if (std::gcd(u, modulus) == 1) g.units.push_back(u);
  }
  g.order = static_cast<long>(g.units.size());
  return g;
}

Integer factorial_valuation(const Integer& n, long p) {
  if (n < 0) throw PreconditionError("factorial_valuation: negative n");
  if (p < 2 || !is_prime(p)) {
    throw PreconditionError("factorial_valuation: " + std::to_string(p) + " is not prime");
  }
  Integer acc = 0, t = n / p;
  while (t > 0) {
    acc += t;
    t /= p;
  }
  return acc;
}

long least_prime_in_class(long u, long modulus, long lower, long cap) {
  if (modulus < 1) throw PreconditionError("least_prime_in_class: modulus must be positive");
  if (modulus > 1) {
    if (u < 0 || u >= modulus || std::gcd(u, modulus) != 1) {
      throw PreconditionError("least_prime_in_class: residue " + std::to_string(u) +
                              " is not a unit mod " + std::to_string(modulus));
    }
  }
  long n = lower + 1;
  if (modulus > 1) {
    long shift = ((u - n) % modulus + modulus) % modulus;
    n += shift;
  }
  for (; n <= cap; n += (modulus > 1 ? modulus : 1)) {
    if (is_prime(n)) return n;
  }
  throw PreconditionError("least_prime_in_class: no prime = " + std::to_string(u) + " (mod " +
                          std::to_string(modulus) + ") in (" + std::to_string(lower) + ", " +
                          std::to_string(cap) + "]");
}

Integer mod_floor(const Integer& a, const Integer& m) {
  if (m == 0) throw PreconditionError("mod_floor: zero modulus");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer pow_int(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace hypadic
