#pragma once

#include <vector>

#include "hypadic/rational.hpp"

namespace hypadic {

// Deterministic primality: trial division by small primes, then Miller-Rabin
// over the 12-base set {2,...,37}, exact for n < 3.3e24 (far beyond the prime
// sizes this library works with).
bool is_prime(const Integer& n);
bool is_prime(long n);

// Least M >= 1 with base^M = 1 (mod modulus). Requires modulus >= 1 and
// gcd(base, modulus) = 1; returns 1 when modulus = 1.
long multiplicative_order(const Integer& base, const Integer& modulus);

// (Z/modulus)^* as an explicit residue list.
struct UnitGroup {
  long modulus;
  std::vector<long> units;  // increasing; the synthetic class {0} for modulus 1
  long order;               // phi(modulus)
};

// Requires modulus >= 1. unit_group(1) returns the single synthetic class {0}
// with order 1, so residue scans over a trivial modulus stay well-formed.
UnitGroup unit_group(long modulus);

// Legendre: v_p(n!) = sum_{i>=1} floor(n/p^i). Requires n >= 0 and p prime.
Integer factorial_valuation(const Integer& n, long p);

// Least prime q > lower with q = u (mod modulus), scanning upward; gives up
// past cap with a diagnostic. Requires gcd(u, modulus) = 1 (or modulus = 1,
// where every prime qualifies).
long least_prime_in_class(long u, long modulus, long lower, long cap = 1000000);

// Floor-mod remainder in [0, |m|); m != 0.
Integer mod_floor(const Integer& a, const Integer& m);

// base^exp for exp >= 0.
Integer pow_int(const Integer& base, unsigned long exp);

}  // namespace hypadic
