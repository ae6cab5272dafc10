#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypadic/classify.hpp"

namespace hypadic {

// Finite projective image type of the weight-one form attached to a row.
enum class Orbit { Dihedral, Tetrahedral, Octahedral, Icosahedral1, Icosahedral2 };
const char* to_string(Orbit o);

// One row of the modular Schwarz list: exponent pair (m1, m2), level N,
// weight k0, and the hypergeometric parameters (a, b) printed with it
// (the third parameter is always c = 2/3).
struct RepRecord {
  Rational m1, m2;
  long level;   // N
  long weight;  // k0
  Orbit orbit;
  Rational a, b;
};

// The full 54-row table, embedded as static data in table order.
const std::vector<RepRecord>& schwarz_table();

// Parameter derivation for a row: a = 1/12 + (m1 - m2)/2,
// b = 1/12 - (m1 - m2)/2.
std::pair<Rational, Rational> derive_ab(const RepRecord& row);

// Consistency report for the embedded table against derive_ab and the
// expected per-orbit row counts {6, 12, 12, 12, 12}.
struct TableReport {
  long rows = 0;
  std::map<Orbit, long> orbit_counts;
  std::vector<std::string> mismatches;  // empty on success, else names rows
  bool ok() const;
};
TableReport verify_table();

// The two essential series attached to a parameter pair:
// (a, 1/3 + a; 1 + a - b) and (b, 1/3 + b; 1 + b - a). Their coefficients
// generate the same bounded/unbounded prime behavior as the row's form.
struct EssentialPair {
  Rational a, b;
  Params2F1 first, second;
};
EssentialPair essential_pair(const Rational& a, const Rational& b);

// The distinct parameter pairs of the table, identified up to the a <-> b
// swap, in first-appearance order. There are exactly 9.
const std::vector<EssentialPair>& essential_pairs();

// Everything needed to certify one essential series finite: fractional-part
// normalization, interlacing, zero density, and a clean scan of the small
// primes.
struct TripleCertificate {
  Params2F1 raw;
  bool normalized_ok = false;
  std::string failure;  // diagnostic when the normalization precondition fails
  Params2F1 normalized;
  long modulus = 0;  // D
  bool finite_monodromy = false;
  Rational density;
  std::vector<DensityReport::ClassEntry> classes;
  std::vector<long> nongood_primes;    // primes <= scan_limit failing goodness
  std::vector<long> unbounded_primes;  // good primes <= scan_limit classified Unbounded
  long scan_limit = 0;
  bool certified = false;
};

struct Certificate {
  Rational a, b;
  TripleCertificate first, second;
  bool certified = false;

  std::string to_json() const;
};

// Certifies that both essential series of a pair have density 0 and that no
// good prime up to scan_limit is unbounded. Normalization failures are
// recorded per triple, not thrown.
Certificate certify_finite(const EssentialPair& pair, long scan_limit = 1000);

}  // namespace hypadic
