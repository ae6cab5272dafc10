#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypadic/padic.hpp"

namespace hypadic {

// Parameters (alpha_1..alpha_n; beta_1..beta_{n-1}) of a hypergeometric
// series nF_{n-1}. Lower parameters in Z_{<=0} make the series undefined and
// are rejected at construction. admissible is true when every parameter lies
// strictly inside (0,1) and no alpha equals a beta.
struct HyperParams {
  std::vector<Rational> alphas;
  std::vector<Rational> betas;
  bool admissible = false;

  size_t order() const { return alphas.size(); }  // n
  std::vector<Rational> all() const;              // alphas then betas
};

// The constructor of record; requires |alphas| = |betas| + 1, |alphas| >= 1.
HyperParams make_params(std::vector<Rational> alphas, std::vector<Rational> betas);

// Gauss triple (a, b; c) for 2F1.
struct Params2F1 {
  Rational a, b, c;
};

HyperParams to_params(const Params2F1& t);
// a, b, c in (0,1) strictly, a != c and b != c (a = b is allowed).
bool is_admissible(const Params2F1& t);
// D: lcm of the three reduced denominators.
long lcm_denominator(const Params2F1& t);

// p is good when v_p(x - 1) = 0 for every parameter x.
bool is_good_prime(const HyperParams& params, long p);

// Hypothesis of the carry-count valuation formula: v_p(x - 1) >= 0 for every
// parameter x (weaker than goodness).
bool valuation_formula_applies(const HyperParams& params, long p);

// Period M: lcm of the multiplicative orders of p modulo the reduced
// denominators of the x - 1. Requires p good for the parameters.
long period(const HyperParams& params, long p);

// Exact coefficients A_0..A_{m_max} of nF_{n-1} at z = 1 scale, by the term
// recurrence A_{m+1} = A_m prod_j (alpha_j + m) / (prod_k (beta_k + m) (m+1)).
std::vector<Rational> coefficient_oracle(const HyperParams& params, long m_max);

// v_p(A_m) = sum_j c_p(alpha_j - 1, m) - sum_k c_p(beta_k - 1, m), valid
// whenever v_p(x - 1) >= 0 for every parameter. Instantiate once per
// (params, p), then query any index, however large.
class CoeffValuation {
 public:
  CoeffValuation(const HyperParams& params, long p);

  long prime() const { return p_; }
  // Throws PreconditionError when A_m = 0 (some alpha in Z_{<=0} puts a root
  // of the binomial numerator below m); the valuation is +infinity there.
  long at(const Integer& m) const;

 private:
  long p_;
  std::vector<PAdicExpansion> alpha_exp_, beta_exp_;
};

long coeff_valuation(const HyperParams& params, long p, const Integer& m);

// The map m -> v_p(A_m) for m = 0..m_max, ready to serialize.
struct ValuationProfile {
  long prime;
  std::vector<std::pair<long, long>> entries;  // (m, v)

  std::string to_csv() const;   // header "m,v", one row per entry
  std::string to_json() const;  // [[m, v], ...]
};

ValuationProfile valuation_profile(const HyperParams& params, long p, long m_max);

// N_r = p^{Mr} - p^{M(r-1)} - ... - p^M - 1 and v_p(A_{N_r}). At a good prime
// for admissible parameters the valuation equals M*r, so these indices push
// the valuation to +infinity along r. Requires admissible params, good p,
// r >= 1.
struct SupWitness {
  Integer index;
  long valuation;
};
SupWitness sup_witness(const HyperParams& params, long p, long r);

// Fractional-part normalization ({a},{b},{c}) of a Gauss triple. Requires
// none of a, b, c, a-c, b-c integral (each failure is named in the
// diagnostic); the result is admissible and has the same set of primes with
// unbounded coefficients as (a,b;c).
Params2F1 normalize_shift(const Rational& a, const Rational& b, const Rational& c);

}  // namespace hypadic
