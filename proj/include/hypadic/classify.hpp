#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypadic/hyper.hpp"

namespace hypadic {

// Verdict for one prime. Unbounded: the coefficient valuations v_p(A_m) have
// no lower bound. BoundedIntegral: every coefficient is a p-adic integer.
// NotGood: p fails the goodness hypothesis and the truncation criterion does
// not apply (never a silent guess).
enum class Verdict { Unbounded, BoundedIntegral, NotGood };
const char* to_string(Verdict v);

struct PrimeClassification {
  long prime;
  Verdict verdict;
  // Least j with tau_j(c-1) > tau_j(a-1) and tau_j(c-1) > tau_j(b-1);
  // meaningful only when verdict == Unbounded.
  long witness_index;
};

// Truncation-comparison decision procedure for admissible (a,b;c) at a prime
// p. Scans j in [1, 2M]; the comparison pattern is M-periodic past M, so this
// window decides every j.
PrimeClassification classify_prime(const Params2F1& t, long p);

// Explicit indices m_0..m_{r_max} with v_p(A_{m_r}) <= -(r+1), built from the
// digit comparison at the least witness index. Requires classify_prime(t,p)
// == Unbounded.
std::vector<Integer> unbounded_witnesses(const Params2F1& t, long p, long r_max);

// Once a good prime p > D is Unbounded, every prime q >= p with q = p (mod D)
// is Unbounded as well.
struct PropagationClaim {
  Params2F1 params;
  long prime;
  long modulus;  // D
};
PropagationClaim propagate(const Params2F1& t, long p);

// Verdict for a whole residue class of primes: the classification of every
// sufficiently large prime in the class.
enum class ClassVerdict { EventuallyUnbounded, EventuallyBounded };
const char* to_string(ClassVerdict v);

struct DensityReport {
  long modulus;  // D
  long phi;
  struct ClassEntry {
    long u;
    long tested_prime;  // 0 when the verdict came from the subgroup scan
    ClassVerdict verdict;
  };
  std::vector<ClassEntry> classes;  // by increasing u
  Rational density;                 // #EventuallyUnbounded / phi, reduced
  long threshold;                   // largest per-class prime-size bound used; 0 for the subgroup scan

  // {"D": .., "phi": .., "classes": [{"u","prime","verdict"}..], "density": "a/b"}
  std::string to_json() const;
  // header "u,prime,verdict,density", one row per class
  std::string to_csv() const;
};

// Dirichlet density of the unbounded primes by sampling: for each unit class
// u mod D, classify the least good prime p = u (mod D) with p > D and
// 1/p smaller than the minimal fractional-part separation of the parameters
// over one period. Such a prime's verdict is the verdict of all larger primes
// in its class. search_cap bounds the per-class prime search.
DensityReport density_by_sampling(const Params2F1& t, long search_cap = 1000000);

// The same verdicts with no prime search: class u is EventuallyUnbounded iff
// some w in the subgroup <u> of (Z/D)^* has {wc} < {wa} and {wc} < {wb}.
// Must agree with density_by_sampling class by class (standing cross-check).
DensityReport density_by_group(const Params2F1& t);

// Interlacing test: every unit u mod D has {uc} strictly between {ua} and
// {ub}. Holds iff the density is 0, iff only finitely many primes are
// unbounded, iff the monodromy group is finite.
bool is_finite_monodromy(const Params2F1& t);

// When c is strictly smallest of the three parameters, every good prime
// p > max(1/(a-c), 1/(b-c)) is Unbounded and the density is 1; returns that
// bound, or nothing when c is not smallest.
std::optional<Rational> is_full_density(const Params2F1& t);

}  // namespace hypadic
