#include "hypadic/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace hypadic {

namespace {

using ordered_json = nlohmann::ordered_json;

void require_admissible(const Params2F1& t, const char* who) {
  if (!is_admissible(t)) {
    throw PreconditionError(std::string(who) + ": (" + t.a.str() + ", " + t.b.str() + "; " +
                            t.c.str() + ") is not admissible");
  }
}

// Multiplicative order of the unit u modulo the reduced denominators of the
// parameters, matching period() at any prime = u (mod D).
long class_period(const Params2F1& t, long u) {
  long M = 1;
  for (const Rational& x : {t.a, t.b, t.c}) {
    Integer d = x.den();
    M = std::lcm(M, multiplicative_order(mod_floor(Integer(u), d), d));
  }
  return M;
}

std::vector<Rational> distinct_values(const Params2F1& t) {
  std::vector<Rational> vals{t.a, t.b, t.c};
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

Rational density_of(const std::vector<DensityReport::ClassEntry>& classes, long phi) {
  long unbounded = 0;
  for (const auto& e : classes) {
    if (e.verdict == ClassVerdict::EventuallyUnbounded) ++unbounded;
  }
  return Rational(unbounded, phi);
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Unbounded: return "Unbounded";
    case Verdict::BoundedIntegral: return "BoundedIntegral";
    case Verdict::NotGood: return "NotGood";
  }
  throw InternalError("to_string: bad Verdict");
}

const char* to_string(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::EventuallyUnbounded: return "EventuallyUnbounded";
    case ClassVerdict::EventuallyBounded: return "EventuallyBounded";
  }
  throw InternalError("to_string: bad ClassVerdict");
}

PrimeClassification classify_prime(const Params2F1& t, long p) {
  require_admissible(t, "classify_prime");
  if (p < 2 || !is_prime(p)) {
    throw PreconditionError("classify_prime: " + std::to_string(p) + " is not prime");
  }
  HyperParams hp = to_params(t);
  if (!is_good_prime(hp, p)) return PrimeClassification{p, Verdict::NotGood, 0};
  long M = period(hp, p);
  PAdicExpansion ea = expand(t.a - Rational(1), p);
  PAdicExpansion eb = expand(t.b - Rational(1), p);
  PAdicExpansion ec = expand(t.c - Rational(1), p);
  Integer ta = 0, tb = 0, tc = 0, pj = 1;
  for (long j = 1; j <= 2 * M; ++j) {
    size_t i = static_cast<size_t>(j - 1);
    ta += ea.digit(i) * pj;
    tb += eb.digit(i) * pj;
    tc += ec.digit(i) * pj;
    pj *= p;
    if (tc > ta && tc > tb) return PrimeClassification{p, Verdict::Unbounded, j};
  }
  return PrimeClassification{p, Verdict::BoundedIntegral, 0};
}

std::vector<Integer> unbounded_witnesses(const Params2F1& t, long p, long r_max) {
  if (r_max < 0) throw PreconditionError("unbounded_witnesses: negative depth");
  PrimeClassification cls = classify_prime(t, p);
  if (cls.verdict != Verdict::Unbounded) {
    throw PreconditionError("unbounded_witnesses: " + std::to_string(p) +
                            " is not classified Unbounded");
  }
  const long j = cls.witness_index;
  const long M = period(to_params(t), p);
  PAdicExpansion ea = expand(t.a - Rational(1), p);
  PAdicExpansion eb = expand(t.b - Rational(1), p);
  PAdicExpansion ec = expand(t.c - Rational(1), p);
  const size_t top = static_cast<size_t>(j - 1);
  const long ctop = ec.digit(top), atop = ea.digit(top), btop = eb.digit(top);

  // One block of base-p digits; translates of it at stride M stack the carry
  // deficit r+1 times.
  Integer block = 0;
  if (ctop > atop && ctop > btop) {
    // Top digits already separate: the single digit p - c_{j-1} at position
    // j-1 forces a carry for c and none for a or b.
    block = Integer(p - ctop) * pow_int(Integer(p), top);
  } else {
    // Exactly one of a, b ties c at the top (both tying would contradict the
    // minimality of j). Walk down through the tied run; at its lower end c's
    // digit must exceed the tied parameter's.
    if (ctop == atop && ctop == btop) throw InternalError("unbounded_witnesses: double tie");
    const PAdicExpansion& tied = (ctop == atop) ? ea : eb;
    long k = -1;
    for (long i = j - 2; i >= 0; --i) {
      if (ec.digit(static_cast<size_t>(i)) != tied.digit(static_cast<size_t>(i))) {
        k = i + 1;
        break;
      }
    }
    if (k < 1) throw InternalError("unbounded_witnesses: tied digits all the way down");
    if (ec.digit(static_cast<size_t>(k - 1)) <= tied.digit(static_cast<size_t>(k - 1))) {
      throw InternalError("unbounded_witnesses: run bottom does not separate");
    }
    block = Integer(p - ec.digit(static_cast<size_t>(k - 1))) *
            pow_int(Integer(p), static_cast<unsigned long>(k - 1));
    for (long i = k; i <= j - 1; ++i) {
      block += Integer(p - ec.digit(static_cast<size_t>(i)) - 1) *
               pow_int(Integer(p), static_cast<unsigned long>(i));
    }
  }

  std::vector<Integer> out;
  out.reserve(static_cast<size_t>(r_max) + 1);
  Integer m = 0, shift = 1;
  Integer stride = pow_int(Integer(p), static_cast<unsigned long>(M));
  for (long r = 0; r <= r_max; ++r) {
    m += block * shift;
    shift *= stride;
    out.push_back(m);
  }
  return out;
}

PropagationClaim propagate(const Params2F1& t, long p) {
  require_admissible(t, "propagate");
  long D = lcm_denominator(t);
  if (p <= D) {
    throw PreconditionError("propagate: prime " + std::to_string(p) +
                            " is not above the denominator lcm " + std::to_string(D));
  }
  PrimeClassification cls = classify_prime(t, p);
  if (cls.verdict != Verdict::Unbounded) {
    throw PreconditionError("propagate: " + std::to_string(p) + " is classified " +
                            to_string(cls.verdict) + ", nothing to propagate");
  }
  return PropagationClaim{t, p, D};
}

DensityReport density_by_sampling(const Params2F1& t, long search_cap) {
  require_admissible(t, "density_by_sampling");
  const long D = lcm_denominator(t);
  UnitGroup G = unit_group(D);
  std::vector<Rational> vals = distinct_values(t);

  DensityReport rep;
  rep.modulus = D;
  rep.phi = G.order;
  rep.threshold = 0;
  for (long u : G.units) {
    const long M = class_period(t, u);
    // Minimal separation of the parameter fractional parts over one period:
    // any prime beyond its reciprocal keeps distinct truncation digits.
    Rational gap;
    bool first = true;
    Integer w = 1;
    for (long s = 0; s < M; ++s) {
      for (size_t i = 0; i < vals.size(); ++i) {
        for (size_t k = i + 1; k < vals.size(); ++k) {
          Rational diff = (Rational(w) * vals[i]).frac() - (Rational(w) * vals[k]).frac();
          if (diff.sign() < 0) diff = -diff;
          if (first || diff < gap) {
            gap = diff;
            first = false;
          }
        }
      }
      w = mod_floor(w * u, Integer(D));
    }
    if (first || gap.is_zero()) throw InternalError("density_by_sampling: zero separation");
    // Qualifying primes are exactly those above max(D, 1/gap).
    Integer bound_i = gap.den() / gap.num();
    long bound = std::max(D, bound_i.get_si());
    rep.threshold = std::max(rep.threshold, bound);
    long q = least_prime_in_class(u, D, bound, search_cap);
    PrimeClassification cls = classify_prime(t, q);
    if (cls.verdict == Verdict::NotGood) {
      throw InternalError("density_by_sampling: sampled prime above D is not good");
    }
    rep.classes.push_back({u, q,
                           cls.verdict == Verdict::Unbounded ? ClassVerdict::EventuallyUnbounded
                                                             : ClassVerdict::EventuallyBounded});
  }
  rep.density = density_of(rep.classes, rep.phi);
  return rep;
}

DensityReport density_by_group(const Params2F1& t) {
  require_admissible(t, "density_by_group");
  const long D = lcm_denominator(t);
  UnitGroup G = unit_group(D);

  DensityReport rep;
  rep.modulus = D;
  rep.phi = G.order;
  rep.threshold = 0;
  for (long u : G.units) {
    bool unbounded = false;
    Integer w = 1;
    do {
      Rational fa = (Rational(w) * t.a).frac();
      Rational fb = (Rational(w) * t.b).frac();
      Rational fc = (Rational(w) * t.c).frac();
      if (fc < fa && fc < fb) {
        unbounded = true;
        break;
      }
      w = mod_floor(w * u, Integer(D));
    } while (w != 1);
    rep.classes.push_back({u, 0,
                           unbounded ? ClassVerdict::EventuallyUnbounded
                                     : ClassVerdict::EventuallyBounded});
  }
  rep.density = density_of(rep.classes, rep.phi);
  return rep;
}

bool is_finite_monodromy(const Params2F1& t) {
  require_admissible(t, "is_finite_monodromy");
  const long D = lcm_denominator(t);
  for (long u : unit_group(D).units) {
    Rational fa = (Rational(u) * t.a).frac();
    Rational fb = (Rational(u) * t.b).frac();
    Rational fc = (Rational(u) * t.c).frac();
    Rational lo = fa < fb ? fa : fb;
    Rational hi = fa < fb ? fb : fa;
    if (!(lo < fc && fc < hi)) return false;
  }
  return true;
}

std::optional<Rational> is_full_density(const Params2F1& t) {
  require_admissible(t, "is_full_density");
  if (!(t.c < t.a && t.c < t.b)) return std::nullopt;
  Rational ba = Rational(1) / (t.a - t.c);
  Rational bb = Rational(1) / (t.b - t.c);
  return ba < bb ? bb : ba;
}

std::string DensityReport::to_json() const {
  ordered_json j;
  j["D"] = modulus;
  j["phi"] = phi;
  j["classes"] = ordered_json::array();
  for (const auto& e : classes) {
    j["classes"].push_back({{"u", e.u}, {"prime", e.tested_prime}, {"verdict", to_string(e.verdict)}});
  }
  j["density"] = density.str();
  return j.dump(2);
}

std::string DensityReport::to_csv() const {
  std::ostringstream os;
  os << "u,prime,verdict,density\n";
  for (const auto& e : classes) {
    os << e.u << ',' << e.tested_prime << ',' << to_string(e.verdict) << ',' << density.str()
       << '\n';
  }
  return os.str();
}

}  // namespace hypadic
