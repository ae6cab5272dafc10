#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hypadic/hyper.hpp>

#include <string>

using namespace hypadic;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

const Params2F1 kT532{rat(1, 5), rat(1, 3), rat(1, 2)};   // density 3/8
const Params2F1 kT651{rat(1, 6), rat(5, 6), rat(1, 5)};   // finite monodromy
const Params2F1 kT221{rat(1, 2), rat(1, 2), rat(1)};      // no good primes
const Params2F1 kT235{rat(1, 2), rat(1, 3), rat(1, 5)};   // full density

}  // namespace

TEST_CASE("make_params arity and lower-parameter checks") {
  HyperParams ok = make_params({rat(1, 2), rat(1, 3)}, {rat(1, 5)});
  CHECK(ok.order() == 2);
  CHECK(ok.admissible);
  CHECK(ok.all() == std::vector<Rational>{rat(1, 2), rat(1, 3), rat(1, 5)});

  CHECK_THROWS_AS(make_params({rat(1, 2)}, {rat(1, 5)}), PreconditionError);
  CHECK_THROWS_AS(make_params({}, {}), PreconditionError);
  CHECK_THROWS_AS(make_params({rat(1, 2), rat(1, 3)}, {rat(0)}), PreconditionError);
  CHECK_THROWS_AS(make_params({rat(1, 2), rat(1, 3)}, {rat(-2)}), PreconditionError);

  // integer shifts and parameter collisions only cost admissibility
  CHECK_FALSE(make_params({rat(3, 2), rat(1, 3)}, {rat(1, 5)}).admissible);
  CHECK_FALSE(make_params({rat(1, 2), rat(1, 3)}, {rat(1, 2)}).admissible);
  CHECK_FALSE(make_params({rat(-2), rat(1, 2)}, {rat(1, 3)}).admissible);
  CHECK(make_params({rat(1, 2)}, {}).admissible);  // 1F0
}

TEST_CASE("Gauss triples") {
  CHECK(is_admissible(kT532));
  CHECK(is_admissible(Params2F1{rat(1, 2), rat(1, 2), rat(1, 3)}));  // a = b allowed
  CHECK_FALSE(is_admissible(Params2F1{rat(1, 2), rat(1, 3), rat(1, 2)}));
  CHECK_FALSE(is_admissible(kT221));  // c = 1 on the boundary
  CHECK_FALSE(is_admissible(Params2F1{rat(-1, 6), rat(1, 6), rat(1, 2)}));

  CHECK(lcm_denominator(kT532) == 30);
  CHECK(lcm_denominator(kT651) == 30);
  CHECK(lcm_denominator(kT221) == 2);
  CHECK(to_params(kT532).order() == 2);
}

TEST_CASE("good primes and the formula hypothesis") {
  HyperParams t = to_params(kT532);
  CHECK(is_good_prime(t, 7));
  CHECK(is_good_prime(t, 11));
  CHECK_FALSE(is_good_prime(t, 2));
  CHECK_FALSE(is_good_prime(t, 3));
  CHECK_FALSE(is_good_prime(t, 5));

  // c = 1 makes c - 1 = 0, never a unit: no prime is good
  HyperParams u = to_params(kT221);
  for (long p : {2L, 3L, 5L, 7L, 11L, 97L}) CHECK_FALSE(is_good_prime(u, p));
  // but the valuation formula still applies at every odd prime
  CHECK(valuation_formula_applies(u, 3));
  CHECK(valuation_formula_applies(u, 97));
  CHECK_FALSE(valuation_formula_applies(u, 2));
  CHECK(valuation_formula_applies(t, 7));
  CHECK_FALSE(valuation_formula_applies(t, 5));
}

TEST_CASE("period at a good prime") {
  HyperParams t = to_params(kT532);
  CHECK(period(t, 7) == 4);
  CHECK(period(t, 11) == 2);
  CHECK(period(t, 13) == 4);
  CHECK_THROWS_AS(period(t, 5), PreconditionError);
}

TEST_CASE("coefficient oracle") {
  std::vector<Rational> a = coefficient_oracle(to_params(kT221), 2);
  CHECK(a[0] == rat(1));
  CHECK(a[1] == rat(1, 4));
  CHECK(a[2] == rat(9, 64));

  CHECK(coefficient_oracle(to_params(kT651), 1)[1] == rat(25, 36));
  CHECK(coefficient_oracle(to_params(kT532), 1)[1] == rat(2, 15));

  // a terminating series: upper parameter -2 zeroes everything past m = 2
  HyperParams term = make_params({rat(-2), rat(1, 2)}, {rat(1, 3)});
  std::vector<Rational> c = coefficient_oracle(term, 5);
  CHECK_FALSE(c[2].is_zero());
  CHECK(c[3].is_zero());
  CHECK(c[5].is_zero());

  CHECK_THROWS_AS(coefficient_oracle(to_params(kT532), -1), PreconditionError);
}

TEST_CASE("carry-sum valuations match the oracle") {
  const Params2F1 triples[] = {kT532, kT651, kT221, kT235};
  for (const Params2F1& t : triples) {
    HyperParams hp = to_params(t);
    std::vector<Rational> coeffs = coefficient_oracle(hp, 300);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
      if (!valuation_formula_applies(hp, p)) continue;
      CoeffValuation cv(hp, p);
      for (long m = 0; m <= 300; ++m) {
        long fast = cv.at(Integer(m));
        ExtInt slow = valuation(coeffs[static_cast<size_t>(m)], p);
        CAPTURE(t.a.str());
        CAPTURE(p);
        CAPTURE(m);
        CHECK(ExtInt(fast) == slow);
      }
    }
  }
}

TEST_CASE("valuations repeat with period p^M") {
  const Params2F1 triples[] = {kT532, kT651};
  for (const Params2F1& t : triples) {
    HyperParams hp = to_params(t);
    for (long p : {7L, 11L, 13L}) {
      long M = period(hp, p);
      Integer pm = pow_int(Integer(p), static_cast<unsigned long>(M));
      CoeffValuation cv(hp, p);
      for (long m = 0; m <= 100; ++m) {
        CHECK(cv.at(Integer(m) * pm) == cv.at(Integer(m)));
      }
    }
  }
}

TEST_CASE("coefficient valuation preconditions") {
  CHECK_THROWS_AS(CoeffValuation(to_params(kT532), 5), PreconditionError);
  CoeffValuation cv(to_params(kT532), 7);
  CHECK(cv.prime() == 7);
  CHECK_THROWS_AS(cv.at(Integer(-1)), PreconditionError);

  // terminating series: the valuation of a vanished coefficient is refused
  HyperParams term = make_params({rat(-2), rat(1, 2)}, {rat(1, 3)});
  CoeffValuation tv(term, 7);
  CHECK(tv.at(Integer(2)) == 0);
  CHECK_THROWS_AS(tv.at(Integer(3)), PreconditionError);
}

TEST_CASE("valuation profile serialization") {
  ValuationProfile prof = valuation_profile(to_params(kT221), 3, 4);
  CHECK(prof.prime == 3);
  CHECK(prof.entries.size() == 5);
  CHECK(prof.to_csv() == "m,v\n0,0\n1,0\n2,2\n3,0\n4,0\n");
  CHECK(prof.to_json() == "[[0,0],[1,0],[2,2],[3,0],[4,0]]");
}

TEST_CASE("sup witnesses") {
  SupWitness w = sup_witness(to_params(kT532), 7, 1);
  CHECK(w.index == 2400);
  CHECK(w.valuation == 4);

  SupWitness w2 = sup_witness(to_params(kT532), 11, 1);
  CHECK(w2.index == 120);
  CHECK(w2.valuation == 2);

  SupWitness w3 = sup_witness(to_params(kT532), 11, 2);
  CHECK(w3.index == 14519);  // 11^4 - 11^2 - 1
  CHECK(w3.valuation == 4);

  // v = M*r grows without bound along r
  HyperParams hp = to_params(kT651);
  long M = period(hp, 7);
  for (long r = 1; r <= 4; ++r) {
    CHECK(sup_witness(hp, 7, r).valuation == M * r);
  }

  CHECK_THROWS_AS(sup_witness(to_params(kT532), 7, 0), PreconditionError);
  CHECK_THROWS_AS(sup_witness(to_params(kT532), 5, 1), PreconditionError);
  CHECK_THROWS_AS(sup_witness(make_params({rat(3, 2), rat(1, 3)}, {rat(1, 5)}), 7, 1),
                  PreconditionError);
}

TEST_CASE("fractional-part normalization") {
  Params2F1 n1 = normalize_shift(rat(-1, 6), rat(1, 6), rat(1, 2));
  CHECK(n1.a == rat(5, 6));
  CHECK(n1.b == rat(1, 6));
  CHECK(n1.c == rat(1, 2));

  Params2F1 n2 = normalize_shift(rat(6, 5), rat(4, 3), rat(5, 2));
  CHECK(n2.a == rat(1, 5));
  CHECK(n2.b == rat(1, 3));
  CHECK(n2.c == rat(1, 2));

  Params2F1 n3 = normalize_shift(rat(7, 6), rat(5, 6), rat(6, 5));
  CHECK(n3.a == rat(1, 6));
  CHECK(n3.b == rat(5, 6));
  CHECK(n3.c == rat(1, 5));

  CHECK(is_admissible(n1));
  CHECK(is_admissible(n2));
  CHECK(is_admissible(n3));

  // each fatal integrality is named
  auto message = [](const Rational& a, const Rational& b, const Rational& c) {
    try {
      normalize_shift(a, b, c);
    } catch (const PreconditionError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(rat(2), rat(1, 3), rat(1, 2)).find("a = 2") != std::string::npos);
  CHECK(message(rat(1, 2), rat(1, 3), rat(2)).find("c = 2") != std::string::npos);
  CHECK(message(rat(3, 2), rat(1, 3), rat(1, 2)).find("a - c = 1") != std::string::npos);
  CHECK(message(rat(1, 5), rat(4, 3), rat(1, 3)).find("b - c = 1") != std::string::npos);
  std::string all = message(rat(1), rat(2), rat(3));
  CHECK(all.find("a = 1") != std::string::npos);
  CHECK(all.find("b = 2") != std::string::npos);
  CHECK(all.find("c = 3") != std::string::npos);
}
