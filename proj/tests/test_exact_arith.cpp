#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hypadic/numtheory.hpp>
#include <hypadic/rational.hpp>

#include <numeric>
#include <random>

using namespace hypadic;

TEST_CASE("rationals are always in canonical form") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-3, -6).str() == "1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(42).is_integer());
  CHECK(Rational(42, 6) == Rational(7));

  std::mt19937_64 rng(20260816);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 100000);
  for (int i = 0; i < 500; ++i) {
    Rational x(num(rng), den(rng));
    Integer g = gcd(x.num(), x.den());
    CHECK(g == 1);
    CHECK(x.den() >= 1);
  }
}

TEST_CASE("zero denominators are rejected at construction") {
  CHECK_THROWS_AS(Rational(1, 0), PreconditionError);
  CHECK_THROWS_AS(Rational(Integer(5), Integer(0)), PreconditionError);
}

TEST_CASE("parse accepts exactly -?digits(/digits)?") {
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-4/6") == Rational(-2, 3));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("-0") == Rational(0));
  CHECK(Rational::parse("22/7") == Rational(22, 7));
  CHECK(Rational::parse("007/003") == Rational(7, 3));

  for (const char* bad : {"", "-", "+5", "1/", "/3", "1//2", " 1", "1 ", "1/ 2", "1/-2", "a",
                          "1.5", "--1", "1/2/3", "0x10"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), PreconditionError);
  }
  CHECK_THROWS_AS(Rational::parse("1/0"), PreconditionError);
}

TEST_CASE("parse round-trips str") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    Rational x(num(rng), den(rng));
    CHECK(Rational::parse(x.str()) == x);
  }
}

TEST_CASE("floor and frac") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-1, 6).frac() == Rational(5, 6));
  CHECK(Rational(9, 4).frac() == Rational(1, 4));
  CHECK(Rational(-3).frac() == Rational(0));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 999);
  for (int i = 0; i < 300; ++i) {
    Rational x(num(rng), den(rng));
    Rational f = x.frac();
    CHECK(Rational(0) <= f);
    CHECK(f < Rational(1));
    CHECK(Rational(x.floor()) + f == x);
  }
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), PreconditionError);
  CHECK(-Rational(2, 5) == Rational(-2, 5));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
}

TEST_CASE("extended integers: +infinity absorbs") {
  ExtInt inf = ExtInt::infinity();
  CHECK(inf.is_infinite());
  CHECK(inf == ExtInt::infinity());
  CHECK(inf != ExtInt(0));
  CHECK(ExtInt(2) + ExtInt(3) == ExtInt(5));
  CHECK((inf + ExtInt(3)).is_infinite());
  CHECK((ExtInt(3) + inf).is_infinite());
  CHECK(inf.str() == "inf");
  CHECK(ExtInt(-4).str() == "-4");
  CHECK_THROWS_AS(inf.value(), InternalError);
}

TEST_CASE("valuation at a prime") {
  CHECK(valuation(Rational(9, 64), 3) == ExtInt(2));
  CHECK(valuation(Rational(9, 64), 2) == ExtInt(-6));
  CHECK(valuation(Rational(-5, 6), 3) == ExtInt(-1));
  CHECK(valuation(Rational(-5, 6), 5) == ExtInt(1));
  CHECK(valuation(Rational(7, 4), 5) == ExtInt(0));
  CHECK(valuation(Rational(0), 5).is_infinite());
  CHECK_THROWS_AS(valuation(Rational(1), 6), PreconditionError);
  CHECK_THROWS_AS(valuation(Rational(1), 1), PreconditionError);
  CHECK_THROWS_AS(valuation(Rational(1), -3), PreconditionError);
}

TEST_CASE("valuation is multiplicative") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> num(1, 100000);
  std::uniform_int_distribution<long> den(1, 100000);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<size_t> pick(0, 4);
  const long primes[] = {2, 3, 5, 7, 11};
  for (int i = 0; i < 400; ++i) {
    Rational x((sign(rng) ? 1 : -1) * num(rng), den(rng));
    Rational y((sign(rng) ? 1 : -1) * num(rng), den(rng));
    long p = primes[pick(rng)];
    CHECK(valuation(x * y, p) == valuation(x, p) + valuation(y, p));
  }
}

TEST_CASE("integer valuation") {
  CHECK(integer_valuation(Integer(40), 2) == 3);
  CHECK(integer_valuation(Integer(40), 5) == 1);
  CHECK(integer_valuation(Integer(-54), 3) == 3);
  CHECK(integer_valuation(Integer(7), 2) == 0);
  CHECK_THROWS_AS(integer_valuation(Integer(0), 2), PreconditionError);
}

TEST_CASE("primality is deterministic at this scale") {
  CHECK(is_prime(2L));
  CHECK(is_prime(3L));
  CHECK_FALSE(is_prime(1L));
  CHECK_FALSE(is_prime(0L));
  CHECK_FALSE(is_prime(-7L));
  CHECK(is_prime(61L));
  CHECK_FALSE(is_prime(63L));
  CHECK(is_prime(104729L));  // 10000th prime
  CHECK_FALSE(is_prime(104729L * 104729L));
  // Mersenne prime 2^61 - 1 and a Carmichael number
  CHECK(is_prime(Integer("2305843009213693951")));
  CHECK_FALSE(is_prime(Integer(561)));
  CHECK_FALSE(is_prime(Integer("2305843009213693951") * 3));

  // cross-check against a sieve up to 10000
  std::vector<bool> composite(10001, false);
  for (long i = 2; i <= 10000; ++i) {
    if (composite[static_cast<size_t>(i)]) continue;
    for (long j = i * i; j <= 10000; j += i) composite[static_cast<size_t>(j)] = true;
  }
  long mismatches = 0;
  for (long n = 2; n <= 10000; ++n) {
    if (is_prime(n) == composite[static_cast<size_t>(n)]) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("multiplicative order") {
  CHECK(multiplicative_order(Integer(7), Integer(5)) == 4);
  CHECK(multiplicative_order(Integer(7), Integer(6)) == 1);
  CHECK(multiplicative_order(Integer(7), Integer(30)) == 4);
  CHECK(multiplicative_order(Integer(2), Integer(7)) == 3);
  CHECK(multiplicative_order(Integer(3), Integer(1)) == 1);
  CHECK(multiplicative_order(Integer(-1), Integer(5)) == 2);
  CHECK_THROWS_AS(multiplicative_order(Integer(6), Integer(10)), PreconditionError);
  CHECK_THROWS_AS(multiplicative_order(Integer(2), Integer(0)), PreconditionError);

  // ord(b) divides phi(m), and b^ord = 1 holds by construction
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> mods(2, 400);
  for (int i = 0; i < 200; ++i) {
    long m = mods(rng);
    UnitGroup g = unit_group(m);
    std::uniform_int_distribution<size_t> pick(0, g.units.size() - 1);
    long b = g.units[pick(rng)];
    long ord = multiplicative_order(Integer(b), Integer(m));
    CHECK(g.order % ord == 0);
    CHECK(mod_floor(pow_int(Integer(b), static_cast<unsigned long>(ord)), Integer(m)) == 1);
  }
}

TEST_CASE("unit group") {
  UnitGroup g15 = unit_group(15);
  CHECK(g15.units == std::vector<long>{1, 2, 4, 7, 8, 11, 13, 14});
  CHECK(g15.order == 8);
  UnitGroup g1 = unit_group(1);
  CHECK(g1.units == std::vector<long>{0});
  CHECK(g1.order == 1);
  CHECK(unit_group(30).order == 8);
  CHECK(unit_group(7).order == 6);
  CHECK_THROWS_AS(unit_group(0), PreconditionError);
}

TEST_CASE("factorial valuation (Legendre)") {
  CHECK(factorial_valuation(Integer(10), 2) == 8);
  CHECK(factorial_valuation(Integer(100), 5) == 24);
  CHECK(factorial_valuation(Integer(0), 7) == 0);
  CHECK(factorial_valuation(Integer(6), 7) == 0);
  CHECK(factorial_valuation(Integer(7), 7) == 1);
  CHECK_THROWS_AS(factorial_valuation(Integer(-1), 2), PreconditionError);

  // against the direct product for small n
  for (long p : {2L, 3L, 5L}) {
    Integer f = 1;
    for (long n = 1; n <= 40; ++n) {
      f *= n;
      CHECK(factorial_valuation(Integer(n), p) == integer_valuation(f, p));
    }
  }
}

TEST_CASE("least prime in a residue class") {
  CHECK(least_prime_in_class(1, 30, 30) == 31);
  CHECK(least_prime_in_class(19, 30, 30) == 79);  // 49 is composite
  CHECK(least_prime_in_class(17, 30, 47) == 107);
  CHECK(least_prime_in_class(0, 1, 13) == 17);
  CHECK_THROWS_AS(least_prime_in_class(3, 30, 30), PreconditionError);       // gcd > 1
  CHECK_THROWS_AS(least_prime_in_class(1, 30, 30, 20), PreconditionError);  // cap too small
}

TEST_CASE("floor-mod and integer powers") {
  CHECK(mod_floor(Integer(-7), Integer(5)) == 3);
  CHECK(mod_floor(Integer(7), Integer(5)) == 2);
  CHECK(mod_floor(Integer(-10), Integer(5)) == 0);
  CHECK(pow_int(Integer(7), 4) == 2401);
  CHECK(pow_int(Integer(5), 0) == 1);
  CHECK(pow_int(Integer(-2), 3) == -8);
}
