#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jarnik/interval.hpp"
#include "jarnik/rational.hpp"

using namespace jarnik;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-1000000, 1000000);
  std::uniform_int_distribution<long long> den(1, 1000000);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace

TEST_CASE("lowest terms and positive denominator") {
  Rational r(BigInt(-4), BigInt(-6));
  CHECK(r.num() == 2);
  CHECK(r.den() == 3);
  Rational z(BigInt(0), BigInt(-7));
  CHECK(z.num() == 0);
  CHECK(z.den() == 1);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("parse and print round-trip") {
  CHECK(Rational::parse("3").str() == "3/1");
  CHECK(Rational::parse("-21/14").str() == "-3/2");
  CHECK(Rational::parse(Rational(BigInt(7), BigInt(16)).str()) == Rational(BigInt(7), BigInt(16)));
  CHECK_THROWS_AS(Rational::parse("x/2"), std::domain_error);
}

TEST_CASE("randomized field identities") {
  std::mt19937_64 rng(20240901);
  for (int i = 0; i < 300; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("comparisons are exact cross-multiplications") {
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(34), BigInt(100)));
  CHECK(Rational(BigInt(-1), BigInt(2)) < Rational(BigInt(1), BigInt(1000000)));
  Rational big(BigInt("123456789123456789123456789"), BigInt("987654321987654321"));
  CHECK(big > Rational(BigInt(124999998)));
  CHECK(big < Rational(BigInt(124999999)));
}

TEST_CASE("floor ceil for negatives") {
  CHECK(Rational(BigInt(-7), BigInt(2)).floor() == -4);
  CHECK(Rational(BigInt(-7), BigInt(2)).ceil() == -3);
  CHECK(Rational(BigInt(7), BigInt(2)).floor() == 3);
  CHECK(Rational(BigInt(6), BigInt(2)).floor() == 3);
  CHECK(mod_floor(BigInt(-7), BigInt(3)) == 2);
}

TEST_CASE("pow_int handles negative exponents") {
  CHECK(pow_int(Rational(BigInt(2), BigInt(3)), 3) == Rational(BigInt(8), BigInt(27)));
  CHECK(pow_int(Rational(BigInt(2), BigInt(3)), -2) == Rational(BigInt(9), BigInt(4)));
  CHECK(pow_int(Rational(5), 0) == Rational(1));
  CHECK(pow2(-3) == Rational(BigInt(1), BigInt(8)));
}

TEST_CASE("interval gap") {
  Interval a{Rational(0), Rational(BigInt(1), BigInt(4))};
  Interval b{Rational(BigInt(1), BigInt(2)), Rational(BigInt(3), BigInt(4))};
  CHECK(gap(a, b) == Rational(BigInt(1), BigInt(4)));
  CHECK(gap(b, a) == Rational(BigInt(1), BigInt(4)));

  Interval c{Rational(0), Rational(BigInt(1), BigInt(2))};
  Interval d{Rational(BigInt(1), BigInt(2)), Rational(1)};
  CHECK(gap(c, d) == Rational(0));

  Interval e{Rational(0), Rational(BigInt(2), BigInt(3))};
  CHECK_THROWS_AS(gap(e, d), invariant_error);
}

TEST_CASE("union normalization merges touching pieces") {
  std::vector<Interval> v{
      {Rational(BigInt(1), BigInt(2)), Rational(BigInt(3), BigInt(4))},
      {Rational(0), Rational(BigInt(1), BigInt(4))},
      {Rational(BigInt(1), BigInt(4)), Rational(BigInt(1), BigInt(2))},
  };
  auto u = normalize_union(v);
  REQUIRE(u.size() == 1);
  CHECK(u[0] == Interval{Rational(0), Rational(BigInt(3), BigInt(4))});
}
