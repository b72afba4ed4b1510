#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jarnik/primes.hpp"

using namespace jarnik;

namespace {

bool trial_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("strict bounds") {
  CHECK(primes_between(10, 20) == std::vector<std::uint64_t>{11, 13, 17, 19});
  CHECK(primes_between(2, 3).empty());
  CHECK(primes_between(20, 40) == std::vector<std::uint64_t>{23, 29, 31, 37});
}

TEST_CASE("half-open variant includes the left endpoint") {
  CHECK(primes_from(11, 20) == std::vector<std::uint64_t>{11, 13, 17, 19});
  CHECK(primes_from(2, 3) == std::vector<std::uint64_t>{2});
}

TEST_CASE("pi(100) via strict range above 1") {
  CHECK(primes_between(1, 100).size() == 25);
}

TEST_CASE("agrees with trial division below 1e5") {
  auto ps = primes_from(2, 100000);
  std::size_t idx = 0;
  for (std::uint64_t n = 2; n < 100000; ++n) {
    bool p = trial_is_prime(n);
    if (p) {
      REQUIRE(idx < ps.size());
      CHECK(ps[idx] == n);
      ++idx;
    }
  }
  CHECK(idx == ps.size());
}

TEST_CASE("ceiling produces a capacity error") {
  CHECK_THROWS_AS(primes_from(2, 20'000'001), capacity_error);
  CHECK_NOTHROW(primes_from(9'999'000, 10'000'000));
  // custom ceiling
  CHECK_THROWS_AS(primes_from(2, 1000, 100), capacity_error);
}

TEST_CASE("invalid ranges") {
  CHECK_THROWS_AS(primes_from(1, 10), invariant_error);
  CHECK_THROWS_AS(primes_from(10, 10), invariant_error);
}
