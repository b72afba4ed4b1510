#include "jarnik/primes.hpp"

#include <cmath>
#include <string>

namespace jarnik {

namespace {

std::uint64_t isqrt64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint64_t> base_primes(std::uint64_t limit) {
  std::vector<char> mark(limit + 1, 1);
  if (limit >= 0) mark[0] = 0;
  if (limit >= 1) mark[1] = 0;
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (mark[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) mark[j] = 0;
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (mark[i]) primes.push_back(i);
  return primes;
}

// Segment [low, high], inclusive.
std::vector<char> sieve_segment(std::uint64_t low, std::uint64_t high) {
  std::vector<char> is_prime(high - low + 1, 1);
  if (low == 0) is_prime[0] = 0;
  if (low <= 1 && high >= 1) is_prime[1 - low] = 0;
  for (std::uint64_t p : base_primes(isqrt64(high))) {
    std::uint64_t start = ((low + p - 1) / p) * p;
    if (start < 2 * p) start = 2 * p;
    for (std::uint64_t j = start; j <= high; j += p) is_prime[j - low] = 0;
  }
  return is_prime;
}

void check_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t ceiling) {
  if (lo < 2 || lo >= hi) throw invariant_error("primes: need 2 <= lo < hi");
  if (hi > ceiling)
    throw capacity_error("primes: range end " + std::to_string(hi) +
                         " exceeds sieve ceiling " + std::to_string(ceiling));
}

}  // namespace

std::vector<std::uint64_t> primes_from(std::uint64_t lo, std::uint64_t hi,
                                       std::uint64_t ceiling) {
  check_range(lo, hi, ceiling);
  auto seg = sieve_segment(lo, hi - 1);
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = lo; v < hi; ++v)
    if (seg[v - lo]) out.push_back(v);
  return out;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi,
                                          std::uint64_t ceiling) {
  if (lo < 1 || lo >= hi) throw invariant_error("primes: need 1 <= lo < hi");
  if (lo + 1 == hi) return {};  // open interval is empty
  return primes_from(lo + 1, hi, ceiling);
}

std::uint64_t count_primes_from(std::uint64_t lo, std::uint64_t hi, std::uint64_t ceiling) {
  return primes_from(lo, hi, ceiling).size();
}

}  // namespace jarnik
