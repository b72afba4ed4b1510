#pragma once

#include <cstdint>
#include <vector>

#include "jarnik/errors.hpp"

namespace jarnik {

inline constexpr std::uint64_t kDefaultSieveCeiling = 10'000'000;

// Ordered primes p with lo < p < hi (both bounds strict).
// Ranges beyond the ceiling raise capacity_error: prime-denominator
// constructions are limited to sieve scale by design.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi,
                                          std::uint64_t ceiling = kDefaultSieveCeiling);

// Half-open variant: lo <= p < hi.
std::vector<std::uint64_t> primes_from(std::uint64_t lo, std::uint64_t hi,
                                       std::uint64_t ceiling = kDefaultSieveCeiling);

std::uint64_t count_primes_from(std::uint64_t lo, std::uint64_t hi,
                                std::uint64_t ceiling = kDefaultSieveCeiling);

}  // namespace jarnik
