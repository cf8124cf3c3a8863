#pragma once

#include <cstdint>
#include <vector>

namespace qrlab {

// Odd primes in [lo, hi], ascending. Segmented sieve of Eratosthenes.
std::vector<std::uint32_t> odd_primes_in_range(std::uint32_t lo, std::uint32_t hi);

}  // namespace qrlab
