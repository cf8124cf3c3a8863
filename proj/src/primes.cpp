#include "qrlab/primes.hpp"

#include <algorithm>

namespace qrlab {

std::vector<std::uint32_t> odd_primes_in_range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  if (hi < 3 || lo > hi) return out;
  lo = std::max<std::uint32_t>(lo, 3);

  std::uint32_t root = 1;
  while (std::uint64_t{root + 1} * (root + 1) <= hi) ++root;
  std::vector<bool> small_composite(root + 1, false);
  std::vector<std::uint32_t> base;
  for (std::uint32_t i = 2; i <= root; ++i) {
    if (small_composite[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j <= root; j += i) small_composite[j] = true;
  }

  constexpr std::uint32_t kSegment = 1u << 18;
  std::vector<bool> composite;
  for (std::uint64_t seg_lo = lo; seg_lo <= hi; seg_lo += kSegment) {
    const std::uint64_t seg_hi = std::min<std::uint64_t>(hi, seg_lo + kSegment - 1);
    composite.assign(seg_hi - seg_lo + 1, false);
    for (std::uint32_t q : base) {
      std::uint64_t start = std::max<std::uint64_t>(std::uint64_t{q} * q, (seg_lo + q - 1) / q * q);
      for (std::uint64_t j = start; j <= seg_hi; j += q) composite[j - seg_lo] = true;
    }
    for (std::uint64_t n = seg_lo; n <= seg_hi; ++n) {
      if (n % 2 == 1 && !composite[n - seg_lo]) out.push_back(static_cast<std::uint32_t>(n));
    }
  }
  return out;
}

}  // namespace qrlab
