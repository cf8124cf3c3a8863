#include "qrlab/kernels.hpp"

namespace qrlab::kernels::scalar {

std::uint32_t mod_product(std::span<const std::uint32_t> xs, std::uint32_t p) {
  std::uint64_t acc = 1 % p;
  for (std::uint32_t x : xs) acc = acc * x % p;
  return static_cast<std::uint32_t>(acc);
}

std::vector<std::uint32_t> binomial_transform(std::span<const std::uint32_t> coeffs, std::size_t kmax,
                                              std::uint32_t p) {
  std::vector<std::uint32_t> out(kmax + 1, 0);
  // row[k] = binom(j, k) mod p, advanced one j at a time
  std::vector<std::uint32_t> row(kmax + 1, 0);
  row[0] = 1 % p;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const std::uint64_t c = coeffs[j];
    const std::size_t top = j < kmax ? j : kmax;
    if (c != 0) {
      for (std::size_t k = 0; k <= top; ++k) out[k] = static_cast<std::uint32_t>((out[k] + c * row[k]) % p);
    }
    for (std::size_t k = (j + 1 < kmax ? j + 1 : kmax); k > 0; --k) {
      std::uint32_t s = row[k] + row[k - 1];
      if (s >= p) s -= p;
      row[k] = s;
    }
  }
  return out;
}

}  // namespace qrlab::kernels::scalar
