#include <random>

#include "doctest.h"
#include "qrlab/kernels.hpp"
#include "qrlab/modcore.hpp"

using namespace qrlab;

namespace {

std::vector<std::uint32_t> random_residues(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
  return v;
}

// binom(j, k) mod p by Lucas' theorem, independent of the Pascal streaming.
std::uint64_t binom_lucas(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n || k) {
    const std::uint64_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < ki; ++i) {
      num = num * ((ni - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    r = r * num % p * inv_mod(den, p) % p;
    n /= p;
    k /= p;
  }
  return r;
}

}  // namespace

TEST_CASE("scalar kernels against naive oracles") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {3u, 17u, 101u, 65537u}) {
    const auto xs = random_residues(rng, 37, p);
    std::uint64_t prod = 1;
    for (auto x : xs) prod = prod * x % p;
    CHECK(kernels::scalar::mod_product(xs, p) == prod);

    const auto coeffs = random_residues(rng, std::min<std::uint32_t>(p, 40), p);
    const std::size_t kmax = std::min<std::size_t>(coeffs.size() - 1, 25);
    const auto e = kernels::scalar::binomial_transform(coeffs, kmax, p);
    for (std::size_t k = 0; k <= kmax; ++k) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < coeffs.size(); ++j) s = (s + coeffs[j] * binom_lucas(j, k, p)) % p;
      CHECK(e[k] == s);
    }
  }
  CHECK(kernels::scalar::mod_product({}, 7) == 1);
}

TEST_CASE("avx2 kernels match scalar reference bit for bit") {
  if (!kernels::avx2::available()) {
    MESSAGE("AVX2 unavailable; vector variants not exercised");
    return;
  }
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {3u, 5u, 17u, 97u, 10007u, 65537u, 1000003u, 2147483647u}) {
    for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 15u, 16u, 17u, 100u, 1001u}) {
      const auto xs = random_residues(rng, n, p);
      CHECK(kernels::avx2::mod_product(xs, p) == kernels::scalar::mod_product(xs, p));
    }
    // zero factor anywhere kills the product
    auto xs = random_residues(rng, 64, p);
    xs[40] = 0;
    CHECK(kernels::avx2::mod_product(xs, p) == 0);
  }
  for (std::uint32_t p : {3u, 17u, 41u, 257u, 1009u, 65521u, (1u << 20) - 3}) {
    for (std::size_t n : {1u, 2u, 9u, 33u, 300u}) {
      const std::size_t len = std::min<std::size_t>(n, p);
      const auto coeffs = random_residues(rng, len, p);
      for (std::size_t kmax : {0u, 1u, 4u, 7u, 8u, 9u, 31u, 150u}) {
        if (kmax >= p) continue;
        CHECK(kernels::avx2::binomial_transform(coeffs, kmax, p) == kernels::scalar::binomial_transform(coeffs, kmax, p));
      }
    }
  }
}

TEST_CASE("dispatch honours forced ISA") {
  const std::vector<std::uint32_t> xs{1, 2, 4, 8};
  kernels::force_isa(kernels::Isa::Scalar);
  CHECK(kernels::active_isa() == kernels::Isa::Scalar);
  CHECK(kernels::mod_product(xs, 17) == 13);
  kernels::force_isa(kernels::Isa::Avx2);
  CHECK(kernels::active_isa() == kernels::detected_isa());
  CHECK(kernels::mod_product(xs, 17) == 13);
  kernels::force_isa(std::nullopt);
  CHECK(kernels::active_isa() == kernels::detected_isa());
  // even modulus goes to the scalar path
  CHECK(kernels::mod_product(xs, 100) == 64);
}
