#pragma once

// Data-parallel mod-p inner loops. Each kernel has a scalar reference
// implementation and an AVX2 variant; the dispatcher picks one at runtime
// from the CPU's capabilities. The variants are required to agree bit for
// bit (see tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qrlab::kernels {

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa);

Isa detected_isa();
Isa active_isa();
// Pin dispatch to one variant (nullopt restores auto-detection). Requesting
// an ISA the CPU lacks falls back to scalar.
void force_isa(std::optional<Isa> isa);

// Product of xs mod p. Requires p odd, every x < p.
std::uint32_t mod_product(std::span<const std::uint32_t> xs, std::uint32_t p);

// e_k = sum_j coeffs[j] * binom(j, k) mod p for k in [0, kmax]: the
// coefficients of sum_j c_j (1 + t)^j in powers of t.
std::vector<std::uint32_t> binomial_transform(std::span<const std::uint32_t> coeffs, std::size_t kmax,
                                              std::uint32_t p);

namespace scalar {
std::uint32_t mod_product(std::span<const std::uint32_t> xs, std::uint32_t p);
std::vector<std::uint32_t> binomial_transform(std::span<const std::uint32_t> coeffs, std::size_t kmax,
                                              std::uint32_t p);
}  // namespace scalar

namespace avx2 {
// Largest modulus each vector kernel accepts; the dispatcher routes larger
// moduli to the scalar path.
inline constexpr std::uint32_t kMaxProductModulus = 1u << 31;
inline constexpr std::uint32_t kMaxTransformModulus = 1u << 20;

bool available();
std::uint32_t mod_product(std::span<const std::uint32_t> xs, std::uint32_t p);
std::vector<std::uint32_t> binomial_transform(std::span<const std::uint32_t> coeffs, std::size_t kmax,
                                              std::uint32_t p);
}  // namespace avx2

}  // namespace qrlab::kernels
