#pragma once

// p = a^2 + 16 b^2, the quartic character chi with chi(g) = -i, its Jacobi
// sum J(chi, chi) = a + 4bi, and the sign constant C_p.

#include <cstdint>
#include <utility>
#include <vector>

#include "qrlab/modcore.hpp"

namespace qrlab {

struct QuarticDecomposition {
  std::uint32_t p = 0;
  std::int64_t a = 0;       // a = 3 mod 4
  std::uint64_t b_abs = 0;  // |b|
};

// Cornacchia on p = x^2 + y^2 seeded with sqrt(-1) mod p. p = 1 mod 8.
QuarticDecomposition decompose(std::uint32_t p);
// Same result by trial over b; used to cross-check decompose().
QuarticDecomposition decompose_exhaustive(std::uint32_t p);

// chi(g^k) = (-i)^k, stored as k mod 4 per residue.
class QuarticCharacter {
 public:
  explicit QuarticCharacter(const PrimeContext& ctx);

  const PrimeContext& context() const { return ctx_; }
  // k mod 4 with t = g^k; t must be nonzero mod p.
  std::uint8_t exponent(std::uint32_t t) const { return exponents_[t]; }
  // chi(t) as a Gaussian integer; 0 for t = 0.
  GaussianInt value(std::uint32_t t) const;

 private:
  PrimeContext ctx_;
  std::vector<std::uint8_t> exponents_;
};

// sum_t chi(t) chi(1 - t), exactly. Needs p = 1 mod 4.
GaussianInt jacobi_sum(const PrimeContext& ctx);
GaussianInt jacobi_sum(const QuarticCharacter& chi);

// (J mod p via i -> g^{(p-1)/4},  -((p-1)/2)! / ((p-1)/4)!^2 mod p)
std::pair<ModInt, ModInt> jacobi_congruence_check(const PrimeContext& ctx);
std::pair<ModInt, ModInt> jacobi_congruence_check(const PrimeContext& ctx, GaussianInt j);

// 4 |b| a^{-1} ((p-1)/2)! mod p, before the +-1 assertion.
ModInt c_sign_value(const PrimeContext& ctx, const QuarticDecomposition& dec);
// C_p in {+1, -1}; IdentityViolation if the defining value is not +-1.
int c_sign(const PrimeContext& ctx, const QuarticDecomposition& dec);
int c_sign(std::uint32_t p);

// (b even, 2 is a fourth power mod p)
std::pair<bool, bool> two_is_fourth_power(std::uint32_t p);

}  // namespace qrlab
