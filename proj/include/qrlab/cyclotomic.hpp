#pragma once

// Gauss sums G(w^{-m}) as elements of Z[zeta_p] with coefficients reduced
// modulo the prime above p (zeta_{p-1} -> g), and their expansions in powers
// of pi = zeta_p - 1. Dividing by pi^r modulo the prime is reading off the
// r-th expansion coefficient once the lower ones vanish.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qrlab/modcore.hpp"

namespace qrlab {

// sum_{j=0}^{p-1} coeffs[j] zeta_p^j with coefficients in F_p.
struct CycIntModP {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> coeffs;
};

// e[k] = sum_j c_j binom(j, k) mod p, so that x = sum_k e[k] pi^k formally.
struct PiAdicExpansion {
  std::uint32_t p = 0;
  std::size_t kmax = 0;
  std::vector<std::uint32_t> e;
};

// G(w^{-m}) = sum_{t=1}^{p-1} w^{-m}(t) zeta_p^t with w^{-m}(g^k) -> g^{-mk}.
// m in [0, p - 1).
CycIntModP gauss_sum_coeffs(const PrimeContext& ctx, std::uint32_t m);

// kmax < p.
PiAdicExpansion pi_expansion(const CycIntModP& x, std::size_t kmax);

struct StickelbergerReport {
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  bool valuation_ok = false;  // e_k = 0 for every k < r
  ModInt unit;                // e_r
  ModInt expected;            // -1 / r!
  bool pass() const { return valuation_ok && unit == expected; }
};

// Evaluates G(w^{-r}) / (zeta_p - 1)^r mod the prime; never throws on a
// mismatch. 0 <= r <= p - 2.
StickelbergerReport stickelberger_evaluate(const PrimeContext& ctx, std::uint32_t r);
// As above, but a failed valuation or unit mismatch raises IdentityViolation.
StickelbergerReport stickelberger_check(const PrimeContext& ctx, std::uint32_t r);

// Default r set per prime: {0, 1, 2, (p-1)/4, (p-1)/2}, deduplicated.
std::vector<std::uint32_t> default_stickelberger_rs(std::uint32_t p);

// Leading coefficients of G(chi)^2 and G(chi^2) J(chi, chi), chi the quartic
// character: (e_r(chi)^2, e_{2r}(chi^2) * J mod p) with r = (p-1)/4. The two
// agree because G(chi)^2 = G(chi^2) J(chi, chi).
std::pair<ModInt, ModInt> gauss_jacobi_consistency(const PrimeContext& ctx, GaussianInt jacobi);

}  // namespace qrlab
