#pragma once

// High-precision complex evaluation of Gauss sums and products of roots of
// unity, compared against their closed forms. Every routine takes its
// precision in bits as an argument.

#include <cstdint>
#include <vector>

#include "qrlab/bigfloat.hpp"
#include "qrlab/classfield.hpp"
#include "qrlab/modcore.hpp"
#include "qrlab/quartic.hpp"

namespace qrlab {

inline constexpr mpfr_prec_t kDefaultPrecision = 256;
// Extra working bits carried beyond the requested precision.
inline constexpr mpfr_prec_t kGuardBits = 32;

// zeta_p^j for j in [0, p), from one evaluation of exp(2 pi i / p) and
// repeated multiplication, renormalized to |z| = 1 every 64 steps.
class RootTable {
 public:
  RootTable(std::uint32_t p, mpfr_prec_t prec);

  std::uint32_t p() const { return p_; }
  const BigComplex& operator[](std::uint64_t j) const { return roots_[j % p_]; }

 private:
  std::uint32_t p_;
  std::vector<BigComplex> roots_;
};

struct NumericCheck {
  BigComplex computed;
  BigComplex expected;
  BigFloat residual;  // |computed - expected|

  // residual < 2^{-bits} * sqrt(p)
  bool within(int bits, std::uint32_t p) const;
};

// tau_p = sum (k/p) zeta^k against sqrt((-1)^{(p-1)/2} p).
NumericCheck quadratic_gauss_sum_check(std::uint32_t p, mpfr_prec_t prec = kDefaultPrecision);

// G(chi) against C_p (|b|/|a|) (-1)^b p^{1/4} J^{1/2} with Re J^{1/2} > 0.
// p = 1 mod 8.
NumericCheck quartic_gauss_sum_check(const PrimeContext& ctx, mpfr_prec_t prec = kDefaultPrecision);

// W_p = prod over quadratic residues 0 < x < p/2 of (1 - zeta^{2x}).
BigComplex w_product(std::uint32_t p, mpfr_prec_t prec = kDefaultPrecision);

struct ClosedFormWp {
  std::uint32_t branch = 0;  // p mod 8, 1 or 5
  int sign = 0;
  std::int64_t zeta_exponent = 0;  // = A_p
  std::uint64_t h = 0;
  bool i_factor = false;
  int eps_exponent_sign = 0;  // eps^{-h/2} (branch 1) or eps^{h/2} (branch 5)

  BigComplex evaluate(const RealQuadData& unit, mpfr_prec_t prec) const;
};

ClosedFormWp closed_form_wp(std::uint32_t p, const RealQuadData& unit);

struct WpClosedFormResult {
  NumericCheck closed_form;  // W_p against its explicit value
  BigFloat modulus_residual;  // | |W_p|^2 - sqrt(p) eps^{-(2/p) h} |
};

WpClosedFormResult wp_closed_form_check(std::uint32_t p, const RealQuadData& unit, mpfr_prec_t prec = kDefaultPrecision);
WpClosedFormResult wp_closed_form_check(std::uint32_t p, mpfr_prec_t prec = kDefaultPrecision);

// prod_{k=1}^{(p-1)/2} (1 - zeta^{k^2}) against sqrt(p) eps^{-h(p)} (p = 1
// mod 4) or (-1)^{(h(-p)+1)/2} i sqrt(p) (p = 3 mod 4). p > 3.
NumericCheck square_product_check(std::uint32_t p, mpfr_prec_t prec = kDefaultPrecision);

// Pairwise sums prod_{0<j<k<p/2} (zeta^{j^2} + zeta^{k^2}); p = 1 mod 4.
// computed = sign * product with sign = (-1)^{#{1 <= k < p/4 : (k/p) = -1}},
// expected = 1 (p = 1 mod 8) or eps^{-h} (p = 5 mod 8). Precision is raised
// to cover the O(p^2) factors.
NumericCheck pairwise_sum_product_check(std::uint32_t p, mpfr_prec_t prec = kDefaultPrecision);
mpfr_prec_t pairwise_sum_precision(std::uint32_t p, mpfr_prec_t prec);

// eps^{e/2} as a positive real.
BigFloat unit_half_power(const RealQuadData& unit, long e, mpfr_prec_t prec);

}  // namespace qrlab
