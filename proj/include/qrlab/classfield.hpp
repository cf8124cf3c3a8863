#pragma once

// Invariants of Q(sqrt(p)) and Q(sqrt(-p)) for an odd prime p, and the sums
// of quadratic residues / non-residues below p/2 that they control.

#include <gmpxx.h>

#include <cstdint>

#include "qrlab/bigfloat.hpp"
#include "qrlab/modcore.hpp"

namespace qrlab {

inline constexpr mpfr_prec_t kDefaultClassNumberPrecision = 128;

// eps = (u + v sqrt(p)) / 2 > 1, the fundamental unit of Q(sqrt(p)).
struct RealQuadData {
  std::uint32_t p = 0;
  mpz_class u;
  mpz_class v;
  // u^2 - p v^2 = 4 * norm
  int norm = 0;
  std::uint64_t h = 0;
  BigFloat regulator{64};
};

struct ImagQuadData {
  std::uint32_t p = 0;
  std::uint64_t h = 0;
};

struct LValueData {
  std::uint32_t p = 0;
  mpq_class b2chi;    // generalized Bernoulli number B_{2,chi}
  mpq_class lminus1;  // L(-1, chi) = -B_{2,chi} / 2
};

struct ResidueSums {
  std::uint32_t p = 0;
  std::uint64_t residues = 0;      // A_p
  std::uint64_t nonresidues = 0;   // B_p
};

struct UnitCongruence {
  ModInt a_p;       // constant term of eps^h, reduced mod p
  ModInt b_p;       // coefficient of sqrt(p), reduced mod p
  ModInt expected;  // -((p-1)/2)! mod p
};

// (u, v, norm) only, from the continued fraction of (1 + sqrt(p)) / 2; the
// first convergent A/B with A^2 - AB - B^2 (p-1)/4 = +-1 gives
// eps = (2A - B + B sqrt(p)) / 2. p = 1 mod 4.
RealQuadData fundamental_unit_only(std::uint32_t p);

// Fundamental unit with regulator and class number filled in.
RealQuadData fundamental_unit(std::uint32_t p, mpfr_prec_t prec = kDefaultClassNumberPrecision);

// h(p) from the analytic class number formula
//   2 h log(eps) = -sum_{a=1}^{p-1} chi(a) log(2 sin(pi a / p)),
// requiring the quotient to lie within 1e-6 of an integer; precision is
// doubled (up to three times) before giving up with a Precision error.
std::uint64_t class_number_real(std::uint32_t p, mpfr_prec_t prec = kDefaultClassNumberPrecision);
std::uint64_t class_number_real(const RealQuadData& unit, mpfr_prec_t prec = kDefaultClassNumberPrecision);

// h(-p) = (R - N) / (2 - (2/p)), R and N counting residues and non-residues
// in (0, p/2). p = 3 mod 4; h(-3) = 1 is returned directly.
std::uint64_t class_number_imag(std::uint32_t p);

LValueData l_minus_one(std::uint32_t p);

ResidueSums residue_sums(std::uint32_t p);

// A_p from its closed form in the residue class of p mod 8; throws
// IdentityViolation if the closed form is not an integer. p > 3.
std::int64_t a_p_closed_form(std::uint32_t p);

// Expected A_p - B_p: 0 (p = 7 mod 8), p h(-p) (p = 3 mod 8), or
// 2 (1 - chi(2)/4) L(-1, chi) (p = 1 mod 4).
mpq_class a_minus_b_expected(std::uint32_t p);

// eps^h = a_p + b_p sqrt(p), computed in F_p[s]/(s^2 - p) where s is
// nilpotent, so no giant integers are formed.
UnitCongruence unit_congruence_check(const RealQuadData& unit);
UnitCongruence unit_congruence_check(std::uint32_t p);

}  // namespace qrlab
