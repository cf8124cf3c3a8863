#include "qrlab/analytic.hpp"

#include <bit>
#include <string>

#include "qrlab/error.hpp"

namespace qrlab {

namespace {

BigFloat sqrt_of(std::uint32_t p, mpfr_prec_t prec) { return sqrt(BigFloat(static_cast<long>(p), prec)); }

BigComplex scale(const BigComplex& z, long s) {
  return s >= 0 ? z : -z;
}

NumericCheck make_check(BigComplex computed, BigComplex expected) {
  BigFloat residual = (computed - expected).abs();
  return {std::move(computed), std::move(expected), std::move(residual)};
}

}  // namespace

RootTable::RootTable(std::uint32_t p, mpfr_prec_t prec) : p_(p) {
  const mpfr_prec_t work = prec + kGuardBits;
  const BigFloat theta = BigFloat::pi(work) * BigFloat(2, work) / BigFloat(static_cast<long>(p), work);
  const BigComplex zeta = BigComplex::polar_unit(theta);
  roots_.reserve(p);
  roots_.push_back(BigComplex::from_int(1, 0, work));
  for (std::uint32_t j = 1; j < p; ++j) {
    BigComplex next = roots_.back() * zeta;
    if (j % 64 == 0) {
      const BigFloat inv = BigFloat(1, work) / next.abs();
      next = next * inv;
    }
    roots_.push_back(std::move(next));
  }
}

bool NumericCheck::within(int bits, std::uint32_t p) const {
  const BigFloat bound = BigFloat::pow2(-bits, residual.precision()) * sqrt_of(p, residual.precision());
  return residual < bound;
}

NumericCheck quadratic_gauss_sum_check(std::uint32_t p, mpfr_prec_t prec) {
  require_odd_prime(p);
  const RootTable zeta(p, prec);
  const auto chi = legendre_table(p);
  const mpfr_prec_t work = prec + kGuardBits;
  BigComplex sum(work);
  for (std::uint32_t k = 1; k < p; ++k) {
    if (chi[k] > 0) {
      sum += zeta[k];
    } else {
      sum += -zeta[k];
    }
  }
  const BigFloat root = sqrt_of(p, work);
  BigComplex expected = p % 4 == 1 ? BigComplex(root, BigFloat(work)) : BigComplex(BigFloat(work), root);
  return make_check(std::move(sum), std::move(expected));
}

NumericCheck quartic_gauss_sum_check(const PrimeContext& ctx, mpfr_prec_t prec) {
  const std::uint32_t p = ctx.p();
  if (p % 8 != 1) fail(ErrorKind::UnsupportedResidueClass, "quartic Gauss sum formula needs p = 1 mod 8");
  const mpfr_prec_t work = prec + kGuardBits;
  const RootTable zeta(p, prec);
  const QuarticCharacter chi(ctx);
  BigComplex g(work);
  for (std::uint32_t t = 1; t < p; ++t) {
    switch (chi.exponent(t)) {
      case 0: g += zeta[t]; break;
      case 1: g += -zeta[t].mul_i(); break;
      case 2: g += -zeta[t]; break;
      default: g += zeta[t].mul_i(); break;
    }
  }

  const GaussianInt j = jacobi_sum(chi);
  const QuarticDecomposition dec = decompose(p);
  if (j.re == 0) fail(ErrorKind::Internal, "Re J = 0 at p=" + std::to_string(p));
  const int cp = c_sign(ctx, dec);
  const int sym = jacobi(static_cast<std::int64_t>(dec.b_abs), static_cast<std::uint64_t>(dec.a < 0 ? -dec.a : dec.a));
  const int parity = dec.b_abs % 2 == 0 ? 1 : -1;
  const BigComplex j_root = BigComplex::from_int(j.re, j.im, work).sqrt();
  const BigFloat fourth_root = root(BigFloat(static_cast<long>(p), work), 4);
  BigComplex rhs = scale(j_root * fourth_root, cp * sym * parity);
  return make_check(std::move(g), std::move(rhs));
}

BigComplex w_product(std::uint32_t p, mpfr_prec_t prec) {
  require_odd_prime(p);
  if (p % 4 != 1) fail(ErrorKind::UnsupportedResidueClass, "W_p needs p = 1 mod 4");
  const RootTable zeta(p, prec);
  const auto chi = legendre_table(p);
  const mpfr_prec_t work = prec + kGuardBits;
  const BigComplex one = BigComplex::from_int(1, 0, work);
  BigComplex w = one;
  for (std::uint32_t x = 1; 2 * x < p; ++x) {
    if (chi[x] > 0) w *= one - zeta[2 * x];
  }
  return w;
}

BigFloat unit_half_power(const RealQuadData& unit, long e, mpfr_prec_t prec) {
  const BigFloat eps =
      (BigFloat(unit.u, prec) + BigFloat(unit.v, prec) * sqrt_of(unit.p, prec)) * BigFloat::pow2(-1, prec);
  const BigFloat half = sqrt(eps);
  BigFloat r(prec);
  mpfr_pow_si(r.get(), half.get(), e, MPFR_RNDN);
  return r;
}

ClosedFormWp closed_form_wp(std::uint32_t p, const RealQuadData& unit) {
  if (p % 4 != 1) fail(ErrorKind::UnsupportedResidueClass, "W_p closed form needs p = 1 mod 4");
  ClosedFormWp cf;
  cf.branch = p % 8;
  const long floor8 = p / 8;
  cf.h = unit.h;
  // (p^2 - 1 + c L(-1, chi)) / 16 with c = 12 or 20
  const mpq_class lval = l_minus_one(p).lminus1;
  mpq_class exponent = (mpq_class(mpz_class(p) * p - 1) + (cf.branch == 1 ? 12 : 20) * lval) / 16;
  exponent.canonicalize();
  if (exponent.get_den() != 1) {
    fail(ErrorKind::IdentityViolation, "zeta exponent of W_" + std::to_string(p) + " is " + exponent.get_str());
  }
  cf.zeta_exponent = exponent.get_num().get_si();
  if (cf.branch == 1) {
    cf.sign = floor8 % 2 == 0 ? 1 : -1;
    cf.i_factor = false;
    cf.eps_exponent_sign = -1;
  } else {
    cf.sign = (1 + floor8) % 2 == 0 ? 1 : -1;
    cf.i_factor = true;
    cf.eps_exponent_sign = 1;
  }
  return cf;
}

BigComplex ClosedFormWp::evaluate(const RealQuadData& unit, mpfr_prec_t prec) const {
  const mpfr_prec_t work = prec + kGuardBits;
  const std::uint32_t p = unit.p;
  const std::int64_t e = ((zeta_exponent % p) + p) % p;
  const BigFloat theta =
      BigFloat::pi(work) * BigFloat(2 * e, work) / BigFloat(static_cast<long>(p), work);
  BigComplex z = BigComplex::polar_unit(theta);
  const BigFloat magnitude =
      root(BigFloat(static_cast<long>(p), work), 4) * unit_half_power(unit, eps_exponent_sign * static_cast<long>(h), work);
  z = z * magnitude;
  if (i_factor) z = z.mul_i();
  return scale(z, sign);
}

WpClosedFormResult wp_closed_form_check(std::uint32_t p, const RealQuadData& unit, mpfr_prec_t prec) {
  const mpfr_prec_t work = prec + kGuardBits;
  BigComplex w = w_product(p, prec);
  BigComplex cf = closed_form_wp(p, unit).evaluate(unit, prec);
  const BigFloat modulus_sq = w.norm();
  const long chi2 = legendre(2, p);
  const BigFloat expected_sq = sqrt_of(p, work) * unit_half_power(unit, -2 * chi2 * static_cast<long>(unit.h), work);
  BigFloat mod_residual = abs(modulus_sq - expected_sq);
  return {make_check(std::move(w), std::move(cf)), std::move(mod_residual)};
}

WpClosedFormResult wp_closed_form_check(std::uint32_t p, mpfr_prec_t prec) { return wp_closed_form_check(p, fundamental_unit(p), prec); }

NumericCheck square_product_check(std::uint32_t p, mpfr_prec_t prec) {
  require_odd_prime(p);
  if (p <= 3) fail(ErrorKind::InvalidArgument, "product over squares needs p > 3");
  const mpfr_prec_t work = prec + kGuardBits;
  const RootTable zeta(p, prec);
  const BigComplex one = BigComplex::from_int(1, 0, work);
  BigComplex prod = one;
  for (std::uint64_t k = 1; 2 * k < p; ++k) prod *= one - zeta[k * k % p];

  const BigFloat root = sqrt_of(p, work);
  if (p % 4 == 1) {
    const RealQuadData unit = fundamental_unit(p);
    BigComplex expected(root * unit_half_power(unit, -2 * static_cast<long>(unit.h), work), BigFloat(work));
    return make_check(std::move(prod), std::move(expected));
  }
  const std::uint64_t h = class_number_imag(p);
  const long sign = ((h + 1) / 2) % 2 == 0 ? 1 : -1;
  return make_check(std::move(prod), scale(BigComplex(BigFloat(work), root), sign));
}

mpfr_prec_t pairwise_sum_precision(std::uint32_t p, mpfr_prec_t prec) {
  // Each of the ~p^2/8 factors can lose about log2(p) bits relative to its
  // size; relative errors then add across the product.
  const auto log_p = static_cast<mpfr_prec_t>(std::bit_width(p));
  return prec + 3 * log_p + kGuardBits;
}

NumericCheck pairwise_sum_product_check(std::uint32_t p, mpfr_prec_t prec) {
  require_odd_prime(p);
  if (p % 4 != 1) fail(ErrorKind::UnsupportedResidueClass, "pairwise-sum product needs p = 1 mod 4");
  const mpfr_prec_t adaptive = pairwise_sum_precision(p, prec);
  const mpfr_prec_t work = adaptive + kGuardBits;
  const RootTable zeta(p, adaptive);
  BigComplex prod = BigComplex::from_int(1, 0, work);
  for (std::uint64_t j = 1; 2 * j < p; ++j) {
    for (std::uint64_t k = j + 1; 2 * k < p; ++k) prod *= zeta[j * j % p] + zeta[k * k % p];
  }
  const auto chi = legendre_table(p);
  std::uint32_t count = 0;
  for (std::uint32_t k = 1; 4 * k < p; ++k) count += chi[k] < 0 ? 1 : 0;
  prod = scale(prod, count % 2 == 0 ? 1 : -1);

  if (p % 8 == 1) return make_check(std::move(prod), BigComplex::from_int(1, 0, work));
  const RealQuadData unit = fundamental_unit(p);
  BigComplex expected(unit_half_power(unit, -2 * static_cast<long>(unit.h), work), BigFloat(work));
  return make_check(std::move(prod), std::move(expected));
}

}  // namespace qrlab
