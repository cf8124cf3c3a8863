#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qrlab/analytic.hpp"
#include "qrlab/classfield.hpp"
#include "qrlab/primes.hpp"
#include "qrlab/quartic.hpp"

using namespace qrlab;

namespace {

double residual_bits(const NumericCheck& c) { return c.residual.log2_abs(); }

}  // namespace

TEST_CASE("big float basics") {
  const BigFloat two(2, 200);
  CHECK(sqrt(two).to_double() == doctest::Approx(std::numbers::sqrt2));
  CHECK(BigFloat::pi(128).to_double() == doctest::Approx(std::numbers::pi));
  CHECK(root(BigFloat(81, 128), 4).round() == 3);
  CHECK(BigFloat(mpq_class(-7, 2), 64).round() == -4);
  const BigComplex z = BigComplex::from_int(-3, 4, 128);
  CHECK(z.abs().to_double() == doctest::Approx(5.0));
  const BigComplex r = z.sqrt();
  CHECK(r.re().sign() > 0);
  CHECK((r * r - z).abs().log2_abs() < -120);
  CHECK(BigComplex::from_int(-4, 0, 128).sqrt().im().to_double() == doctest::Approx(2.0));
}

TEST_CASE("roots of unity table") {
  const RootTable roots(101, 256);
  for (std::uint64_t j : {0u, 1u, 50u, 63u, 64u, 65u, 100u}) {
    CHECK((roots[j].abs() - BigFloat(1, 256)).log2_abs() < -240);
    const double theta = 2 * std::numbers::pi * static_cast<double>(j) / 101;
    CHECK(roots[j].re().to_double() == doctest::Approx(std::cos(theta)));
    CHECK(roots[j].im().to_double() == doctest::Approx(std::sin(theta)));
  }
  CHECK((roots[37] * roots[64] - roots[0]).abs().log2_abs() < -240);
}

TEST_CASE("quadratic Gauss sum") {
  const auto c5 = quadratic_gauss_sum_check(5);
  CHECK(c5.computed.re().to_double() == doctest::Approx(std::sqrt(5.0)));
  CHECK(residual_bits(c5) < -256 + 32);
  const auto c7 = quadratic_gauss_sum_check(7);
  CHECK(c7.computed.im().to_double() == doctest::Approx(std::sqrt(7.0)));
  CHECK(std::abs(c7.computed.re().to_double()) < 1e-30);
  const auto c3 = quadratic_gauss_sum_check(3);
  CHECK(c3.computed.im().to_double() == doctest::Approx(std::sqrt(3.0)));
  for (std::uint32_t p : odd_primes_in_range(3, 300)) {
    const auto c = quadratic_gauss_sum_check(p);
    CHECK(c.within(128, p));
    CHECK(c.computed.abs().to_double() == doctest::Approx(std::sqrt(p)));
  }
}

TEST_CASE("quartic Gauss sum") {
  for (std::uint32_t p : odd_primes_in_range(17, 300)) {
    if (p % 8 != 1) continue;
    CAPTURE(p);
    const auto c = quartic_gauss_sum_check(PrimeContext(p));
    CHECK(c.within(128, p));
    CHECK(c.computed.abs().to_double() == doctest::Approx(std::sqrt(p)));
  }
}

TEST_CASE("W_p") {
  const BigComplex w5 = w_product(5, 100);
  CHECK(w5.abs().to_double() == doctest::Approx(1.90211303259));
  CHECK(w5.arg().to_double() == doctest::Approx(-std::numbers::pi / 10));

  const auto u13 = fundamental_unit(13);
  const double eps13 = (3 + std::sqrt(13.0)) / 2;
  CHECK(w_product(13).abs().to_double() == doctest::Approx(std::pow(13.0, 0.25) * std::sqrt(eps13)));
  CHECK(u13.h == 1);
  const double eps17 = (8 + 2 * std::sqrt(17.0)) / 2;
  CHECK(w_product(17).abs().to_double() == doctest::Approx(std::pow(17.0, 0.25) / std::sqrt(eps17)));

  const auto cf = closed_form_wp(5, fundamental_unit(5));
  CHECK(cf.branch == 5);
  CHECK(cf.sign == -1);
  CHECK(cf.zeta_exponent == 1);
  CHECK(cf.i_factor);
  CHECK(closed_form_wp(17, fundamental_unit(17)).sign == 1);
  CHECK(closed_form_wp(41, fundamental_unit(41)).sign == -1);
}

TEST_CASE("explicit value of W_p") {
  for (std::uint32_t p : odd_primes_in_range(5, 300)) {
    if (p % 4 != 1) continue;
    CAPTURE(p);
    const auto r = wp_closed_form_check(p);
    CHECK(r.closed_form.within(128, p));
    CHECK(r.modulus_residual.log2_abs() < -128 + 0.5 * std::log2(p));
  }
}

TEST_CASE("product over squares") {
  const auto s7 = square_product_check(7);
  CHECK(s7.computed.im().to_double() == doctest::Approx(-std::sqrt(7.0)));
  const auto s11 = square_product_check(11);
  CHECK(s11.computed.im().to_double() == doctest::Approx(-std::sqrt(11.0)));
  const auto s13 = square_product_check(13);
  CHECK(s13.computed.re().to_double() == doctest::Approx(std::sqrt(13.0) * 2 / (3 + std::sqrt(13.0))));
  for (std::uint32_t p : odd_primes_in_range(5, 300)) CHECK(square_product_check(p).within(128, p));
}

TEST_CASE("pairwise sum product") {
  const auto c5 = pairwise_sum_product_check(5);
  CHECK(c5.expected.re().to_double() == doctest::Approx(2 / (1 + std::sqrt(5.0))));
  CHECK(residual_bits(c5) < -100);
  const auto c17 = pairwise_sum_product_check(17);
  CHECK(c17.computed.re().to_double() == doctest::Approx(1.0));
  for (std::uint32_t p : {13u, 29u, 37u, 41u, 53u, 97u}) CHECK(residual_bits(pairwise_sum_product_check(p)) < -40);
}

TEST_CASE("residuals shrink as precision doubles") {
  for (std::uint32_t p : {13u, 17u, 41u}) {
    const double lo = residual_bits(wp_closed_form_check(p, 128).closed_form);
    const double hi = residual_bits(wp_closed_form_check(p, 256).closed_form);
    CHECK(hi <= lo - 128 / 4);
    const double qlo = residual_bits(quartic_gauss_sum_check(PrimeContext(p % 8 == 1 ? p : 17), 128));
    const double qhi = residual_bits(quartic_gauss_sum_check(PrimeContext(p % 8 == 1 ? p : 17), 256));
    CHECK(qhi <= qlo - 128 / 4);
  }
}
