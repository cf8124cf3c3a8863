#include <cmath>
#include <set>
#include <tuple>

#include "doctest.h"
#include "qrlab/classfield.hpp"
#include "qrlab/error.hpp"
#include "qrlab/primes.hpp"

using namespace qrlab;

namespace {

// h(D) for prime D = 1 mod 4 as the number of cycles of reduced indefinite
// forms (a, b, c) of discriminant D under the reduction operator.
std::uint64_t forms_class_number_real(std::int64_t d) {
  using Form = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
  const double r = std::sqrt(static_cast<double>(d));
  std::set<Form> reduced;
  for (std::int64_t b = 1; b <= static_cast<std::int64_t>(r); ++b) {
    if ((b * b - d) % 4 != 0) continue;
    const std::int64_t ac = (b * b - d) / 4;
    for (std::int64_t a = 1; a <= -ac; ++a) {
      if (ac % a != 0) continue;
      if (r - b < 2.0 * a && 2.0 * a < r + b) {
        reduced.insert({a, b, ac / a});
        reduced.insert({-a, b, -ac / a});
      }
    }
  }
  auto rho = [&](const Form& f) {
    const auto [a, b, c] = f;
    const std::int64_t m = 2 * std::abs(c);
    std::int64_t bp = ((-b) % m + m) % m;
    bp += static_cast<std::int64_t>(std::floor((r - bp) / m)) * m;
    return Form{c, bp, (bp * bp - d) / (4 * c)};
  };
  std::set<Form> seen;
  std::uint64_t cycles = 0;
  for (const Form& f : reduced) {
    if (seen.count(f)) continue;
    ++cycles;
    for (Form g = f; !seen.count(g); g = rho(g)) {
      REQUIRE(reduced.count(g));
      seen.insert(g);
    }
  }
  return cycles;
}

// Reduced positive definite forms of discriminant -p.
std::uint64_t forms_class_number_imag(std::int64_t p) {
  std::uint64_t count = 0;
  for (std::int64_t a = 1; 3 * a * a <= p; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b + p;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("fundamental units") {
  const auto u5 = fundamental_unit_only(5);
  CHECK(u5.u == 1);
  CHECK(u5.v == 1);
  CHECK(u5.norm == -1);
  const auto u13 = fundamental_unit_only(13);
  CHECK(u13.u == 3);
  CHECK(u13.v == 1);
  const auto u17 = fundamental_unit_only(17);
  CHECK(u17.u == 8);
  CHECK(u17.v == 2);
}

TEST_CASE("fundamental unit is the minimal solution of u^2 - p v^2 = +-4") {
  for (std::uint32_t p : odd_primes_in_range(5, 400)) {
    if (p % 4 != 1) continue;
    const auto unit = fundamental_unit_only(p);
    CHECK(unit.u * unit.u - p * unit.v * unit.v == 4 * unit.norm);
    // prime discriminants always admit a unit of norm -1
    CHECK(unit.norm == -1);
    if (unit.v > 3000) continue;
    const long vmax = unit.v.get_si();
    // no solution with a smaller v
    for (long v = 1; v < vmax; ++v) {
      for (long s : {-4L, 4L}) {
        const long target = static_cast<long>(p) * v * v + s;
        const long u = std::lround(std::sqrt(static_cast<double>(target)));
        CHECK(u * u != target);
      }
    }
  }
  // long continued fractions produce large units
  CHECK(fundamental_unit_only(9901).u.get_str().size() > 20);
}

TEST_CASE("real class numbers against the reduced-form oracle") {
  CHECK(class_number_real(5) == 1);
  CHECK(class_number_real(17) == 1);
  CHECK(class_number_real(229) == 3);
  const std::vector<std::pair<std::uint32_t, std::uint64_t>> frozen{
      {257, 3}, {401, 5}, {577, 7}, {733, 3}, {1129, 9}, {1297, 11}, {1601, 7}, {2029, 7}};
  for (auto [p, h] : frozen) CHECK(class_number_real(p) == h);
  for (std::uint32_t p : odd_primes_in_range(5, 2500)) {
    if (p % 4 != 1) continue;
    CAPTURE(p);
    CHECK(class_number_real(p) == forms_class_number_real(p));
  }
}

TEST_CASE("imaginary class numbers against the reduced-form oracle") {
  CHECK(class_number_imag(3) == 1);
  CHECK(class_number_imag(7) == 1);
  CHECK(class_number_imag(11) == 1);
  CHECK(class_number_imag(23) == 3);
  CHECK(class_number_imag(47) == 5);
  CHECK(class_number_imag(199) == 9);
  for (std::uint32_t p : odd_primes_in_range(7, 5000)) {
    if (p % 4 != 3) continue;
    CAPTURE(p);
    CHECK(class_number_imag(p) == forms_class_number_imag(p));
  }
}

TEST_CASE("generalized Bernoulli numbers") {
  CHECK(l_minus_one(5).b2chi == mpq_class(4, 5));
  CHECK(l_minus_one(5).lminus1 == mpq_class(-2, 5));
  CHECK(l_minus_one(13).b2chi == 4);
  CHECK(l_minus_one(13).lminus1 == -2);
  CHECK(l_minus_one(17).b2chi == 8);
  CHECK(l_minus_one(17).lminus1 == -4);
  for (std::uint32_t p : odd_primes_in_range(5, 500)) {
    if (p % 4 != 1) continue;
    const auto l = l_minus_one(p);
    CHECK(l.b2chi == -2 * l.lminus1);
    CHECK(l.b2chi > 0);
  }
}

TEST_CASE("residue sums") {
  auto check = [](std::uint32_t p, std::uint64_t a, std::uint64_t b) {
    const auto s = residue_sums(p);
    CHECK(s.residues == a);
    CHECK(s.nonresidues == b);
  };
  check(7, 3, 3);
  check(13, 8, 13);
  check(11, 13, 2);
  CHECK(a_p_closed_form(7) == 3);
  CHECK(a_p_closed_form(11) == 13);
  CHECK(a_p_closed_form(13) == 8);
  for (std::uint32_t p : odd_primes_in_range(5, 3000)) {
    CAPTURE(p);
    const auto s = residue_sums(p);
    CHECK(s.residues + s.nonresidues == (std::uint64_t{p} * p - 1) / 8);
    CHECK(a_p_closed_form(p) == static_cast<std::int64_t>(s.residues));
    CHECK(a_minus_b_expected(p) ==
          mpq_class(static_cast<long>(s.residues) - static_cast<long>(s.nonresidues)));
  }
}

TEST_CASE("unit congruence") {
  auto check = [](std::uint32_t p, std::uint64_t value) {
    const auto uc = unit_congruence_check(p);
    CHECK(uc.a_p.value == value);
    CHECK(uc.expected.value == value);
  };
  check(5, 3);
  check(13, 8);
  check(17, 4);
  for (std::uint32_t p : odd_primes_in_range(5, 1500)) {
    if (p % 4 != 1) continue;
    const auto uc = unit_congruence_check(p);
    CHECK(uc.a_p == uc.expected);
  }
}

TEST_CASE("residue-class preconditions") {
  CHECK_THROWS_AS(fundamental_unit_only(7), Error);
  CHECK_THROWS_AS(class_number_imag(13), Error);
  CHECK_THROWS_AS(l_minus_one(11), Error);
  CHECK_THROWS_AS(residue_sums(15), Error);
}
