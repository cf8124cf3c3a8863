#include "qrlab/cyclotomic.hpp"

#include <algorithm>
#include <string>

#include "qrlab/error.hpp"
#include "qrlab/kernels.hpp"

namespace qrlab {

CycIntModP gauss_sum_coeffs(const PrimeContext& ctx, std::uint32_t m) {
  const std::uint32_t p = ctx.p();
  if (m >= p - 1) fail(ErrorKind::InvalidArgument, "character exponent " + std::to_string(m) + " out of range");
  const auto powers = ctx.power_table();
  const std::uint64_t order = p - 1;
  CycIntModP out{p, std::vector<std::uint32_t>(p, 0)};
  for (std::uint64_t k = 0; k < order; ++k) {
    const std::uint64_t e = (order - (m * k) % order) % order;
    out.coeffs[powers[k]] = powers[e];
  }
  return out;
}

PiAdicExpansion pi_expansion(const CycIntModP& x, std::size_t kmax) {
  if (kmax >= x.p) fail(ErrorKind::InvalidArgument, "pi-adic expansion depth must be below p");
  return {x.p, kmax, kernels::binomial_transform(x.coeffs, kmax, x.p)};
}

StickelbergerReport stickelberger_evaluate(const PrimeContext& ctx, std::uint32_t r) {
  const std::uint32_t p = ctx.p();
  if (r > p - 2) fail(ErrorKind::InvalidArgument, "Stickelberger index " + std::to_string(r) + " exceeds p - 2");
  const PiAdicExpansion ex = pi_expansion(gauss_sum_coeffs(ctx, r), r);
  StickelbergerReport rep;
  rep.p = p;
  rep.r = r;
  rep.valuation_ok = std::all_of(ex.e.begin(), ex.e.begin() + r, [](std::uint32_t v) { return v == 0; });
  rep.unit = ModInt::from_unsigned(ex.e[r], p);
  rep.expected = -ctx.factorial(r).inverse();
  return rep;
}

StickelbergerReport stickelberger_check(const PrimeContext& ctx, std::uint32_t r) {
  StickelbergerReport rep = stickelberger_evaluate(ctx, r);
  if (!rep.pass()) {
    fail(ErrorKind::IdentityViolation, "Stickelberger congruence fails at p=" + std::to_string(rep.p) +
                                           " r=" + std::to_string(r) + ": e_r=" + std::to_string(rep.unit.value) +
                                           " expected " + std::to_string(rep.expected.value));
  }
  return rep;
}

std::vector<std::uint32_t> default_stickelberger_rs(std::uint32_t p) {
  std::vector<std::uint32_t> rs{0, 1, 2, (p - 1) / 4, (p - 1) / 2};
  std::erase_if(rs, [p](std::uint32_t r) { return r > p - 2; });
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  return rs;
}

std::pair<ModInt, ModInt> gauss_jacobi_consistency(const PrimeContext& ctx, GaussianInt jacobi) {
  const std::uint32_t p = ctx.p();
  if (!ctx.has_i()) fail(ErrorKind::UnsupportedResidueClass, "quartic character needs p = 1 mod 4");
  const std::uint32_t r = (p - 1) / 4;
  const auto quartic = pi_expansion(gauss_sum_coeffs(ctx, r), r);
  const auto quadratic = pi_expansion(gauss_sum_coeffs(ctx, 2 * r), 2 * r);
  const ModInt lead = ModInt::from_unsigned(quartic.e[r], p);
  const ModInt j = reduce(jacobi, ctx.i_image(), p);
  return {lead * lead, ModInt::from_unsigned(quadratic.e[2 * r], p) * j};
}

}  // namespace qrlab
