#include "qrlab/quartic.hpp"

#include <cmath>
#include <string>

#include "qrlab/error.hpp"

namespace qrlab {

namespace {

void require_one_mod_eight(std::uint32_t p, const char* what) {
  require_odd_prime(p);
  if (p % 8 != 1) {
    fail(ErrorKind::UnsupportedResidueClass, std::string(what) + " needs p = 1 mod 8, got " + std::to_string(p));
  }
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

QuarticDecomposition normalize(std::uint32_t p, std::uint64_t x, std::uint64_t y) {
  if (x % 2 == 0) std::swap(x, y);
  if (y % 4 != 0) fail(ErrorKind::Internal, "even part of two-square decomposition not divisible by 4 at p=" + std::to_string(p));
  auto a = static_cast<std::int64_t>(x);
  if (a % 4 != 3) a = -a;
  return {p, a, y / 4};
}

}  // namespace

QuarticDecomposition decompose(std::uint32_t p) {
  require_one_mod_eight(p, "decompose");
  const auto root = sqrt_mod(ModInt(-1, p));
  if (!root) fail(ErrorKind::Internal, "-1 has no square root mod " + std::to_string(p));
  const std::uint64_t bound = isqrt(p);
  // Start from the root in (p/2, p).
  std::uint64_t r0 = p, r1 = p - root->value;
  while (r1 > bound) r0 = std::exchange(r1, r0 % r1);
  const std::uint64_t rest = p - r1 * r1;
  const std::uint64_t y = isqrt(rest);
  if (y * y != rest) fail(ErrorKind::Internal, "Cornacchia failed at p=" + std::to_string(p));
  return normalize(p, r1, y);
}

QuarticDecomposition decompose_exhaustive(std::uint32_t p) {
  require_one_mod_eight(p, "decompose");
  for (std::uint64_t b = 1; 16 * b * b < p; ++b) {
    const std::uint64_t rest = p - 16 * b * b;
    const std::uint64_t a = isqrt(rest);
    if (a * a == rest) return normalize(p, a, 4 * b);
  }
  fail(ErrorKind::Internal, "no decomposition p = a^2 + 16 b^2 at p=" + std::to_string(p));
}

QuarticCharacter::QuarticCharacter(const PrimeContext& ctx) : ctx_(ctx), exponents_(ctx.p(), 0) {
  if (!ctx.has_i()) {
    fail(ErrorKind::UnsupportedResidueClass, "quartic character needs p = 1 mod 4, got " + std::to_string(ctx.p()));
  }
  const auto powers = ctx.power_table();
  for (std::size_t k = 0; k < powers.size(); ++k) exponents_[powers[k]] = static_cast<std::uint8_t>(k % 4);
}

GaussianInt QuarticCharacter::value(std::uint32_t t) const {
  t %= ctx_.p();
  if (t == 0) return {0, 0};
  switch (exponents_[t]) {
    case 0: return {1, 0};
    case 1: return {0, -1};
    case 2: return {-1, 0};
    default: return {0, 1};
  }
}

GaussianInt jacobi_sum(const QuarticCharacter& chi) {
  const std::uint32_t p = chi.context().p();
  // Tally exponents of chi(t) chi(1 - t); t = 0, 1 contribute nothing.
  std::int64_t count[4] = {0, 0, 0, 0};
  for (std::uint32_t t = 2; t < p; ++t) ++count[(chi.exponent(t) + chi.exponent(p + 1 - t)) & 3];
  return {count[0] - count[2], count[3] - count[1]};
}

GaussianInt jacobi_sum(const PrimeContext& ctx) { return jacobi_sum(QuarticCharacter(ctx)); }

std::pair<ModInt, ModInt> jacobi_congruence_check(const PrimeContext& ctx, GaussianInt j) {
  const std::uint32_t p = ctx.p();
  const ModInt lhs = reduce(j, ctx.i_image(), p);
  const ModInt quarter = ctx.factorial((p - 1) / 4);
  const ModInt rhs = -(ctx.factorial((p - 1) / 2) * (quarter * quarter).inverse());
  return {lhs, rhs};
}

std::pair<ModInt, ModInt> jacobi_congruence_check(const PrimeContext& ctx) {
  require_one_mod_eight(ctx.p(), "Jacobi-sum congruence");
  return jacobi_congruence_check(ctx, jacobi_sum(ctx));
}

ModInt c_sign_value(const PrimeContext& ctx, const QuarticDecomposition& dec) {
  const std::uint32_t p = ctx.p();
  return ModInt(4 * static_cast<std::int64_t>(dec.b_abs), p) * ModInt(dec.a, p).inverse() *
         ctx.factorial((p - 1) / 2);
}

int c_sign(const PrimeContext& ctx, const QuarticDecomposition& dec) {
  const ModInt x = c_sign_value(ctx, dec);
  if (x.value == 1) return 1;
  if (x.value == ctx.p() - 1u) return -1;
  fail(ErrorKind::IdentityViolation,
       "C_p defining value " + std::to_string(x.value) + " is not +-1 mod " + std::to_string(ctx.p()));
}

int c_sign(std::uint32_t p) {
  require_one_mod_eight(p, "C_p");
  return c_sign(PrimeContext(p), decompose(p));
}

std::pair<bool, bool> two_is_fourth_power(std::uint32_t p) {
  require_one_mod_eight(p, "two_is_fourth_power");
  return {decompose(p).b_abs % 2 == 0, quartic_symbol(2, p) == 1};
}

}  // namespace qrlab
