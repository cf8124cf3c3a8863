#include "qrlab/classfield.hpp"

#include <cmath>
#include <string>

#include "qrlab/error.hpp"

namespace qrlab {

namespace {

void require_one_mod_four(std::uint32_t p, const char* what) {
  require_odd_prime(p);
  if (p % 4 != 1) {
    fail(ErrorKind::UnsupportedResidueClass, std::string(what) + " needs p = 1 mod 4, got " + std::to_string(p));
  }
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

BigFloat log_unit(const RealQuadData& unit, mpfr_prec_t prec) {
  const BigFloat root_p = sqrt(BigFloat(static_cast<long>(unit.p), prec));
  const BigFloat eps = (BigFloat(unit.u, prec) + BigFloat(unit.v, prec) * root_p) * BigFloat::pow2(-1, prec);
  return log(eps);
}

}  // namespace

RealQuadData fundamental_unit_only(std::uint32_t p) {
  require_one_mod_four(p, "fundamental unit");
  const auto s = static_cast<std::int64_t>(isqrt(p));
  const auto disc = static_cast<std::int64_t>(p);
  const mpz_class quarter = (p - 1) / 4;

  // Complete quotients (P + sqrt(p)) / Q, starting from (1 + sqrt(p)) / 2.
  std::int64_t P = 1, Q = 2;
  // Convergent numerators / denominators, seeded with A_{-1}=1, A_{-2}=0,
  // B_{-1}=0, B_{-2}=1.
  mpz_class a_cur = 1, a_prev = 0;
  mpz_class b_cur = 0, b_prev = 1;
  for (;;) {
    const std::int64_t q = (P + s) / Q;
    mpz_class a_next = q * a_cur + a_prev;
    mpz_class b_next = q * b_cur + b_prev;
    a_prev = std::move(a_cur);
    a_cur = std::move(a_next);
    b_prev = std::move(b_cur);
    b_cur = std::move(b_next);

    const mpz_class n = a_cur * a_cur - a_cur * b_cur - b_cur * b_cur * quarter;
    if (n == 1 || n == -1) {
      RealQuadData out;
      out.p = p;
      out.u = 2 * a_cur - b_cur;
      out.v = b_cur;
      out.norm = n == 1 ? 1 : -1;
      return out;
    }
    P = q * Q - P;
    Q = (disc - P * P) / Q;
    if (Q <= 0) fail(ErrorKind::Internal, "continued fraction left the reduced cycle at p=" + std::to_string(p));
  }
}

std::uint64_t class_number_real(const RealQuadData& unit, mpfr_prec_t prec) {
  const std::uint32_t p = unit.p;
  const auto chi = legendre_table(p);
  for (int attempt = 0; attempt < 4; ++attempt, prec *= 2) {
    const mpfr_prec_t work = prec + 32;
    const BigFloat pi_over_p = BigFloat::pi(work) / BigFloat(static_cast<long>(p), work);
    const BigFloat two(2, work);
    BigFloat sum(work);
    // chi is even, so the terms for a and p - a coincide.
    for (std::uint32_t a = 1; 2 * a < p; ++a) {
      const BigFloat term = log(two * sin(pi_over_p * BigFloat(static_cast<long>(a), work)));
      if (chi[a] > 0) {
        sum -= term;
      } else {
        sum += term;
      }
    }
    const BigFloat ratio = sum / log_unit(unit, work);
    const mpz_class h = ratio.round();
    const double off = (ratio - BigFloat(h, work)).to_double();
    if (std::fabs(off) < 1e-6 && h >= 1) return h.get_ui();
  }
  fail(ErrorKind::Precision, "class number of Q(sqrt(" + std::to_string(p) + ")) did not round cleanly");
}

std::uint64_t class_number_real(std::uint32_t p, mpfr_prec_t prec) {
  return class_number_real(fundamental_unit_only(p), prec);
}

RealQuadData fundamental_unit(std::uint32_t p, mpfr_prec_t prec) {
  RealQuadData unit = fundamental_unit_only(p);
  unit.h = class_number_real(unit, prec);
  unit.regulator = log_unit(unit, prec);
  return unit;
}

std::uint64_t class_number_imag(std::uint32_t p) {
  require_odd_prime(p);
  if (p % 4 != 3) fail(ErrorKind::UnsupportedResidueClass, "h(-p) needs p = 3 mod 4, got " + std::to_string(p));
  if (p == 3) return 1;
  const auto chi = legendre_table(p);
  std::int64_t diff = 0;
  for (std::uint32_t x = 1; 2 * x < p; ++x) diff += chi[x];
  const std::int64_t denom = 2 - legendre(2, p);
  if (diff <= 0 || diff % denom != 0) {
    fail(ErrorKind::IdentityViolation, "(R - N) / (2 - (2/p)) not a positive integer at p=" + std::to_string(p));
  }
  return static_cast<std::uint64_t>(diff / denom);
}

LValueData l_minus_one(std::uint32_t p) {
  require_one_mod_four(p, "L(-1, chi)");
  const auto chi = legendre_table(p);
  mpz_class s = 0;
  for (std::uint32_t a = 1; a < p; ++a) {
    const mpz_class sq = mpz_class(a) * a;
    if (chi[a] > 0) {
      s += sq;
    } else {
      s -= sq;
    }
  }
  LValueData out;
  out.p = p;
  out.b2chi = mpq_class(s, p);
  out.b2chi.canonicalize();
  out.lminus1 = -out.b2chi / 2;
  return out;
}

ResidueSums residue_sums(std::uint32_t p) {
  const auto chi = legendre_table(p);
  ResidueSums out;
  out.p = p;
  for (std::uint32_t x = 1; 2 * x < p; ++x) {
    if (chi[x] > 0) {
      out.residues += x;
    } else {
      out.nonresidues += x;
    }
  }
  return out;
}

std::int64_t a_p_closed_form(std::uint32_t p) {
  require_odd_prime(p);
  if (p <= 3) fail(ErrorKind::InvalidArgument, "closed form for A_p needs p > 3");
  const mpz_class base = mpz_class(p) * p - 1;
  mpq_class value;
  switch (p % 8) {
    case 7: value = mpq_class(base, 16); break;
    case 3: value = mpq_class(base + 8 * mpz_class(p) * class_number_imag(p), 16); break;
    case 1: value = (mpq_class(base) + 12 * l_minus_one(p).lminus1) / 16; break;
    default: value = (mpq_class(base) + 20 * l_minus_one(p).lminus1) / 16; break;
  }
  value.canonicalize();
  if (value.get_den() != 1) {
    fail(ErrorKind::IdentityViolation, "closed form for A_" + std::to_string(p) + " is " + value.get_str());
  }
  return value.get_num().get_si();
}

mpq_class a_minus_b_expected(std::uint32_t p) {
  require_odd_prime(p);
  switch (p % 8) {
    case 7: return 0;
    case 3: return mpq_class(mpz_class(p) * class_number_imag(p));
    default: {
      const mpq_class chi2(legendre(2, p));
      mpq_class r = 2 * (1 - chi2 / 4) * l_minus_one(p).lminus1;
      r.canonicalize();
      return r;
    }
  }
}

UnitCongruence unit_congruence_check(const RealQuadData& unit) {
  const std::uint64_t p = unit.p;
  const auto u = ModInt::from_unsigned(mpz_class(unit.u % p).get_ui(), p);
  const auto v = ModInt::from_unsigned(mpz_class(unit.v % p).get_ui(), p);
  const ModInt half = ModInt::from_unsigned(2, p).inverse();
  // s^2 = p = 0 in F_p
  const QuadExtElem eps{(u * half).value, (v * half).value, 0, p};
  const QuadExtElem power = eps.pow(unit.h);
  return {ModInt::from_unsigned(power.x, p), ModInt::from_unsigned(power.y, p), -factorial_mod((p - 1) / 2, p)};
}

UnitCongruence unit_congruence_check(std::uint32_t p) { return unit_congruence_check(fundamental_unit(p)); }

}  // namespace qrlab
