#include "qrlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <thread>

#include "qrlab/classfield.hpp"
#include "qrlab/cyclotomic.hpp"
#include "qrlab/error.hpp"
#include "qrlab/kernels.hpp"
#include "qrlab/primes.hpp"
#include "qrlab/quartic.hpp"

namespace qrlab {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

std::string signed_residue(std::uint32_t v, std::uint32_t p) {
  return v == p - 1 ? "-1" : std::to_string(v);
}

std::string format_residual(const BigFloat& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r.to_double());
  return buf;
}

// inv[x] = x^{-1} mod p for x in [1, p).
std::vector<std::uint32_t> inverse_table(std::uint32_t p) {
  std::vector<std::uint32_t> inv(p, 0);
  inv[1] = 1;
  for (std::uint64_t x = 2; x < p; ++x) {
    inv[x] = static_cast<std::uint32_t>((p - (p / x) * inv[p % x] % p) % p);
  }
  return inv;
}

void require_class(std::uint32_t p, std::uint32_t modulus, std::uint32_t residue, const char* what) {
  require_odd_prime(p);
  if (p % modulus != residue) {
    fail(ErrorKind::UnsupportedResidueClass, std::string(what) + " needs p = " + std::to_string(residue) +
                                                 " mod " + std::to_string(modulus) + ", got " + std::to_string(p));
  }
}

// Data shared between the checks run on one prime, computed on first use.
class PrimeData {
 public:
  PrimeData(std::uint32_t p, const ScanConfig& cfg) : ctx_(p), cfg_(cfg) {}

  const PrimeContext& ctx() const { return ctx_; }
  std::uint32_t p() const { return ctx_.p(); }
  const ScanConfig& cfg() const { return cfg_; }

  const RealQuadData& unit() {
    if (!unit_) unit_ = fundamental_unit(p());
    return *unit_;
  }
  const QuarticCharacter& chi() {
    if (!chi_) chi_.emplace(ctx_);
    return *chi_;
  }
  GaussianInt jacobi() {
    if (!jacobi_) jacobi_ = jacobi_sum(chi());
    return *jacobi_;
  }
  const QuarticDecomposition& decomposition() {
    if (!dec_) dec_ = decompose(p());
    return *dec_;
  }

 private:
  PrimeContext ctx_;
  const ScanConfig& cfg_;
  std::optional<RealQuadData> unit_;
  std::optional<QuarticCharacter> chi_;
  std::optional<GaussianInt> jacobi_;
  std::optional<QuarticDecomposition> dec_;
};

struct CheckSpec {
  std::function<bool(std::uint32_t, const ScanConfig&)> applies;
  std::function<CheckResult(PrimeData&)> run;
};

CheckResult numeric_result(const NumericCheck& c, std::uint32_t p, int bits) {
  return {"", c.within(bits, p), "residual=" + format_residual(c.residual),
          "residual<2^-" + std::to_string(bits) + "*sqrt(p)", 0};
}

int numeric_bits(const ScanConfig& cfg) { return static_cast<int>(cfg.precision / 2); }

CheckResult run_mp_sign(PrimeData& d) {
  const MpSignReport r = verify_mp_sign(d.ctx());
  return {"", r.pass, str(r.m_p), str(r.predicted > 0 ? 1 : d.p() - 1) + " (r=" + str(static_cast<std::int64_t>(r.r)) + ")", 0};
}

CheckResult run_mp_factorial(PrimeData& d) {
  const MpFactorialReport r = verify_mp_factorial(d.ctx());
  return {"", r.pass,
          "M=" + str(r.m_p) + " C=" + str(r.c_p) + " jacobi=" + str(r.jacobi_symbol_b_over_a) + " sigma=" +
              str(r.sigma) + " beta=" + str(r.beta_p),
          "sigma in {1,-1}", 0};
}

CheckResult run_apbp(PrimeData& d) {
  const std::uint32_t p = d.p();
  const ResidueSums s = residue_sums(p);
  const std::uint64_t total = (std::uint64_t{p} * p - 1) / 8;
  const mpq_class diff = mpq_class(mpz_class(s.residues)) - mpq_class(mpz_class(s.nonresidues));
  const mpq_class want = a_minus_b_expected(p);
  return {"", s.residues + s.nonresidues == total && diff == want,
          "A+B=" + str(static_cast<std::int64_t>(s.residues + s.nonresidues)) + " A-B=" + diff.get_str(),
          "A+B=" + str(static_cast<std::int64_t>(total)) + " A-B=" + want.get_str(), 0};
}

CheckResult run_ap_closed(PrimeData& d) {
  const ResidueSums s = residue_sums(d.p());
  const std::int64_t closed = a_p_closed_form(d.p());
  return {"", closed == static_cast<std::int64_t>(s.residues), str(static_cast<std::int64_t>(s.residues)), str(closed),
          0};
}

CheckResult run_unit_cong(PrimeData& d) {
  const UnitCongruence uc = unit_congruence_check(d.unit());
  return {"", uc.a_p == uc.expected, str(uc.a_p.value), str(uc.expected.value), 0};
}

CheckResult run_jacobi_cong(PrimeData& d) {
  const GaussianInt j = d.jacobi();
  const QuarticDecomposition& dec = d.decomposition();
  const auto [lhs, rhs] = jacobi_congruence_check(d.ctx(), j);
  const bool shape = j.re == dec.a && static_cast<std::uint64_t>(j.im < 0 ? -j.im : j.im) == 4 * dec.b_abs &&
                     j.norm() == static_cast<std::int64_t>(d.p());
  return {"", shape && lhs == rhs,
          "J=" + str(j.re) + (j.im < 0 ? "" : "+") + str(j.im) + "i J_mod_p=" + str(lhs.value),
          "a=" + str(dec.a) + " 4|b|=" + str(static_cast<std::int64_t>(4 * dec.b_abs)) + " rhs=" + str(rhs.value), 0};
}

CheckResult run_c_sign(PrimeData& d) {
  const ModInt x = c_sign_value(d.ctx(), d.decomposition());
  const bool ok = x.value == 1 || x.value == d.p() - 1u;
  return {"", ok, signed_residue(static_cast<std::uint32_t>(x.value), d.p()), "1 or -1", 0};
}

CheckResult run_two_fourth(PrimeData& d) {
  const auto [b_even, fourth] = two_is_fourth_power(d.p());
  return {"", b_even == fourth, std::string("b_even=") + (b_even ? "true" : "false"),
          std::string("two_is_fourth_power=") + (fourth ? "true" : "false"), 0};
}

CheckResult run_stickelberger(PrimeData& d) {
  const std::uint32_t p = d.p();
  std::vector<std::uint32_t> rs;
  if (d.cfg().all_r) {
    for (std::uint32_t r = 0; r + 2 <= p; ++r) rs.push_back(r);
  } else {
    rs = default_stickelberger_rs(p);
  }
  bool pass = true;
  std::string computed, expected;
  for (std::uint32_t r : rs) {
    const StickelbergerReport rep = stickelberger_evaluate(d.ctx(), r);
    pass = pass && rep.pass();
    if (!computed.empty()) {
      computed += ' ';
      expected += ' ';
    }
    computed += "r" + str(r) + ":" + (rep.valuation_ok ? "" : "!") + str(rep.unit.value);
    expected += "r" + str(r) + ":" + str(rep.expected.value);
  }
  return {"", pass, computed, expected, 0};
}

CheckResult run_tau(PrimeData& d) {
  return numeric_result(quadratic_gauss_sum_check(d.p(), d.cfg().precision), d.p(), numeric_bits(d.cfg()));
}

CheckResult run_gauss4(PrimeData& d) {
  return numeric_result(quartic_gauss_sum_check(d.ctx(), d.cfg().precision), d.p(), numeric_bits(d.cfg()));
}

CheckResult run_wp_closed_form(PrimeData& d) {
  const int bits = numeric_bits(d.cfg());
  const WpClosedFormResult r = wp_closed_form_check(d.p(), d.unit(), d.cfg().precision);
  const NumericCheck modulus{r.closed_form.computed, r.closed_form.expected, r.modulus_residual};
  return {"", r.closed_form.within(bits, d.p()) && modulus.within(bits, d.p()),
          "residual=" + format_residual(r.closed_form.residual) + " modulus_residual=" + format_residual(r.modulus_residual),
          "both<2^-" + str(bits) + "*sqrt(p)", 0};
}

CheckResult run_square_product(PrimeData& d) {
  return numeric_result(square_product_check(d.p(), d.cfg().precision), d.p(), numeric_bits(d.cfg()));
}

CheckResult run_pairwise_product(PrimeData& d) {
  return numeric_result(pairwise_sum_product_check(d.p(), d.cfg().precision), d.p(), numeric_bits(d.cfg()));
}

CheckResult run_wolstenholme(PrimeData& d) {
  const std::uint32_t p = d.p();
  const std::uint64_t h = harmonic_number_mod(p - 1, p, std::uint64_t{p} * p);
  return {"", h == 0, str(static_cast<std::int64_t>(h)), "0 mod p^2", 0};
}

CheckResult run_harmonic_id(PrimeData& d) {
  const std::uint32_t p = d.p();
  if (p % 4 == 3) {
    const std::uint32_t lhs = harmonic_sum(p, 1).value;
    const ModInt half_h = ModInt::from_unsigned(harmonic_number_mod((p - 1) / 2, p, p), p) *
                          ModInt::from_unsigned(2, p).inverse();
    return {"", lhs == half_h.value, "H1_R=" + str(lhs), "H_(p-1)/2/2=" + str(half_h.value), 0};
  }
  const std::uint32_t h2 = harmonic_sum(p, 2).value;
  return {"", h2 == 0, "H2_R=" + str(h2), "0", 0};
}

bool mod8(std::uint32_t p, std::uint32_t r) { return p % 8 == r; }
bool mod4(std::uint32_t p, std::uint32_t r) { return p % 4 == r; }

const std::map<std::string, CheckSpec>& registry() {
  using Cfg = const ScanConfig&;
  static const std::map<std::string, CheckSpec> checks = {
      {"thm1", {[](std::uint32_t p, Cfg) { return mod8(p, 5); }, run_mp_sign}},
      {"thm2", {[](std::uint32_t p, Cfg) { return mod8(p, 1); }, run_mp_factorial}},
      {"apbp", {[](std::uint32_t p, Cfg) { return p > 3; }, run_apbp}},
      {"ap-closed", {[](std::uint32_t p, Cfg) { return p > 3; }, run_ap_closed}},
      {"unit-cong", {[](std::uint32_t p, Cfg) { return mod4(p, 1); }, run_unit_cong}},
      {"jacobi-cong", {[](std::uint32_t p, Cfg) { return mod8(p, 1); }, run_jacobi_cong}},
      {"c-sign", {[](std::uint32_t p, Cfg) { return mod8(p, 1); }, run_c_sign}},
      {"two-fourth", {[](std::uint32_t p, Cfg) { return mod8(p, 1); }, run_two_fourth}},
      {"stickelberger", {[](std::uint32_t p, Cfg) { return mod8(p, 1); }, run_stickelberger}},
      {"tau", {[](std::uint32_t, Cfg) { return true; }, run_tau}},
      {"gauss4", {[](std::uint32_t p, Cfg) { return mod8(p, 1); }, run_gauss4}},
      {"lemma21", {[](std::uint32_t p, Cfg) { return mod4(p, 1); }, run_wp_closed_form}},
      {"sun-prod", {[](std::uint32_t p, Cfg) { return p > 3; }, run_square_product}},
      {"petrov-sun", {[](std::uint32_t p, Cfg cfg) { return mod4(p, 1) && p <= cfg.pairwise_product_max; }, run_pairwise_product}},
      {"wolstenholme", {[](std::uint32_t p, Cfg) { return p > 3; }, run_wolstenholme}},
      {"harmonic-id", {[](std::uint32_t p, Cfg) { return p > 3; }, run_harmonic_id}},
  };
  return checks;
}

}  // namespace

std::uint32_t brute_mp(const PrimeContext& ctx) { return kernels::mod_product(ctx.half_residues(), ctx.p()); }

std::uint32_t brute_mp(std::uint32_t p) { return brute_mp(PrimeContext(p)); }

MpSignReport verify_mp_sign(const PrimeContext& ctx) {
  const std::uint32_t p = ctx.p();
  require_class(p, 8, 5, "M_p sign check");
  MpSignReport rep;
  rep.p = p;
  rep.m_p = brute_mp(ctx);
  rep.r = count_fourth_power_residues_half(p);
  rep.predicted = rep.r % 2 == 1 ? 1 : -1;  // (-1)^{1+r}
  rep.pass = rep.m_p == (rep.predicted > 0 ? 1u : p - 1);
  return rep;
}

MpSignReport verify_mp_sign(std::uint32_t p) {
  require_class(p, 8, 5, "M_p sign check");
  return verify_mp_sign(PrimeContext(p));
}

MpFactorialReport verify_mp_factorial(const PrimeContext& ctx) {
  const std::uint32_t p = ctx.p();
  require_class(p, 8, 1, "M_p factorial check");
  const QuarticDecomposition dec = decompose(p);
  MpFactorialReport rep;
  rep.p = p;
  rep.m_p = brute_mp(ctx);
  rep.c_p = c_sign(ctx, dec);
  rep.jacobi_symbol_b_over_a =
      jacobi(static_cast<std::int64_t>(dec.b_abs), static_cast<std::uint64_t>(dec.a < 0 ? -dec.a : dec.a));
  rep.floor_p_8 = p / 8;
  const int lead = rep.c_p * rep.jacobi_symbol_b_over_a * ((1 + rep.floor_p_8) % 2 == 0 ? 1 : -1);
  const ModInt sigma =
      ctx.mod(lead) * ctx.factorial((p - 1) / 2) * ModInt::from_unsigned(rep.m_p, p).inverse();
  if (sigma.value == 1) {
    rep.sigma = 1;
  } else if (sigma.value == p - 1) {
    rep.sigma = -1;
  } else {
    fail(ErrorKind::IdentityViolation, "sigma=" + std::to_string(sigma.value) + " is not +-1 mod " + std::to_string(p));
  }
  rep.beta_p = (1 - rep.sigma) / 2;
  rep.pass = true;
  return rep;
}

MpFactorialReport verify_mp_factorial(std::uint32_t p) {
  require_class(p, 8, 1, "M_p factorial check");
  return verify_mp_factorial(PrimeContext(p));
}

HarmonicRecord harmonic_sum(std::uint32_t p, unsigned n) {
  require_odd_prime(p);
  if (n == 0) fail(ErrorKind::InvalidArgument, "harmonic order must be positive");
  const PrimeContext ctx(p);
  const auto inv = inverse_table(p);
  std::uint64_t sum = 0;
  for (std::uint32_t x : ctx.half_residues()) sum = (sum + pow_mod(inv[x], n, p)) % p;
  return {p, n, static_cast<std::uint32_t>(sum)};
}

std::uint64_t harmonic_number_mod(std::uint64_t k, std::uint32_t p, std::uint64_t m) {
  require_odd_prime(p);
  if (k >= p) fail(ErrorKind::InvalidArgument, "harmonic number H_k mod p needs k < p");
  const auto inv = inverse_table(p);
  std::uint64_t sum = 0;
  for (std::uint64_t x = 1; x <= k; ++x) {
    std::uint64_t y = inv[x] % m;
    if (m != p) {
      // Newton step lifts x^{-1} from mod p to mod p^2.
      const std::uint64_t xy = mul_mod(x, y, m);
      y = mul_mod(y, (2 + m - xy) % m, m);
    }
    sum = (sum + y) % m;
  }
  return sum;
}

BetaRatio beta_ratio_check(const PrimeContext& ctx, const RealQuadData& unit) {
  const std::uint32_t p = ctx.p();
  require_class(p, 8, 1, "beta ratio");
  const std::uint64_t d = smallest_nonresidue(p);
  const UnitCongruence uc = unit_congruence_check(unit);
  const ModInt j = reduce(jacobi_sum(ctx), ctx.i_image(), p);
  const QuadExtElem eps_half = sqrt_in_extension(uc.a_p, d);
  const QuadExtElem j_half = sqrt_in_extension(j, d);
  const QuadExtElem denom = QuadExtElem::base(ctx.factorial((p - 1) / 4), d) * j_half;
  const QuadExtElem ratio = eps_half * denom.inverse();
  const QuadExtElem square = ratio * ratio;
  BetaRatio out;
  out.p = p;
  out.squares_to_one = square == QuadExtElem::base(ctx.mod(1), d);
  if (out.squares_to_one) out.ratio = ratio == QuadExtElem::base(ctx.mod(1), d) ? 1 : -1;
  return out;
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {"thm1",   "thm2",     "apbp",          "ap-closed",   "unit-cong",
                                                 "jacobi-cong", "c-sign", "two-fourth", "stickelberger", "tau",
                                                 "gauss4", "lemma21",  "sun-prod",      "petrov-sun",  "wolstenholme",
                                                 "harmonic-id"};
  return names;
}

bool is_known_check(const std::string& name) { return registry().contains(name); }

bool check_applies(const std::string& name, std::uint32_t p, const ScanConfig& cfg) {
  const auto it = registry().find(name);
  if (it == registry().end()) fail(ErrorKind::InvalidArgument, "unknown check '" + name + "'");
  return it->second.applies(p, cfg);
}

VerificationReport verify_prime(std::uint32_t p, const ScanConfig& cfg) {
  VerificationReport report;
  report.prime = p;
  PrimeData data(p, cfg);
  for (const std::string& name : cfg.checks) {
    const CheckSpec& spec = registry().at(name);
    if (!spec.applies(p, cfg)) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult result;
    try {
      result = spec.run(data);
    } catch (const Error& e) {
      result = {"", false, e.what(), "no error", 0};
    }
    result.name = name;
    if (cfg.timing) {
      result.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start)
                          .count();
    }
    report.checks.push_back(std::move(result));
  }
  return report;
}

std::vector<VerificationReport> run_scan(const ScanConfig& cfg) {
  for (const auto& name : cfg.checks) {
    if (!is_known_check(name)) fail(ErrorKind::InvalidArgument, "unknown check '" + name + "'");
  }
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p : odd_primes_in_range(cfg.min_p, cfg.max_p)) {
    if (std::any_of(cfg.checks.begin(), cfg.checks.end(),
                    [&](const std::string& n) { return check_applies(n, p, cfg); })) {
      primes.push_back(p);
    }
  }

  std::vector<VerificationReport> reports(primes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) reports[i] = verify_prime(primes[i], cfg);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(primes.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  return reports;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) {
    return std::all_of(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return c.pass; });
  });
}

std::optional<TableName> parse_table_name(const std::string& name) {
  if (name == "mp") return TableName::Mp;
  if (name == "h1") return TableName::H1;
  if (name == "h2") return TableName::H2;
  if (name == "invariants") return TableName::Invariants;
  return std::nullopt;
}

Table generate_table(TableName name, std::uint32_t max_p) {
  Table table;
  const auto primes = odd_primes_in_range(3, max_p);
  switch (name) {
    case TableName::Mp:
    case TableName::H2:
    case TableName::H1: {
      table.columns = {"p", "value"};
      const std::uint32_t want = name == TableName::H1 ? 1 : 3;
      for (std::uint32_t p : primes) {
        if (p % 4 != want) continue;
        const std::uint32_t v = name == TableName::Mp   ? brute_mp(p)
                                : name == TableName::H1 ? harmonic_sum(p, 1).value
                                                        : harmonic_sum(p, 2).value;
        table.rows.push_back({str(p), str(v)});
      }
      break;
    }
    case TableName::Invariants: {
      table.columns = {"p", "p_mod_8", "M_p", "h_minus", "u", "v", "norm", "h_plus", "L_minus1", "a", "b", "C_p"};
      for (std::uint32_t p : primes) {
        std::vector<std::string> row(table.columns.size());
        row[0] = str(p);
        row[1] = str(p % 8);
        row[2] = str(brute_mp(p));
        if (p % 4 == 3) {
          row[3] = str(static_cast<std::int64_t>(class_number_imag(p)));
        } else {
          const RealQuadData unit = fundamental_unit(p);
          row[4] = unit.u.get_str();
          row[5] = unit.v.get_str();
          row[6] = str(unit.norm);
          row[7] = str(static_cast<std::int64_t>(unit.h));
          row[8] = l_minus_one(p).lminus1.get_str();
          if (p % 8 == 1) {
            const QuarticDecomposition dec = decompose(p);
            row[9] = str(dec.a);
            row[10] = str(static_cast<std::int64_t>(dec.b_abs));
            row[11] = str(c_sign(PrimeContext(p), dec));
          }
        }
        table.rows.push_back(std::move(row));
      }
      break;
    }
  }
  return table;
}

}  // namespace qrlab
