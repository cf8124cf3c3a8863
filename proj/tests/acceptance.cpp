// Acceptance suite: one PASS/FAIL line per criterion. With --criterion N only
// that criterion runs; exit status is nonzero if any selected criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qrlab/analytic.hpp"
#include "qrlab/classfield.hpp"
#include "qrlab/cli.hpp"
#include "qrlab/cyclotomic.hpp"
#include "qrlab/error.hpp"
#include "qrlab/primes.hpp"
#include "qrlab/quartic.hpp"
#include "qrlab/verify.hpp"

using namespace qrlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failing primes and keeps the first few for the report line.
class Failures {
 public:
  void add(std::uint32_t p, const std::string& what) {
    if (count_++ < 5) list_ << (count_ > 1 ? "; " : "") << "p=" << p << " " << what;
  }
  bool empty() const { return count_ == 0; }
  std::string summary(const std::string& ok) const {
    if (empty()) return ok;
    return std::to_string(count_) + " failure(s): " + list_.str();
  }

 private:
  std::size_t count_ = 0;
  std::ostringstream list_;
};

std::vector<std::uint32_t> primes_in_class(std::uint32_t lo, std::uint32_t hi, std::uint32_t mod, std::uint32_t rem) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p : odd_primes_in_range(lo, hi)) {
    if (p % mod == rem) out.push_back(p);
  }
  return out;
}

std::string cli_output(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "qrlab");
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str();
}

std::string second_column(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, joined;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (!joined.empty()) joined += ",";
    joined += line.substr(line.find(',') + 1);
  }
  return joined;
}

Outcome golden_tables() {
  const std::vector<std::pair<std::string, std::string>> expected{
      {"mp", "1,2,5,17,18,5,41,4,29,10,58,38,51"},
      {"h1", "1,7,4,23,12,18,10,13,17,83,40"},
      {"h2", "1,3,8,5,19,13,29,17,14,18,56,40,14"},
  };
  Outcome o;
  for (const auto& [name, values] : expected) {
    int code = 0;
    const std::string got = second_column(cli_output({"table", "--name", name, "--max", "100", "--format", "csv"}, code));
    if (code != 0 || got != values) {
      o.pass = false;
      o.detail += name + " got (" + got + ") ";
    }
  }
  if (o.pass) o.detail = "mp, h1, h2 match";
  return o;
}

Outcome mp_sign_scan() {
  ScanConfig cfg;
  cfg.checks = {"thm1"};
  cfg.min_p = 5;
  cfg.max_p = 100000;
  cfg.jobs = 1;
  Failures f;
  std::size_t n = 0;
  for (const auto& r : run_scan(cfg)) {
    ++n;
    if (!r.checks.at(0).pass) f.add(r.prime, r.checks[0].computed);
  }
  return {f.empty(), f.summary(std::to_string(n) + " primes p = 5 mod 8 below 1e5")};
}

Outcome mp_factorial_scan() {
  Failures f;
  const auto primes = primes_in_class(17, 10000, 8, 1);
  for (std::uint32_t p : primes) {
    const PrimeContext ctx(p);
    const ModInt cv = c_sign_value(ctx, decompose(p));
    if (cv.value != 1 && cv.value != p - 1) f.add(p, "C_p value " + std::to_string(cv.value));
    try {
      if (!verify_mp_factorial(ctx).pass) f.add(p, "sigma not +-1");
    } catch (const Error& e) {
      f.add(p, e.what());
    }
  }
  return {f.empty(), f.summary(std::to_string(primes.size()) + " primes p = 1 mod 8 below 1e4")};
}

Outcome residue_sum_closed_forms() {
  Failures f;
  const auto primes = odd_primes_in_range(5, 9999);
  for (std::uint32_t p : primes) {
    const auto s = residue_sums(p);
    if (s.residues + s.nonresidues != (std::uint64_t{p} * p - 1) / 8) f.add(p, "A+B");
    try {
      if (a_p_closed_form(p) != static_cast<std::int64_t>(s.residues)) f.add(p, "closed form A_p");
    } catch (const Error& e) {
      f.add(p, e.what());
    }
  }
  return {f.empty(), f.summary(std::to_string(primes.size()) + " primes 3 < p < 1e4")};
}

Outcome jacobi_suite() {
  Failures f;
  const auto primes = primes_in_class(17, 5000, 8, 1);
  for (std::uint32_t p : primes) {
    const PrimeContext ctx(p);
    const GaussianInt j = jacobi_sum(ctx);
    const auto d = decompose(p);
    if (j.re != d.a) f.add(p, "Re J");
    if (static_cast<std::uint64_t>(std::abs(j.im)) != 4 * d.b_abs) f.add(p, "Im J");
    if (j.norm() != p) f.add(p, "|J|^2");
    const auto [x, y] = jacobi_congruence_check(ctx, j);
    if (x != y) f.add(p, "congruence");
  }
  return {f.empty(), f.summary(std::to_string(primes.size()) + " primes p = 1 mod 8 below 5000")};
}

Outcome unit_congruence() {
  Failures f;
  const auto primes = primes_in_class(5, 5000, 4, 1);
  for (std::uint32_t p : primes) {
    const auto uc = unit_congruence_check(p);
    if (uc.a_p != uc.expected) f.add(p, std::to_string(uc.a_p.value) + " vs " + std::to_string(uc.expected.value));
  }
  return {f.empty(), f.summary(std::to_string(primes.size()) + " primes p = 1 mod 4 below 5000")};
}

Outcome stickelberger() {
  Failures f;
  std::size_t pairs = 0;
  auto run = [&](const PrimeContext& ctx, std::uint32_t r) {
    ++pairs;
    const auto rep = stickelberger_evaluate(ctx, r);
    const bool multiplicative = (rep.unit * factorial_mod(r, ctx.p())).value == ctx.p() - 1;
    if (!rep.pass() || !multiplicative) f.add(ctx.p(), "r=" + std::to_string(r));
  };
  for (std::uint32_t p : primes_in_class(17, 2000, 8, 1)) {
    const PrimeContext ctx(p);
    for (std::uint32_t r : default_stickelberger_rs(p)) run(ctx, r);
  }
  for (std::uint32_t p : {17u, 41u, 73u, 89u}) {
    const PrimeContext ctx(p);
    for (std::uint32_t r = 0; r <= p - 2; ++r) run(ctx, r);
  }
  return {f.empty(), f.summary(std::to_string(pairs) + " (p, r) pairs")};
}

std::string bits(const BigFloat& residual) {
  std::ostringstream s;
  s << residual.log2_abs();
  return s.str();
}

Outcome gauss_sums() {
  Failures f;
  double worst_quad = -1e9, worst_quart = -1e9;
  for (std::uint32_t p : odd_primes_in_range(3, 999)) {
    const auto c = quadratic_gauss_sum_check(p, 256);
    if (!c.within(100, p)) f.add(p, "quadratic residual 2^" + bits(c.residual));
    worst_quad = std::max(worst_quad, c.residual.log2_abs() - 0.5 * std::log2(p));
  }
  for (std::uint32_t p : primes_in_class(17, 500, 8, 1)) {
    const auto c = quartic_gauss_sum_check(PrimeContext(p), 256);
    if (!c.within(80, p)) f.add(p, "quartic residual 2^" + bits(c.residual));
    worst_quart = std::max(worst_quart, c.residual.log2_abs() - 0.5 * std::log2(p));
  }
  std::ostringstream ok;
  ok << "worst residual/sqrt(p): quadratic 2^" << worst_quad << ", quartic 2^" << worst_quart;
  return {f.empty(), f.summary(ok.str())};
}

Outcome w_product_values() {
  Failures f;
  double worst = -1e9;
  for (std::uint32_t p : primes_in_class(5, 500, 4, 1)) {
    const auto r = wp_closed_form_check(p, 256);
    if (!r.closed_form.within(80, p)) f.add(p, "closed form residual 2^" + bits(r.closed_form.residual));
    const BigFloat bound = BigFloat::pow2(-80, 256) * sqrt(BigFloat(static_cast<long>(p), 256));
    if (!(r.modulus_residual < bound)) f.add(p, "modulus residual 2^" + bits(r.modulus_residual));
    worst = std::max(worst, r.closed_form.residual.log2_abs() - 0.5 * std::log2(p));
  }
  std::ostringstream ok;
  ok << "worst residual/sqrt(p) 2^" << worst;
  return {f.empty(), f.summary(ok.str())};
}

Outcome square_products() {
  Failures f;
  double worst_ps = -1e9;
  for (std::uint32_t p : odd_primes_in_range(5, 499)) {
    const auto c = square_product_check(p, 256);
    if (!c.within(80, p)) f.add(p, "product over squares residual 2^" + bits(c.residual));
  }
  for (std::uint32_t p : primes_in_class(5, 200, 4, 1)) {
    const auto c = pairwise_sum_product_check(p, 256);
    if (!(c.residual.log2_abs() < -40)) f.add(p, "pairwise product residual 2^" + bits(c.residual));
    worst_ps = std::max(worst_ps, c.residual.log2_abs());
  }
  std::ostringstream ok;
  ok << "worst pairwise-product residual 2^" << worst_ps;
  return {f.empty(), f.summary(ok.str())};
}

Outcome harmonic_identities() {
  ScanConfig cfg;
  cfg.checks = {"harmonic-id", "wolstenholme"};
  cfg.min_p = 5;
  cfg.max_p = 9999;
  Failures f;
  std::size_t n = 0;
  for (const auto& r : run_scan(cfg)) {
    ++n;
    for (const auto& c : r.checks) {
      if (!c.pass) f.add(r.prime, c.name + " " + c.computed + " expected " + c.expected);
    }
  }
  return {f.empty(), f.summary(std::to_string(n) + " primes 3 < p < 1e4")};
}

Outcome determinism() {
  auto report = [](const std::string& jobs, int& code) {
    return cli_output({"verify", "--check", "thm1,thm2,stickelberger", "--min", "5", "--max", "500", "--jobs", jobs,
                       "--format", "json"},
                      code);
  };
  int c1 = 0, c8 = 0;
  const std::string a = report("1", c1);
  const std::string b = report("8", c8);
  const bool same = a == b && !a.empty();
  return {same && c1 == 0 && c8 == 0,
          same ? std::to_string(a.size()) + " bytes identical" : "reports differ"};
}

struct Criterion {
  int id;
  std::string title;
  double budget_s;  // 0: no runtime budget
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qrlab acceptance suite"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-12)");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "golden tables", 1, golden_tables},
      {2, "product of residues, p = 5 mod 8", 60, mp_sign_scan},
      {3, "product of residues, p = 1 mod 8", 120, mp_factorial_scan},
      {4, "residue sum closed forms", 0, residue_sum_closed_forms},
      {5, "Jacobi sums", 0, jacobi_suite},
      {6, "unit congruence", 0, unit_congruence},
      {7, "Stickelberger congruence", 0, stickelberger},
      {8, "numeric Gauss sums", 0, gauss_sums},
      {9, "explicit W_p", 0, w_product_values},
      {10, "products over squares", 0, square_products},
      {11, "harmonic identities", 0, harmonic_identities},
      {12, "report determinism", 0, determinism},
  };

  bool all = true;
  bool ran = false;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      o.pass = false;
      o.detail += " (over " + std::to_string(static_cast<int>(c.budget_s)) + " s budget)";
    }
    all = all && o.pass;
    std::printf("criterion %2d %-36s %s  %.2fs  %s\n", c.id, c.title.c_str(), o.pass ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all ? 0 : 1;
}
