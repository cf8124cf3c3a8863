#include "qrlab/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qrlab/classfield.hpp"
#include "qrlab/cyclotomic.hpp"
#include "qrlab/error.hpp"
#include "qrlab/kernels.hpp"
#include "qrlab/quartic.hpp"
#include "qrlab/report.hpp"
#include "qrlab/verify.hpp"

namespace qrlab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::vector<std::string>& parts) {
  std::vector<std::string> out;
  for (const auto& part : parts) {
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!trim(item).empty()) out.push_back(trim(item));
    }
  }
  return out;
}

// Writes through `out` unless a path is given.
class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path, const std::optional<std::string>& dir) : stream_(&fallback) {
    if (path.empty()) return;
    std::filesystem::path target(path);
    if (dir && target.is_relative()) target = std::filesystem::path(*dir) / target;
    file_.open(target);
    if (!file_) fail(ErrorKind::InvalidArgument, "cannot open output file " + target.string());
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void print_inspect(std::ostream& out, std::uint32_t p, mpfr_prec_t prec) {
  const PrimeContext ctx(p);
  out << "prime: " << p << '\n';
  out << "p_mod_8: " << p % 8 << '\n';
  out << "primitive_root: " << ctx.g() << '\n';
  out << "legendre_2: " << legendre(2, p) << '\n';
  out << "M_p: " << brute_mp(ctx) << '\n';
  if (p > 3) {
    const ResidueSums s = residue_sums(p);
    out << "A_p: " << s.residues << '\n';
    out << "B_p: " << s.nonresidues << '\n';
    out << "A_p_closed_form: " << a_p_closed_form(p) << '\n';
  }
  if (p % 4 == 3) {
    out << "h_minus: " << class_number_imag(p) << '\n';
  } else {
    out << "i_image: " << ctx.i_image() << '\n';
    out << "fourth_powers_below_half: " << count_fourth_power_residues_half(p) << '\n';
    const RealQuadData unit = fundamental_unit(p);
    out << "unit_u: " << unit.u.get_str() << '\n';
    out << "unit_v: " << unit.v.get_str() << '\n';
    out << "unit_norm: " << unit.norm << '\n';
    out << "regulator: " << unit.regulator.to_string(20) << '\n';
    out << "h_plus: " << unit.h << '\n';
    const LValueData l = l_minus_one(p);
    out << "B_2_chi: " << l.b2chi.get_str() << '\n';
    out << "L_minus1: " << l.lminus1.get_str() << '\n';
    const UnitCongruence uc = unit_congruence_check(unit);
    out << "a_p_mod_p: " << uc.a_p.value << '\n';
    out << "b_p_mod_p: " << uc.b_p.value << '\n';
    out << "W_p: " << w_product(p, prec).to_string(20) << '\n';
    if (p % 8 == 1) {
      const QuarticDecomposition dec = decompose(p);
      const GaussianInt j = jacobi_sum(ctx);
      out << "a: " << dec.a << '\n';
      out << "b_abs: " << dec.b_abs << '\n';
      out << "signed_b: " << j.im / 4 << '\n';
      out << "jacobi_sum: " << j.re << (j.im < 0 ? "" : "+") << j.im << "i\n";
      out << "C_p: " << c_sign(ctx, dec) << '\n';
      const MpFactorialReport t2 = verify_mp_factorial(ctx);
      out << "sigma: " << t2.sigma << '\n';
      out << "beta_p: " << t2.beta_p << '\n';
      const BetaRatio br = beta_ratio_check(ctx, unit);
      out << "beta_ratio_squares_to_one: " << (br.squares_to_one ? "true" : "false") << '\n';
    }
  }

  ScanConfig cfg;
  cfg.checks = known_checks();
  cfg.precision = prec;
  cfg.min_p = cfg.max_p = p;
  const VerificationReport rep = verify_prime(p, cfg);
  for (const auto& c : rep.checks) {
    out << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " computed=" << c.computed
        << " expected=" << c.expected << '\n';
  }
}

}  // namespace

CliConfig parse_config(std::istream& in) {
  CliConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorKind::InvalidArgument, "config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "precision") {
        cfg.precision = std::stol(value);
      } else if (key == "jobs") {
        cfg.jobs = static_cast<unsigned>(std::stoul(value));
      } else if (key == "output_dir") {
        cfg.output_dir = value;
      } else if (key == "pairwise_product_max") {
        cfg.pairwise_product_max = static_cast<std::uint32_t>(std::stoul(value));
      } else {
        fail(ErrorKind::InvalidArgument, "config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      fail(ErrorKind::InvalidArgument, "config line " + std::to_string(lineno) + ": bad value for '" + key + "'");
    }
  }
  return cfg;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qrlab: products of quadratic residues and related identities, verified prime by prime"};
  app.require_subcommand(1);
  std::string config_path;
  std::string isa = "auto";
  app.add_option("--config", config_path, "key=value defaults (precision, jobs, output_dir, pairwise_product_max)");
  app.add_option("--isa", isa, "kernel dispatch: auto, scalar or avx2")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  auto* verify = app.add_subcommand("verify", "run named checks over a range of primes");
  std::vector<std::string> check_args;
  std::uint32_t min_p = 3, max_p = 3;
  unsigned jobs = 1;
  long precision = 256;
  std::string format = "json", out_path;
  bool all_r = false, timing = false;
  verify->add_option("--check", check_args, "check names, comma separated")->required();
  verify->add_option("--min", min_p, "smallest prime")->required();
  verify->add_option("--max", max_p, "largest prime")->required();
  auto* jobs_opt = verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  auto* prec_opt = verify->add_option("--precision", precision, "bits for numeric checks")->check(CLI::Range(64L, 1L << 20));
  verify->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", out_path, "output file (default stdout)");
  verify->add_flag("--all-r", all_r, "sweep every r in the Stickelberger check");
  verify->add_flag("--timing", timing, "record per-check wall time in micros");

  auto* table = app.add_subcommand("table", "regenerate a data table");
  std::string table_name;
  std::uint32_t table_max = 100;
  std::string table_format = "csv", table_out;
  table->add_option("--name", table_name, "mp, h1, h2 or invariants")->required()->check(
      CLI::IsMember({"mp", "h1", "h2", "invariants"}));
  table->add_option("--max", table_max, "largest prime")->required()->check(CLI::Range(3u, 1u << 30));
  table->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", table_out, "output file (default stdout)");

  auto* inspect = app.add_subcommand("inspect", "print every quantity attached to one prime");
  std::uint32_t inspect_p = 0;
  long inspect_prec = 256;
  inspect->add_option("-p", inspect_p, "odd prime")->required();
  auto* inspect_prec_opt =
      inspect->add_option("--precision", inspect_prec, "bits for numeric checks")->check(CLI::Range(64L, 1L << 20));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    CliConfig cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) fail(ErrorKind::InvalidArgument, "cannot read config file " + config_path);
      cfg = parse_config(in);
    }
    if (isa == "scalar") {
      kernels::force_isa(kernels::Isa::Scalar);
    } else if (isa == "avx2") {
      kernels::force_isa(kernels::Isa::Avx2);
    } else {
      kernels::force_isa(std::nullopt);
    }

    if (*verify) {
      ScanConfig scan;
      scan.checks = split_commas(check_args);
      for (const auto& name : scan.checks) {
        if (!is_known_check(name)) {
          err << "unknown check '" << name << "'\n";
          return kExitUsage;
        }
      }
      if (min_p > max_p) {
        err << "--min exceeds --max\n";
        return kExitUsage;
      }
      scan.min_p = min_p;
      scan.max_p = max_p;
      scan.jobs = jobs_opt->count() ? jobs : cfg.jobs.value_or(1);
      scan.precision = prec_opt->count() ? precision : cfg.precision.value_or(256);
      scan.all_r = all_r;
      scan.timing = timing;
      if (cfg.pairwise_product_max) scan.pairwise_product_max = *cfg.pairwise_product_max;
      const auto reports = run_scan(scan);
      Sink sink(out, out_path, cfg.output_dir);
      if (format == "csv") {
        write_csv(sink.get(), reports);
      } else {
        write_json_lines(sink.get(), reports);
      }
      return all_pass(reports) ? kExitOk : kExitCheckFailed;
    }

    if (*table) {
      const Table t = generate_table(*parse_table_name(table_name), table_max);
      Sink sink(out, table_out, cfg.output_dir);
      if (table_format == "csv") {
        write_table_csv(sink.get(), t);
      } else {
        write_table_json_lines(sink.get(), t);
      }
      return kExitOk;
    }

    if (*inspect) {
      const long prec = inspect_prec_opt->count() ? inspect_prec : cfg.precision.value_or(256);
      print_inspect(out, inspect_p, prec);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.kind() == ErrorKind::IdentityViolation ? kExitCheckFailed : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qrlab
