#pragma once

// Per-prime identity runners, harmonic sums, the named check registry used by
// `qrlab verify`, and the table generators behind `qrlab table`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrlab/analytic.hpp"
#include "qrlab/modcore.hpp"

namespace qrlab {

struct MpSignReport {
  std::uint32_t p = 0;
  std::uint32_t m_p = 0;   // product of residues in (0, p/2), mod p
  std::uint64_t r = 0;     // fourth powers in (0, p/2)
  int predicted = 0;       // (-1)^{1+r}
  bool pass = false;
};

struct MpFactorialReport {
  std::uint32_t p = 0;
  std::uint32_t m_p = 0;
  int c_p = 0;
  int jacobi_symbol_b_over_a = 0;
  std::uint32_t floor_p_8 = 0;
  int sigma = 0;  // 0 when the computed value is not +-1
  int beta_p = 0;
  bool pass = false;
};

struct HarmonicRecord {
  std::uint32_t p = 0;
  unsigned n = 0;
  std::uint32_t value = 0;
};

std::uint32_t brute_mp(std::uint32_t p);
std::uint32_t brute_mp(const PrimeContext& ctx);

MpSignReport verify_mp_sign(std::uint32_t p);
MpSignReport verify_mp_sign(const PrimeContext& ctx);

MpFactorialReport verify_mp_factorial(std::uint32_t p);
MpFactorialReport verify_mp_factorial(const PrimeContext& ctx);

// sum over quadratic residues 0 < x < p/2 of x^{-n}, mod p.
HarmonicRecord harmonic_sum(std::uint32_t p, unsigned n);
// H_k^{(1)} = sum_{x=1}^{k} 1/x mod m, m = p or p^2 (x coprime to p).
std::uint64_t harmonic_number_mod(std::uint64_t k, std::uint32_t p, std::uint64_t m);

// Square-root ratio eps^{h/2} / (((p-1)/4)! J^{1/2}) modulo a prime above p,
// computed in F_{p^2} with canonical roots. It squares to 1 whenever the
// unit and Jacobi-sum congruences hold; the sign it lands on depends on the
// square-root choices, so it is reported, not compared with beta_p.
struct BetaRatio {
  std::uint32_t p = 0;
  bool squares_to_one = false;
  int ratio = 0;  // +-1 when squares_to_one
};
BetaRatio beta_ratio_check(const PrimeContext& ctx, const RealQuadData& unit);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string computed;
  std::string expected;
  std::int64_t micros = 0;
};

struct VerificationReport {
  std::uint32_t prime = 0;
  std::vector<CheckResult> checks;
};

struct ScanConfig {
  std::vector<std::string> checks;
  std::uint32_t min_p = 3;
  std::uint32_t max_p = 3;
  unsigned jobs = 1;
  mpfr_prec_t precision = kDefaultPrecision;
  bool all_r = false;
  // Record wall time per check; off by default so reports are reproducible.
  bool timing = false;
  std::uint32_t pairwise_product_max = 200;
};

const std::vector<std::string>& known_checks();
bool is_known_check(const std::string& name);
// Whether the named check is defined for p (residue class, size caps).
bool check_applies(const std::string& name, std::uint32_t p, const ScanConfig& cfg);

// Runs every applicable named check on one prime. Identity violations are
// caught and reported as failed checks.
VerificationReport verify_prime(std::uint32_t p, const ScanConfig& cfg);

// Runs the configured checks on every odd prime in [min_p, max_p]; primes
// where no check applies are omitted. Output is sorted by prime and does not
// depend on cfg.jobs. Throws InvalidArgument for unknown check names.
std::vector<VerificationReport> run_scan(const ScanConfig& cfg);

bool all_pass(const std::vector<VerificationReport>& reports);

enum class TableName { Mp, H1, H2, Invariants };

std::optional<TableName> parse_table_name(const std::string& name);

// Cells are strings already formatted for output; an empty cell means "not
// defined for this prime".
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

Table generate_table(TableName name, std::uint32_t max_p);

}  // namespace qrlab
