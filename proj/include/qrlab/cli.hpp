#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qrlab {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Optional key=value defaults; command-line flags win.
struct CliConfig {
  std::optional<long> precision;
  std::optional<unsigned> jobs;
  std::optional<std::string> output_dir;
  std::optional<std::uint32_t> pairwise_product_max;
};

// Keys: precision, jobs, output_dir, pairwise_product_max. '#' starts a comment.
// Throws InvalidArgument on unknown keys or malformed lines.
CliConfig parse_config(std::istream& in);

// args[0] is the program name. Output that a user would redirect goes to
// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrlab
