#pragma once

#include <stdexcept>
#include <string>

namespace qrlab {

enum class ErrorKind {
  InvalidModulus,
  UnsupportedResidueClass,
  InvalidArgument,
  IdentityViolation,
  Precision,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library; the kind tells callers (and the CLI
// exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace qrlab
