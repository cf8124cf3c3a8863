#include "qrlab/error.hpp"

namespace qrlab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidModulus: return "invalid-modulus";
    case ErrorKind::UnsupportedResidueClass: return "unsupported-residue-class";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::IdentityViolation: return "identity-violation";
    case ErrorKind::Precision: return "precision";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace qrlab
