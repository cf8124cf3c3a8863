#include <atomic>

#include "qrlab/kernels.hpp"

namespace qrlab::kernels {

namespace {

// -1: auto-detect
std::atomic<int> g_forced{-1};

}  // namespace

const char* to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
  static const Isa detected = avx2::available() ? Isa::Avx2 : Isa::Scalar;
  return detected;
}

Isa active_isa() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced < 0) return detected_isa();
  const auto isa = static_cast<Isa>(forced);
  return isa == Isa::Avx2 && detected_isa() != Isa::Avx2 ? Isa::Scalar : isa;
}

void force_isa(std::optional<Isa> isa) { g_forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed); }

std::uint32_t mod_product(std::span<const std::uint32_t> xs, std::uint32_t p) {
  if (active_isa() == Isa::Avx2 && p % 2 == 1 && p < avx2::kMaxProductModulus) return avx2::mod_product(xs, p);
  return scalar::mod_product(xs, p);
}

std::vector<std::uint32_t> binomial_transform(std::span<const std::uint32_t> coeffs, std::size_t kmax,
                                              std::uint32_t p) {
  if (active_isa() == Isa::Avx2 && p < avx2::kMaxTransformModulus && coeffs.size() < (std::size_t{1} << 23)) {
    return avx2::binomial_transform(coeffs, kmax, p);
  }
  return scalar::binomial_transform(coeffs, kmax, p);
}

}  // namespace qrlab::kernels
