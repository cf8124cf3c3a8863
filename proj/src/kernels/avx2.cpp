#include <algorithm>

#include "qrlab/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define QRLAB_X86 1
#include <immintrin.h>
#else
#define QRLAB_X86 0
#endif

namespace qrlab::kernels::avx2 {

#if QRLAB_X86

namespace {

// -p^{-1} mod 2^32 by Newton iteration; p odd.
std::uint32_t neg_inverse_32(std::uint32_t p) {
  std::uint32_t inv = p;
  for (int i = 0; i < 5; ++i) inv *= 2u - p * inv;
  return 0u - inv;
}

std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Montgomery product a*b*2^{-32} mod p in each 64-bit lane (values in the
// low halves, all < p < 2^31).
__attribute__((target("avx2"))) inline __m256i mont_mul(__m256i a, __m256i b, __m256i p, __m256i pinv) {
  const __m256i t = _mm256_mul_epu32(a, b);
  const __m256i m = _mm256_mul_epu32(t, pinv);
  const __m256i u = _mm256_srli_epi64(_mm256_add_epi64(t, _mm256_mul_epu32(m, p)), 32);
  const __m256i keep = _mm256_cmpgt_epi64(p, u);
  return _mm256_sub_epi64(u, _mm256_andnot_si256(keep, p));
}

}  // namespace

bool available() { return __builtin_cpu_supports("avx2"); }

__attribute__((target("avx2"))) std::uint32_t mod_product(std::span<const std::uint32_t> xs, std::uint32_t p) {
  const __m256i pv = _mm256_set1_epi64x(p);
  const __m256i pinv = _mm256_set1_epi64x(neg_inverse_32(p));
  __m256i acc0 = _mm256_set1_epi64x(1);
  __m256i acc1 = acc0;

  const std::size_t n = xs.size();
  const std::size_t vec_n = n - n % 8;
  const std::uint32_t* data = xs.data();
  for (std::size_t i = 0; i < vec_n; i += 8) {
    const __m256i x0 = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(data + i)));
    const __m256i x1 = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(data + i + 4)));
    acc0 = mont_mul(acc0, x0, pv, pinv);
    acc1 = mont_mul(acc1, x1, pv, pinv);
  }

  alignas(32) std::uint64_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc0);
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes + 4), acc1);
  std::uint64_t r = 1 % p;
  for (std::uint64_t lane : lanes) r = r * lane % p;
  for (std::size_t i = vec_n; i < n; ++i) r = r * data[i] % p;
  // Each vector element contributed one factor of 2^{-32}.
  const std::uint64_t radix = (std::uint64_t{1} << 32) % p;
  return static_cast<std::uint32_t>(r * pow_mod_u64(radix, vec_n, p) % p);
}

__attribute__((target("avx2"))) std::vector<std::uint32_t> binomial_transform(
    std::span<const std::uint32_t> coeffs, std::size_t kmax, std::uint32_t p) {
  constexpr std::size_t kSlack = 16;
  // Rows are stored shifted by one so that index 0 is a permanent zero and
  // row[k-1] is always addressable.
  std::vector<std::uint32_t> cur(kmax + 2 + kSlack, 0);
  std::vector<std::uint32_t> next(kmax + 2 + kSlack, 0);
  std::vector<std::uint64_t> acc(kmax + 1 + kSlack, 0);
  cur[1] = 1 % p;
  next[1] = cur[1];

  const __m256i pv32 = _mm256_set1_epi32(static_cast<int>(p));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const std::size_t top = std::min(j, kmax);
    const std::uint32_t c = coeffs[j];
    if (c != 0) {
      const __m256i cv = _mm256_set1_epi64x(c);
      std::size_t k = 0;
      for (; k + 4 <= top + 1; k += 4) {
        const __m256i r = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(&cur[k + 1])));
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&acc[k]));
        a = _mm256_add_epi64(a, _mm256_mul_epu32(r, cv));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(&acc[k]), a);
      }
      for (; k <= top; ++k) acc[k] += std::uint64_t{c} * cur[k + 1];
    }

    const std::size_t upto = std::min(j + 1, kmax);
    for (std::size_t k = 1; k <= upto; k += 8) {
      const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&cur[k + 1]));
      const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&cur[k]));
      __m256i s = _mm256_add_epi32(hi, lo);
      const __m256i keep = _mm256_cmpgt_epi32(pv32, s);
      s = _mm256_sub_epi32(s, _mm256_andnot_si256(keep, pv32));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(&next[k + 1]), s);
    }
    // Lanes past kmax may hold values from the overrun; they never feed back
    // into indices <= kmax.
    std::swap(cur, next);
  }

  std::vector<std::uint32_t> out(kmax + 1);
  for (std::size_t k = 0; k <= kmax; ++k) out[k] = static_cast<std::uint32_t>(acc[k] % p);
  return out;
}

#else

bool available() { return false; }

std::uint32_t mod_product(std::span<const std::uint32_t> xs, std::uint32_t p) { return scalar::mod_product(xs, p); }

std::vector<std::uint32_t> binomial_transform(std::span<const std::uint32_t> coeffs, std::size_t kmax,
                                              std::uint32_t p) {
  return scalar::binomial_transform(coeffs, kmax, p);
}

#endif

}  // namespace qrlab::kernels::avx2
