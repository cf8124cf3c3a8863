#include "qrlab/modcore.hpp"

#include <mutex>
#include <string>

#include "qrlab/error.hpp"

namespace qrlab {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) fail(ErrorKind::InvalidArgument, "inverse of non-unit " + std::to_string(a) + " mod " + std::to_string(m));
  return reduce_mod(t, m);
}

std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m) {
  const std::int64_t sm = static_cast<std::int64_t>(m);
  std::int64_t r = a % sm;
  if (r < 0) r += sm;
  return static_cast<std::uint64_t>(r);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    fail(ErrorKind::InvalidModulus, std::to_string(p) + " is not an odd prime");
  }
}

ModInt ModInt::operator+(ModInt rhs) const {
  std::uint64_t s = value + rhs.value;
  if (s >= modulus) s -= modulus;
  return from_unsigned(s, modulus);
}

ModInt ModInt::operator-(ModInt rhs) const {
  return from_unsigned(value >= rhs.value ? value - rhs.value : value + modulus - rhs.value, modulus);
}

ModInt ModInt::operator*(ModInt rhs) const { return from_unsigned(mul_mod(value, rhs.value, modulus), modulus); }

ModInt ModInt::operator-() const { return from_unsigned(value == 0 ? 0 : modulus - value, modulus); }

ModInt ModInt::pow(std::uint64_t exp) const { return from_unsigned(pow_mod(value, exp, modulus), modulus); }

ModInt ModInt::inverse() const { return from_unsigned(inv_mod(value, modulus), modulus); }

std::int64_t ModInt::centered() const {
  const auto v = static_cast<std::int64_t>(value);
  return 2 * value > modulus ? v - static_cast<std::int64_t>(modulus) : v;
}

int legendre(std::int64_t a, std::uint64_t p) {
  require_odd_prime(p);
  const std::uint64_t r = reduce_mod(a, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int jacobi(std::int64_t a, std::uint64_t n) {
  if (n == 0 || n % 2 == 0) fail(ErrorKind::InvalidModulus, "Jacobi symbol needs an odd positive modulus, got " + std::to_string(n));
  std::uint64_t x = reduce_mod(a, n);
  int sign = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      if (n % 8 == 3 || n % 8 == 5) sign = -sign;
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) sign = -sign;
    x %= n;
  }
  return n == 1 ? sign : 0;
}

int quartic_symbol(std::int64_t a, std::uint64_t p) {
  require_odd_prime(p);
  if (p % 4 != 1) fail(ErrorKind::UnsupportedResidueClass, "quartic symbol needs p = 1 mod 4, got " + std::to_string(p));
  const std::uint64_t r = reduce_mod(a, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 4, p) == 1 ? 1 : -1;
}

ModInt factorial_mod(std::uint64_t n, std::uint64_t p) {
  if (n >= p) return ModInt::from_unsigned(0, p);
  ModInt f = ModInt::from_unsigned(1, p);
  for (std::uint64_t k = 2; k <= n; ++k) f *= ModInt::from_unsigned(k, p);
  return f;
}

std::uint64_t count_fourth_power_residues_half(std::uint64_t p) {
  require_odd_prime(p);
  if (p % 4 != 1) fail(ErrorKind::UnsupportedResidueClass, "fourth-power count needs p = 1 mod 4, got " + std::to_string(p));
  // x -> x^4 covers the fourth powers; x and p - x give the same value, so
  // half the range suffices.
  std::vector<bool> is_fourth(p, false);
  for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x) {
    const std::uint64_t sq = x * x % p;
    is_fourth[sq * sq % p] = true;
  }
  std::uint64_t count = 0;
  for (std::uint64_t x = 1; 2 * x < p; ++x) count += is_fourth[x] ? 1 : 0;
  return count;
}

std::optional<ModInt> sqrt_mod(ModInt a) {
  const std::uint64_t p = a.modulus;
  require_odd_prime(p);
  if (a.value == 0) return a;
  if (pow_mod(a.value, (p - 1) / 2, p) != 1) return std::nullopt;

  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  const std::uint64_t z = smallest_nonresidue(p);
  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a.value, q, p);
  std::uint64_t r = pow_mod(a.value, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  if (r > p - r) r = p - r;
  return ModInt::from_unsigned(r, p);
}

std::uint64_t smallest_nonresidue(std::uint64_t p) {
  require_odd_prime(p);
  for (std::uint64_t z = 2;; ++z) {
    if (pow_mod(z, (p - 1) / 2, p) == p - 1) return z;
  }
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  require_odd_prime(p);
  std::vector<std::uint64_t> factors;
  std::uint64_t n = p - 1;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      factors.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) factors.push_back(n);
  for (std::uint64_t g = 2;; ++g) {
    bool generator = true;
    for (std::uint64_t q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
}

std::vector<std::int8_t> legendre_table(std::uint64_t p) {
  require_odd_prime(p);
  std::vector<std::int8_t> table(p, -1);
  table[0] = 0;
  for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x) table[x * x % p] = 1;
  return table;
}

struct PrimeContext::Cache {
  std::once_flag factorial_once;
  std::vector<std::uint32_t> factorials;
  std::once_flag legendre_once;
  std::vector<std::int8_t> legendre;
  std::once_flag power_once;
  std::vector<std::uint32_t> powers;
  std::once_flag half_once;
  std::vector<std::uint32_t> half_residues;
};

PrimeContext::PrimeContext(std::uint64_t p) {
  require_odd_prime(p);
  if (p >= (1ull << 32)) fail(ErrorKind::InvalidModulus, "prime context limited to 32-bit primes");
  p_ = static_cast<std::uint32_t>(p);
  g_ = static_cast<std::uint32_t>(smallest_primitive_root(p));
  cache_ = std::make_shared<Cache>();
}

std::uint32_t PrimeContext::i_image() const {
  if (!has_i()) fail(ErrorKind::UnsupportedResidueClass, "no square root of -1 mod " + std::to_string(p_));
  return static_cast<std::uint32_t>(pow_mod(g_, (p_ - 1) / 4, p_));
}

ModInt PrimeContext::factorial(std::uint64_t n) const {
  if (n >= p_) return mod(0);
  std::call_once(cache_->factorial_once, [this] {
    auto& f = cache_->factorials;
    f.resize(p_);
    f[0] = 1;
    for (std::uint64_t k = 1; k < p_; ++k) f[k] = static_cast<std::uint32_t>(f[k - 1] * k % p_);
  });
  return ModInt::from_unsigned(cache_->factorials[n], p_);
}

std::span<const std::int8_t> PrimeContext::legendre_table() const {
  std::call_once(cache_->legendre_once, [this] { cache_->legendre = qrlab::legendre_table(p_); });
  return cache_->legendre;
}

std::span<const std::uint32_t> PrimeContext::power_table() const {
  std::call_once(cache_->power_once, [this] {
    auto& pw = cache_->powers;
    pw.resize(p_ - 1);
    std::uint64_t x = 1;
    for (std::uint32_t k = 0; k + 1 < p_; ++k) {
      pw[k] = static_cast<std::uint32_t>(x);
      x = x * g_ % p_;
    }
  });
  return cache_->powers;
}

std::span<const std::uint32_t> PrimeContext::half_residues() const {
  const auto table = legendre_table();
  std::call_once(cache_->half_once, [this, table] {
    for (std::uint32_t x = 1; 2 * x < p_; ++x) {
      if (table[x] == 1) cache_->half_residues.push_back(x);
    }
  });
  return cache_->half_residues;
}

QuadExtElem QuadExtElem::base(ModInt a, std::uint64_t d) { return {a.value, 0, d % a.modulus, a.modulus}; }

QuadExtElem QuadExtElem::operator+(const QuadExtElem& rhs) const {
  return {(x + rhs.x) % p, (y + rhs.y) % p, d, p};
}

QuadExtElem QuadExtElem::operator-(const QuadExtElem& rhs) const {
  return {(x + p - rhs.x) % p, (y + p - rhs.y) % p, d, p};
}

QuadExtElem QuadExtElem::operator*(const QuadExtElem& rhs) const {
  const std::uint64_t xx = (mul_mod(x, rhs.x, p) + mul_mod(mul_mod(y, rhs.y, p), d, p)) % p;
  const std::uint64_t yy = (mul_mod(x, rhs.y, p) + mul_mod(y, rhs.x, p)) % p;
  return {xx, yy, d, p};
}

QuadExtElem QuadExtElem::pow(std::uint64_t exp) const {
  QuadExtElem result{1 % p, 0, d, p};
  QuadExtElem b = *this;
  while (exp > 0) {
    if (exp & 1) result = result * b;
    b = b * b;
    exp >>= 1;
  }
  return result;
}

QuadExtElem QuadExtElem::inverse() const {
  // (x + ys)^{-1} = (x - ys) / (x^2 - d y^2)
  const std::uint64_t n = (mul_mod(x, x, p) + p - mul_mod(mul_mod(y, y, p), d, p)) % p;
  const std::uint64_t ni = inv_mod(n, p);
  return {mul_mod(x, ni, p), mul_mod((p - y) % p, ni, p), d, p};
}

QuadExtElem sqrt_in_extension(ModInt a, std::uint64_t d) {
  if (auto r = sqrt_mod(a)) return QuadExtElem::base(*r, d);
  // a = d * y^2 with y in the base field, so sqrt(a) = y s.
  const ModInt ratio = a * ModInt::from_unsigned(d, a.modulus).inverse();
  const auto y = sqrt_mod(ratio);
  if (!y) fail(ErrorKind::InvalidArgument, "extension modulus " + std::to_string(d) + " is not a non-residue");
  return {0, y->value, d % a.modulus, a.modulus};
}

ModInt reduce(GaussianInt z, std::uint32_t i_image, std::uint64_t p) {
  return ModInt(z.re, p) + ModInt(z.im, p) * ModInt::from_unsigned(i_image, p);
}

}  // namespace qrlab
