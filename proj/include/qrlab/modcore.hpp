#pragma once

// Modular arithmetic over a prime field, residue symbols, and the small
// exact types (Gaussian integers, degree-2 extension elements) that the
// higher-level modules build on.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace qrlab {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
// Requires gcd(a, m) = 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);
std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Throws InvalidModulus unless p is an odd prime.
void require_odd_prime(std::uint64_t p);

struct ModInt {
  std::uint64_t value = 0;
  std::uint64_t modulus = 1;

  ModInt() = default;
  ModInt(std::int64_t v, std::uint64_t m) : value(reduce_mod(v, m)), modulus(m) {}

  static ModInt from_unsigned(std::uint64_t v, std::uint64_t m) {
    ModInt r;
    r.value = v % m;
    r.modulus = m;
    return r;
  }

  ModInt operator+(ModInt rhs) const;
  ModInt operator-(ModInt rhs) const;
  ModInt operator*(ModInt rhs) const;
  ModInt operator-() const;
  ModInt& operator+=(ModInt rhs) { return *this = *this + rhs; }
  ModInt& operator-=(ModInt rhs) { return *this = *this - rhs; }
  ModInt& operator*=(ModInt rhs) { return *this = *this * rhs; }

  ModInt pow(std::uint64_t exp) const;
  ModInt inverse() const;

  // Representative in (-m/2, m/2].
  std::int64_t centered() const;

  bool operator==(const ModInt&) const = default;
};

int legendre(std::int64_t a, std::uint64_t p);
int jacobi(std::int64_t a, std::uint64_t n);

// Rational 4-th power residue symbol: 0 if p | a, 1 if a is a fourth power
// mod p, -1 otherwise (quadratic non-residues included). Requires p = 1 mod 4.
int quartic_symbol(std::int64_t a, std::uint64_t p);

// n! mod p by direct product; 0 once n >= p.
ModInt factorial_mod(std::uint64_t n, std::uint64_t p);

// #{0 < x < p/2 : x is a fourth power mod p}, p = 1 mod 4.
std::uint64_t count_fourth_power_residues_half(std::uint64_t p);

// Tonelli-Shanks. Returns the smaller of the two roots, or nullopt for a
// non-residue. sqrt of 0 is 0.
std::optional<ModInt> sqrt_mod(ModInt a);

std::uint64_t smallest_primitive_root(std::uint64_t p);

// legendre(t, p) for every t in [0, p), built by marking squares.
std::vector<std::int8_t> legendre_table(std::uint64_t p);

// An odd prime together with its canonical primitive root g. The choice of g
// plays the role of the prime ideal above p: every character table in the
// library is defined relative to it.
class PrimeContext {
 public:
  explicit PrimeContext(std::uint64_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t residue_class() const { return p_ % 8; }
  std::uint32_t g() const { return g_; }
  bool has_i() const { return p_ % 4 == 1; }
  // g^{(p-1)/4}, a square root of -1; throws unless p = 1 mod 4.
  std::uint32_t i_image() const;

  ModInt mod(std::int64_t v) const { return ModInt(v, p_); }

  // Lazily built, then shared read-only between copies of the context.
  ModInt factorial(std::uint64_t n) const;
  std::span<const std::int8_t> legendre_table() const;
  // g^k mod p for k in [0, p-1).
  std::span<const std::uint32_t> power_table() const;
  // Quadratic residues x with 0 < x < p/2, ascending.
  std::span<const std::uint32_t> half_residues() const;

 private:
  struct Cache;

  std::uint32_t p_;
  std::uint32_t g_;
  std::shared_ptr<Cache> cache_;
};

// x + y*s with s^2 = d, d a fixed non-residue mod p: the field of p^2 elements.
struct QuadExtElem {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t d = 0;
  std::uint64_t p = 0;

  static QuadExtElem base(ModInt a, std::uint64_t d);

  QuadExtElem operator+(const QuadExtElem& rhs) const;
  QuadExtElem operator-(const QuadExtElem& rhs) const;
  QuadExtElem operator*(const QuadExtElem& rhs) const;
  QuadExtElem pow(std::uint64_t exp) const;
  QuadExtElem inverse() const;
  bool in_base_field() const { return y == 0; }
  bool operator==(const QuadExtElem&) const = default;
};

// Smallest quadratic non-residue mod p.
std::uint64_t smallest_nonresidue(std::uint64_t p);

// A square root of a base-field element inside F_p[s]/(s^2 - d). Always
// exists; lands in the base field iff a is a residue.
QuadExtElem sqrt_in_extension(ModInt a, std::uint64_t d);

struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  GaussianInt operator+(GaussianInt rhs) const { return {re + rhs.re, im + rhs.im}; }
  GaussianInt operator-(GaussianInt rhs) const { return {re - rhs.re, im - rhs.im}; }
  GaussianInt operator*(GaussianInt rhs) const {
    return {re * rhs.re - im * rhs.im, re * rhs.im + im * rhs.re};
  }
  GaussianInt conj() const { return {re, -im}; }
  std::int64_t norm() const { return re * re + im * im; }
  bool operator==(const GaussianInt&) const = default;
};

// Image of z under Z[i] -> F_p, i -> i_image.
ModInt reduce(GaussianInt z, std::uint32_t i_image, std::uint64_t p);

}  // namespace qrlab
