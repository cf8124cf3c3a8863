#pragma once

// RAII value types over MPFR. Precision is carried by each value and passed
// explicitly to every constructor; there is no ambient precision state.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>

namespace qrlab {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec);
  BigFloat(long v, mpfr_prec_t prec);
  BigFloat(const mpz_class& v, mpfr_prec_t prec);
  BigFloat(const mpq_class& v, mpfr_prec_t prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat pi(mpfr_prec_t prec);
  // 2^e
  static BigFloat pow2(long e, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  BigFloat operator+(const BigFloat& o) const;
  BigFloat operator-(const BigFloat& o) const;
  BigFloat operator*(const BigFloat& o) const;
  BigFloat operator/(const BigFloat& o) const;
  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);

  bool operator<(const BigFloat& o) const { return mpfr_less_p(v_, o.v_) != 0; }
  bool operator>(const BigFloat& o) const { return mpfr_greater_p(v_, o.v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Nearest integer.
  mpz_class round() const;
  // log2(|x|), -inf for zero; useful for comparing residuals against 2^-k.
  double log2_abs() const;
  std::string to_string(int digits = 6) const;

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat root(const BigFloat& x, unsigned long k);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);

class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  static BigComplex from_int(long re, long im, mpfr_prec_t prec) {
    return {BigFloat(re, prec), BigFloat(im, prec)};
  }
  // exp(i*theta)
  static BigComplex polar_unit(const BigFloat& theta);

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  mpfr_prec_t precision() const { return re_.precision(); }

  BigComplex operator+(const BigComplex& o) const { return {re_ + o.re_, im_ + o.im_}; }
  BigComplex operator-(const BigComplex& o) const { return {re_ - o.re_, im_ - o.im_}; }
  BigComplex operator*(const BigComplex& o) const;
  BigComplex operator*(const BigFloat& s) const { return {re_ * s, im_ * s}; }
  BigComplex operator-() const { return {-re_, -im_}; }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);

  BigComplex conj() const { return {re_, -im_}; }
  BigComplex mul_i() const { return {-im_, re_}; }
  BigFloat abs() const { return hypot(re_, im_); }
  BigFloat norm() const { return re_ * re_ + im_ * im_; }
  BigFloat arg() const { return atan2(im_, re_); }
  // Principal square root (Re >= 0).
  BigComplex sqrt() const;

  std::string to_string(int digits = 6) const;

 private:
  BigFloat re_;
  BigFloat im_;
};

}  // namespace qrlab
