#include "qrlab/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

namespace qrlab {

namespace {

mpfr_prec_t joint(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, other.precision());
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec) {
  BigFloat r(1, prec);
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator+(const BigFloat& o) const {
  BigFloat r(joint(*this, o));
  mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-(const BigFloat& o) const {
  BigFloat r(joint(*this, o));
  mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator*(const BigFloat& o) const {
  BigFloat r(joint(*this, o));
  mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator/(const BigFloat& o) const {
  BigFloat r(joint(*this, o));
  mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

mpz_class BigFloat::round() const {
  mpz_class z;
  BigFloat r(precision());
  mpfr_round(r.v_, v_);
  mpfr_get_z(z.get_mpz_t(), r.v_, MPFR_RNDN);
  return z;
}

double BigFloat::log2_abs() const {
  if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
  BigFloat r(64);
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  mpfr_log2(r.v_, r.v_, MPFR_RNDN);
  return r.to_double();
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return buf.data();
}

#define QRLAB_UNARY(name, fn)                \
  BigFloat name(const BigFloat& x) {         \
    BigFloat r(x.precision());               \
    fn(r.get(), x.get(), MPFR_RNDN);         \
    return r;                                \
  }

QRLAB_UNARY(abs, mpfr_abs)
QRLAB_UNARY(sqrt, mpfr_sqrt)
QRLAB_UNARY(log, mpfr_log)
QRLAB_UNARY(exp, mpfr_exp)
QRLAB_UNARY(sin, mpfr_sin)
QRLAB_UNARY(cos, mpfr_cos)

#undef QRLAB_UNARY

BigFloat root(const BigFloat& x, unsigned long k) {
  BigFloat r(x.precision());
  mpfr_rootn_ui(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigComplex BigComplex::polar_unit(const BigFloat& theta) {
  BigFloat s(theta.precision()), c(theta.precision());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return {std::move(c), std::move(s)};
}

BigComplex BigComplex::operator*(const BigComplex& o) const {
  return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) { return *this = *this * o; }

BigComplex BigComplex::sqrt() const {
  // sqrt(z) = sqrt((|z| + re)/2) + i sign(im) sqrt((|z| - re)/2)
  const mpfr_prec_t prec = precision();
  const BigFloat r = abs();
  const BigFloat half = BigFloat::pow2(-1, prec);
  BigFloat a = qrlab::sqrt((r + re_) * half);
  BigFloat b = qrlab::sqrt((r - re_) * half);
  if (im_.sign() < 0) b = -b;
  if (re_.sign() <= 0 && im_.sign() == 0) return {BigFloat(prec), qrlab::sqrt(-re_)};
  return {std::move(a), std::move(b)};
}

std::string BigComplex::to_string(int digits) const {
  std::string s = re_.to_string(digits);
  const std::string i = im_.to_string(digits);
  s += (i.front() == '-' ? " - " : " + ");
  s += (i.front() == '-' ? i.substr(1) : i);
  s += "i";
  return s;
}

}  // namespace qrlab
