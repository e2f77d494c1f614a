#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "qq/rational.hpp"

namespace qq {

// Arbitrary-precision real number (MPFR, round-to-nearest).
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
  Real(const Rational& q, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(long v, mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_si(x_, v, MPFR_RNDN); }
  Real(double v, mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_d(x_, v, MPFR_RNDN); }
  Real(const Real& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(x_, 2); mpfr_swap(x_, o.x_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(x_, o.x_); return *this; }
  ~Real() { mpfr_clear(x_); }

  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }

  static mpfr_prec_t join(const Real& a, const Real& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
  }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(join(a, b)); mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN); return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(join(a, b)); mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN); return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(join(a, b)); mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN); return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(join(a, b)); mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN); return r;
  }
  Real operator-() const { Real r(prec()); mpfr_neg(r.x_, x_, MPFR_RNDN); return r; }
  Real& operator+=(const Real& o) { mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(x_, x_, o.x_, MPFR_RNDN); return *this; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) == 0; }

  int sign() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_); }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

  Real abs() const { Real r(prec()); mpfr_abs(r.x_, x_, MPFR_RNDN); return r; }
  Real sqrt() const { Real r(prec()); mpfr_sqrt(r.x_, x_, MPFR_RNDN); return r; }
  Real exp() const { Real r(prec()); mpfr_exp(r.x_, x_, MPFR_RNDN); return r; }
  Real log() const { Real r(prec()); mpfr_log(r.x_, x_, MPFR_RNDN); return r; }
  Real sin() const { Real r(prec()); mpfr_sin(r.x_, x_, MPFR_RNDN); return r; }
  Real cos() const { Real r(prec()); mpfr_cos(r.x_, x_, MPFR_RNDN); return r; }
  Real pow_si(long e) const { Real r(prec()); mpfr_pow_si(r.x_, x_, e, MPFR_RNDN); return r; }

  static Real pi(mpfr_prec_t prec) { Real r(prec); mpfr_const_pi(r.x_, MPFR_RNDN); return r; }
  static Real euler(mpfr_prec_t prec) { Real r(prec); mpfr_const_euler(r.x_, MPFR_RNDN); return r; }
  static Real log2c(mpfr_prec_t prec) { Real r(prec); mpfr_const_log2(r.x_, MPFR_RNDN); return r; }
  static Real zeta_ui(unsigned long j, mpfr_prec_t prec) {
    Real r(prec); mpfr_zeta_ui(r.x_, j, MPFR_RNDN); return r;
  }

  std::string str(size_t digits = 30) const {
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, x_, MPFR_RNDN);
    std::string body(s);
    mpfr_free_str(s);
    std::string sign;
    if (!body.empty() && body[0] == '-') { sign = "-"; body = body.substr(1); }
    return sign + "0." + body + "e" + std::to_string((long)e);
  }

 private:
  mpfr_t x_;
};

// Complex number over Real.
struct Complex {
  Real re, im;

  explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(const Rational& q, mpfr_prec_t prec) : re(q, prec), im(prec) {}

  mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  Complex conj() const { return {re, -im}; }
  Real abs() const { return (re * re + im * im).sqrt(); }

  Complex exp() const {
    Real m = re.exp();
    return {m * im.cos(), m * im.sin()};
  }
  // Principal-branch logarithm; arg in (-pi, pi].
  Complex log() const {
    Real r = abs().log();
    Real a(prec());
    mpfr_atan2(a.raw(), im.raw(), re.raw(), MPFR_RNDN);
    return {r, a};
  }
  Complex pow_si(long e) const {
    if (e < 0) return Complex(Rational(1), prec()) / pow_si(-e);
    Complex r(Rational(1), prec()), b = *this;
    long k = e;
    while (k) {
      if (k & 1) r *= b;
      if (k >>= 1) b *= b;
    }
    return r;
  }
};

inline Complex complex_i(mpfr_prec_t prec) {
  return Complex(Real(0L, prec), Real(1L, prec));
}

}  // namespace qq
