#pragma once

#include <numeric>
#include <vector>

#include "qq/bignum.hpp"
#include "qq/polyq.hpp"

namespace qq {

// Exact element of the cyclotomic field Q(zeta_M), zeta_M = e^{2*pi*i/M},
// stored canonically as a polynomial in zeta_M reduced mod the cyclotomic
// polynomial Phi_M. Because Phi_M is the minimal polynomial, the zero test is
// exact; signs of (exactly) nonzero real/imaginary parts are resolved by
// MPFR evaluation at escalating precision, which always terminates.
class CycloNum {
 public:
  CycloNum(int M, Rational c0 = 0) : M_(M), c_(deg(M)) {
    if (!c_.empty()) c_[0] = std::move(c0);
  }

  // zeta_M^k as a field element.
  static CycloNum root_power(int M, long k) {
    k %= M;
    if (k < 0) k += M;
    PolyQ x(static_cast<size_t>(k) + 1);
    x.back() = 1;
    CycloNum r(M);
    r.assign(poly_mod(std::move(x), cyclotomic_poly(M)));
    return r;
  }

  int order() const { return M_; }
  bool is_zero() const {
    for (const auto& c : c_)
      if (c != 0) return false;
    return true;
  }
  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    a.check(b);
    return a.c_ == b.c_;
  }

  friend CycloNum operator+(CycloNum a, const CycloNum& b) {
    a.check(b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
  }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) {
    a.check(b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
  }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    a.check(b);
    CycloNum r(a.M_);
    r.assign(poly_mod(poly_mul(a.c_, b.c_), cyclotomic_poly(a.M_)));
    return r;
  }
  CycloNum operator*(const Rational& s) const {
    CycloNum r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }
  CycloNum operator-() const { return *this * Rational(-1); }

  // Complex conjugate: zeta^j -> zeta^{M-j}.
  CycloNum conj() const {
    CycloNum r(M_);
    PolyQ acc;
    for (size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      long k = (M_ - static_cast<long>(j)) % M_;
      PolyQ x(static_cast<size_t>(k) + 1);
      x.back() = c_[j];
      if (acc.size() < x.size()) acc.resize(x.size());
      for (size_t t = 0; t < x.size(); ++t) acc[t] += x[t];
    }
    r.assign(poly_mod(std::move(acc), cyclotomic_poly(M_)));
    return r;
  }

  // Numeric evaluation at zeta_M = e^{2 pi i / M}.
  Complex eval(mpfr_prec_t prec) const {
    Real two_pi_over_M = Real::pi(prec) * Real(2L, prec) / Real((long)M_, prec);
    Complex s(prec);
    for (size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      Real ang = two_pi_over_M * Real((long)j, prec);
      Real cq(c_[j], prec);
      s += Complex(cq * ang.cos(), cq * ang.sin());
    }
    return s;
  }

  // Exact sign of the real part. Zero is decided symbolically (x + conj x);
  // nonzero sign by escalating-precision evaluation.
  int sign_re() const {
    if ((*this + conj()).is_zero()) return 0;
    for (mpfr_prec_t p = 128;; p *= 2) {
      Real v = eval(p).re;
      if (!v.is_zero() && v.abs() > error_bound(p)) return v.sign();
      if (p > 1 << 20) throw domain_error("cyclotomic sign: precision runaway");
    }
  }
  int sign_im() const {
    if ((*this - conj()).is_zero()) return 0;
    for (mpfr_prec_t p = 128;; p *= 2) {
      Real v = eval(p).im;
      if (!v.is_zero() && v.abs() > error_bound(p)) return v.sign();
      if (p > 1 << 20) throw domain_error("cyclotomic sign: precision runaway");
    }
  }

 private:
  static size_t deg(int M) { return cyclotomic_poly(M).size() - 1; }
  void check(const CycloNum& o) const {
    if (M_ != o.M_) throw domain_error("cyclotomic order mismatch");
  }
  void assign(PolyQ p) {
    c_.assign(deg(M_), Rational(0));
    for (size_t i = 0; i < p.size(); ++i) c_[i] = std::move(p[i]);
  }
  // Coarse bound on the accumulated evaluation error at precision p: each of
  // the <= deg terms involves a handful of correctly-rounded operations.
  Real error_bound(mpfr_prec_t p) const {
    Rational s = 1;
    for (const auto& c : c_) s += abs(c);
    Real b(s, 64);
    return b * Real(64.0 * static_cast<double>(c_.size() + 1), 64) *
           Real(2.0, 64).pow_si(-static_cast<long>(p) + 8);
  }

  int M_;
  PolyQ c_;  // length deg(Phi_M), canonical representative
};

// A point of Q(zeta_M) viewed as R^2, with ray predicates. Rays are
// L(base, dir) = { base + t*dir : t >= 0 } with |dir| = 1 a root of unity.
struct CycloRay {
  CycloNum base;
  CycloNum dir;
};

inline int sign_cross(const CycloNum& a, const CycloNum& b) {
  return (a.conj() * b).sign_im();
}
inline int sign_dot(const CycloNum& a, const CycloNum& b) {
  return (a.conj() * b).sign_re();
}

// Exact disjointness of two closed rays. Rays sharing their base point are
// treated as disjoint iff their directions differ: the spectrum at t = 0 has
// a double eigenvalue whose two rays separate under any small deformation,
// and the hypothesis check follows that perturbed configuration.
inline bool rays_disjoint(const CycloRay& r1, const CycloRay& r2) {
  CycloNum w = r2.base - r1.base;
  if (w.is_zero()) return !(r1.dir == r2.dir);
  int c = sign_cross(r1.dir, r2.dir);
  if (c != 0) {
    // t1 = cross(w, d2)/c, t2 = cross(w, d1)/c; intersection iff both >= 0.
    int t1 = sign_cross(w, r2.dir) * c;
    int t2 = sign_cross(w, r1.dir) * c;
    return t1 < 0 || t2 < 0;
  }
  // Parallel directions.
  if (sign_cross(w, r1.dir) != 0) return true;  // distinct parallel lines
  if (sign_dot(r1.dir, r2.dir) > 0) return false;  // same direction, same line
  // Opposite directions: overlap iff r2.base lies ahead of r1.base.
  return sign_dot(w, r1.dir) < 0;
}

}  // namespace qq
