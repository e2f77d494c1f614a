#pragma once

#include <complex>
#include <map>
#include <vector>

#include "qq/polyq.hpp"

namespace qq {

// Exact arithmetic in the Q-algebra generated by
//   zeta = e^{i*pi/N}   (relations of the cyclotomic polynomial Phi_{2N}),
//   q    = 4^{1/(2N)}   (q^N = 2),
//   r    = sqrt(N)      (r^2 = N),
//   I    = sqrt(-1)     (I^2 = -1),
// which hosts the eigenvalues T*zeta^{-k} (T = 2N*q) and the idempotent
// coefficients of the quantum multiplication at t = 0. All identities checked
// through this ring are consequences of exactly these defining relations, so
// equality-to-zero here is sound even where the generators overlap inside C.
class SymNum {
 public:
  SymNum() : N_(0) {}
  SymNum(int N, const Rational& c0 = 0) : N_(N), c_(size(N)) {
    if (c0 != 0) c_[0] = c0;
  }
  explicit SymNum(const Rational& c0) : SymNum(1, c0) {}  // plain rational

  static SymNum zeta(int N) { return gen(N, 1, 0, 0, 0); }
  static SymNum q(int N) { return gen(N, 0, 1, 0, 0); }
  static SymNum r(int N) { return gen(N, 0, 0, 1, 0); }
  static SymNum i_unit(int N) { return gen(N, 0, 0, 0, 1); }

  int level() const { return N_; }
  bool is_zero() const {
    for (const auto& c : c_)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const SymNum& a, const SymNum& b) { return (a - b).is_zero(); }

  friend SymNum operator+(SymNum a, const SymNum& b) {
    auto [x, y] = lift(std::move(a), b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }
  friend SymNum operator-(SymNum a, const SymNum& b) {
    auto [x, y] = lift(std::move(a), b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }
  SymNum operator-() const {
    SymNum r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend SymNum operator*(const SymNum& a, const SymNum& b) {
    auto [x, y] = lift(a, b);
    int N = x.N_;
    if (N == 0) return SymNum();  // both operands are untyped zeros
    int zd = zdeg(N);
    SymNum out(N);
    for (int a1 = 0; a1 < zd; ++a1)
      for (int b1 = 0; b1 < N; ++b1)
        for (int c1 = 0; c1 < 2; ++c1)
          for (int e1 = 0; e1 < 2; ++e1) {
            const Rational& u = x.at(a1, b1, c1, e1);
            if (u == 0) continue;
            for (int a2 = 0; a2 < zd; ++a2)
              for (int b2 = 0; b2 < N; ++b2)
                for (int c2 = 0; c2 < 2; ++c2)
                  for (int e2 = 0; e2 < 2; ++e2) {
                    const Rational& v = y.at(a2, b2, c2, e2);
                    if (v == 0) continue;
                    Rational w = u * v;
                    int b3 = b1 + b2, c3 = c1 + c2, e3 = e1 + e2;
                    if (b3 >= N) { b3 -= N; w *= 2; }          // q^N = 2
                    if (c3 >= 2) { c3 -= 2; w *= N; }          // r^2 = N
                    if (e3 >= 2) { e3 -= 2; w = -w; }          // I^2 = -1
                    const PolyQ& red = zred(N, a1 + a2);
                    for (size_t t = 0; t < red.size(); ++t)
                      out.at((int)t, b3, c3, e3) += w * red[t];
                  }
          }
    return out;
  }
  SymNum operator*(const Rational& s) const {
    SymNum r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  SymNum pow(long e) const {
    if (e < 0) throw domain_error("SymNum::pow: negative exponent");
    SymNum r(N_ ? N_ : 1, 1), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      if (e >>= 1) b = b * b;
    }
    return r;
  }

  // Multiplicative inverses of the generators (zeta^-1 = zeta^{2N-1} since
  // zeta^{2N} = 1 in the quotient; q^-1 = q^{N-1}/2; r^-1 = r/N; I^-1 = -I).
  static SymNum zeta_inv(int N) { return zeta(N).pow(2 * N - 1); }
  static SymNum q_inv(int N) { return q(N).pow(N - 1) * Rational(1, 2); }

  std::complex<double> to_complex() const {
    if (N_ == 0) return 0.0;
    int N = N_, zd = zdeg(N);
    const double pi = 3.14159265358979323846;
    std::complex<double> z = std::polar(1.0, pi / N);
    double qd = std::pow(2.0, 1.0 / N), rd = std::sqrt((double)N);
    std::complex<double> I(0.0, 1.0);
    std::complex<double> s = 0.0;
    for (int a = 0; a < zd; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < 2; ++c)
          for (int e = 0; e < 2; ++e) {
            const Rational& u = at(a, b, c, e);
            if (u == 0) continue;
            s += u.get_d() * std::pow(z, a) * std::pow(qd, b) * (c ? rd : 1.0) *
                 (e ? I : std::complex<double>(1.0));
          }
    return s;
  }

 private:
  static int zdeg(int N) { return (int)cyclotomic_poly(2 * N).size() - 1; }
  static size_t size(int N) { return (size_t)zdeg(N) * N * 4; }
  Rational& at(int a, int b, int c, int e) {
    return c_[(((size_t)a * N_ + b) * 2 + c) * 2 + e];
  }
  const Rational& at(int a, int b, int c, int e) const {
    return c_[(((size_t)a * N_ + b) * 2 + c) * 2 + e];
  }
  static SymNum gen(int N, int a, int b, int c, int e) {
    SymNum s(N);
    Rational w = 1;
    while (b >= N) { b -= N; w *= 2; }  // q^N = 2 (bites when N = 1: q = 2)
    if (c >= 2) { c -= 2; w *= N; }
    if (e >= 2) { e -= 2; w = -w; }
    // zeta^a reduced mod Phi_{2N}
    const PolyQ& red = zred(N, a);
    for (size_t t = 0; t < red.size(); ++t) s.at((int)t, b, c, e) = w * red[t];
    return s;
  }
  // x^j mod Phi_{2N}, cached.
  static const PolyQ& zred(int N, int j) {
    static std::map<std::pair<int, int>, PolyQ> cache;
    auto key = std::make_pair(N, j);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    PolyQ x((size_t)j + 1);
    x.back() = 1;
    return cache.emplace(key, poly_mod(std::move(x), cyclotomic_poly(2 * N)))
        .first->second;
  }
  // Promote a plain rational (level-1) operand to the other operand's level.
  static std::pair<SymNum, SymNum> lift(SymNum a, SymNum b) {
    if (a.N_ == b.N_) return {std::move(a), std::move(b)};
    auto promote = [](const SymNum& x, int N) {
      if (x.N_ == 0) return SymNum(N);
      bool rational_only = true;
      for (size_t i = 1; i < x.c_.size(); ++i)
        if (x.c_[i] != 0) rational_only = false;
      if (!rational_only) throw domain_error("SymNum level mismatch");
      return SymNum(N, x.c_.empty() ? Rational(0) : x.c_[0]);
    };
    if (a.N_ == 0 || (a.N_ == 1 && b.N_ > 1)) return {promote(a, b.N_), std::move(b)};
    if (b.N_ == 0 || (b.N_ == 1 && a.N_ > 1)) {
      SymNum pb = promote(b, a.N_);
      return {std::move(a), std::move(pb)};
    }
    throw domain_error("SymNum level mismatch");
  }

  int N_;
  std::vector<Rational> c_;
};

}  // namespace qq
