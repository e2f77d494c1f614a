#pragma once

#include <string>
#include <vector>

#include "qq/rational.hpp"
#include "qq/space.hpp"

namespace qq {

// Element of H*(Q_n) over a coefficient ring K: coordinates over the basis
// {h^0..h^n} plus the primitive middle class p (even n only).
// K must provide: default construction to 0, +, -, *, ==, construction from
// Rational (and hence from long).
template <class K>
struct CohClass {
  std::vector<K> amb;  // coefficient of h^i at index i; size n+1
  K prim{};            // coefficient of p; must stay 0 when n is odd

  CohClass() = default;
  explicit CohClass(const QuadricSpace& X) : amb(X.n + 1) {}

  bool matches(const QuadricSpace& X) const {
    return static_cast<int>(amb.size()) == X.n + 1;
  }

  bool is_zero() const {
    for (const auto& c : amb)
      if (!(c == K())) return false;
    return prim == K();
  }

  friend bool operator==(const CohClass& a, const CohClass& b) {
    return a.amb == b.amb && a.prim == b.prim;
  }

  CohClass& operator+=(const CohClass& o) {
    for (size_t i = 0; i < amb.size(); ++i) amb[i] = amb[i] + o.amb[i];
    prim = prim + o.prim;
    return *this;
  }
  CohClass& operator-=(const CohClass& o) {
    for (size_t i = 0; i < amb.size(); ++i) amb[i] = amb[i] - o.amb[i];
    prim = prim - o.prim;
    return *this;
  }
  CohClass& operator*=(const K& s) {
    for (auto& c : amb) c = c * s;
    prim = prim * s;
    return *this;
  }
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(CohClass a, const K& s) { return a *= s; }
  friend CohClass operator*(const K& s, CohClass a) { return a *= s; }
};

template <class K>
CohClass<K> basis_h(const QuadricSpace& X, int i) {
  if (i < 0 || i > X.n) throw domain_error("basis_h: exponent out of range");
  CohClass<K> c(X);
  c.amb[i] = K(Rational(1));
  return c;
}

template <class K>
CohClass<K> basis_p(const QuadricSpace& X) {
  if (!X.even()) throw domain_error("basis_p: odd quadric has no primitive class");
  CohClass<K> c(X);
  c.prim = K(Rational(1));
  return c;
}

namespace detail {
template <class K>
void check_pair(const CohClass<K>& a, const CohClass<K>& b, const QuadricSpace& X,
                const char* op) {
  if (!a.matches(X) || !b.matches(X))
    throw domain_error(std::string(op) + ": dimension mismatch");
}
}  // namespace detail

// Classical cup product. h^a.h^b = h^{a+b} (0 above top), h.p = 0,
// p.p = prim_square * h^n. The default prim_square = +1 is the normalization
// p^2 = h^n used everywhere outside the integral-lattice Chern computations;
// charclasses passes (-1)^N for the lattice class e-e'.
template <class K>
CohClass<K> cup(const CohClass<K>& a, const CohClass<K>& b, const QuadricSpace& X,
                int prim_square = 1) {
  detail::check_pair(a, b, X, "cup");
  CohClass<K> r(X);
  for (int i = 0; i <= X.n; ++i) {
    if (a.amb[i] == K()) continue;
    for (int j = 0; i + j <= X.n; ++j) r.amb[i + j] = r.amb[i + j] + a.amb[i] * b.amb[j];
  }
  // p pairs only with degree-0 ambient and with itself.
  r.prim = a.prim * b.amb[0] + a.amb[0] * b.prim;
  r.amb[X.n] = r.amb[X.n] + a.prim * b.prim * K(Rational(prim_square));
  return r;
}

// Poincare pairing: Int h^i . h^{n-i} = 2, Int p.p = 2*prim_square, Int h.p = 0.
template <class K>
K pairing(const CohClass<K>& a, const CohClass<K>& b, const QuadricSpace& X,
          int prim_square = 1) {
  detail::check_pair(a, b, X, "pairing");
  K s{};
  for (int i = 0; i <= X.n; ++i) s = s + a.amb[i] * b.amb[X.n - i];
  s = s * K(Rational(2));
  s = s + a.prim * b.prim * K(Rational(2 * prim_square));
  return s;
}

// Hodge grading operator: h^i -> (i - n/2) h^i, p -> 0.
template <class K>
CohClass<K> grading_mu(const CohClass<K>& a, const QuadricSpace& X) {
  if (!a.matches(X)) throw domain_error("grading_mu: dimension mismatch");
  CohClass<K> r(X);
  for (int i = 0; i <= X.n; ++i) r.amb[i] = a.amb[i] * K(rat(2 * i - X.n, 2));
  return r;
}

// Classical multiplication by c1 = n*h.
template <class K>
CohClass<K> c1_cup(const CohClass<K>& a, const QuadricSpace& X) {
  if (!a.matches(X)) throw domain_error("c1_cup: dimension mismatch");
  CohClass<K> r(X);
  for (int i = 0; i + 1 <= X.n; ++i) r.amb[i + 1] = a.amb[i] * K(Rational(X.n));
  return r;
}

// Basis labels as used by the CLI: "h0".."hn" and "p".
inline int basis_index_from_label(const QuadricSpace& X, const std::string& label) {
  // returns 0..n for h^i, n+1 for p
  if (label == "p") {
    if (!X.even()) throw domain_error("label p: odd quadric has no primitive class");
    return X.n + 1;
  }
  if (label.size() >= 2 && label[0] == 'h') {
    int i = std::stoi(label.substr(1));
    if (i < 0 || i > X.n) throw domain_error("label out of range: " + label);
    return i;
  }
  throw domain_error("unknown basis label: " + label);
}

template <class K>
CohClass<K> basis_from_label(const QuadricSpace& X, const std::string& label) {
  int idx = basis_index_from_label(X, label);
  return idx == X.n + 1 ? basis_p<K>(X) : basis_h<K>(X, idx);
}

using RatClass = CohClass<Rational>;

}  // namespace qq
