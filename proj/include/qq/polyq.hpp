#pragma once

#include <map>
#include <vector>

#include "qq/rational.hpp"

namespace qq {

// Dense polynomials over Q, coefficient i of x^i. Used for cyclotomic
// polynomials and quotient-ring reductions.
using PolyQ = std::vector<Rational>;

inline void poly_trim(PolyQ& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
  if (a.empty() || b.empty()) return {};
  PolyQ r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

// Remainder of a modulo b (b monic or not; exact division over Q).
inline PolyQ poly_mod(PolyQ a, const PolyQ& b) {
  poly_trim(a);
  if (b.empty()) throw domain_error("poly_mod: division by zero polynomial");
  while (a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

// Exact quotient a / b, requiring zero remainder.
inline PolyQ poly_div_exact(PolyQ a, const PolyQ& b) {
  poly_trim(a);
  if (b.empty()) throw domain_error("poly_div_exact: zero divisor");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw domain_error("poly_div_exact: not divisible");
  PolyQ q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    q[a.size() - b.size()] = f;
    size_t off = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
    poly_trim(a);
  }
  if (!a.empty()) throw domain_error("poly_div_exact: nonzero remainder");
  return q;
}

// M-th cyclotomic polynomial, computed by exact division of x^M - 1.
inline const PolyQ& cyclotomic_poly(int M) {
  if (M < 1) throw domain_error("cyclotomic_poly: M >= 1 required");
  static std::map<int, PolyQ> cache;
  auto it = cache.find(M);
  if (it != cache.end()) return it->second;
  PolyQ num(M + 1);
  num[0] = -1;
  num[M] = 1;
  for (int d = 1; d < M; ++d)
    if (M % d == 0) num = poly_div_exact(num, cyclotomic_poly(d));
  return cache.emplace(M, std::move(num)).first->second;
}

}  // namespace qq
