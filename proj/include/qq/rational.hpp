#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qq {

using Rational = mpq_class;
using Integer = mpz_class;

// Thrown when inputs are outside an operation's mathematical domain
// (dimension mismatches, out-of-range indices, non-convergent requests).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw domain_error("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational pow_rat(const Rational& base, long e) {
  if (e == 0) return 1;
  Rational b = e > 0 ? base : Rational(base.get_den(), base.get_num());
  if (e < 0 && base == 0) throw domain_error("pow_rat: zero to negative power");
  long k = e > 0 ? e : -e;
  Rational r = 1;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  r.canonicalize();
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace qq
