#pragma once

#include <string>

#include "qq/rational.hpp"

namespace qq {

// A smooth quadric hypersurface Q_n of complex dimension n in P^{n+1}.
// Cohomology basis: h^0..h^n, plus the primitive middle class p when n is even.
struct QuadricSpace {
  int n;

  explicit QuadricSpace(int dim) : n(dim) {
    if (dim < 1) throw domain_error("quadric dimension must be >= 1");
  }

  bool even() const { return n % 2 == 0; }
  int N() const {
    if (!even()) throw domain_error("N = n/2 requires even dimension");
    return n / 2;
  }
  // Number of basis classes: h^0..h^n (+ p if even).
  int basis_size() const { return even() ? n + 2 : n + 1; }
  // Fano index: c1 = n*h.
  int fano_index() const { return n; }

  std::string name() const { return "Q_" + std::to_string(n); }
};

}  // namespace qq
