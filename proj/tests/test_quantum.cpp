#include <catch_amalgamated.hpp>

#include "qq/quantum.hpp"

using namespace qq;

namespace {
std::vector<RatClass> full_basis(const QuadricSpace& X) {
  std::vector<RatClass> b;
  for (int i = 0; i <= X.n; ++i) b.push_back(basis_h<Rational>(X, i));
  if (X.even()) b.push_back(basis_p<Rational>(X));
  return b;
}
}  // namespace

TEST_CASE("small product basis cases on Q_4") {
  QuadricSpace X(4);
  auto h = [&](int i) { return basis_h<Rational>(X, i); };
  auto p = basis_p<Rational>(X);
  CHECK(small_product(h(1), h(3), X) == h(4) + h(0) * Rational(2));
  CHECK(small_product(h(4), h(4), X) == h(0) * Rational(4));
  CHECK(small_product(h(4), p, X) == p * Rational(-2));
  CHECK(small_product(h(1), p, X).is_zero());
  CHECK(small_product(p, p, X) == h(4) - h(0) * Rational(2));
  CHECK(small_product(h(1), h(4), X) == h(1) * Rational(2));
}

TEST_CASE("three-point values from the table") {
  QuadricSpace X(4);
  int P = X.n + 1;
  CHECK(three_point_table(X, P, P, 4) == -4);
  CHECK(three_point_table(X, 4, 4, 4) == 8);
  CHECK(three_point_table(X, P, P, 0) == 2);
  CHECK(three_point_table(X, 1, 1, 2) == 2);
  CHECK(three_point_table(X, 1, 3, 4) == 4);
  CHECK(three_point_table(X, 2, 3, 3) == 8);
  CHECK(three_point_table(X, 0, 4, 4) == 0);
  CHECK(three_point_table(X, P, 2, 2) == 0);
}

TEST_CASE("table matches pairing of the product, exhaustively, n <= 12 even") {
  for (int n = 2; n <= 12; n += 2) {
    QuadricSpace X(n);
    auto B = full_basis(X);
    for (size_t a = 0; a < B.size(); ++a)
      for (size_t b = 0; b < B.size(); ++b)
        for (size_t c = 0; c < B.size(); ++c)
          CHECK(three_point(B[a], B[b], B[c], X) ==
                three_point_table(X, (int)a, (int)b, (int)c));
  }
}

TEST_CASE("small product associative and commutative, n <= 12") {
  for (int n = 2; n <= 12; ++n) {
    QuadricSpace X(n);
    auto B = full_basis(X);
    for (const auto& a : B)
      for (const auto& b : B) {
        CHECK(small_product(a, b, X) == small_product(b, a, X));
        for (const auto& c : B)
          CHECK(small_product(small_product(a, b, X), c, X) ==
                small_product(a, small_product(b, c, X), X));
      }
  }
}

TEST_CASE("characteristic polynomial of (c1 o)") {
  for (int N = 1; N <= 6; ++N) {
    QuadricSpace X(2 * N);
    auto cp = characteristic_polynomial(c1_quantum_matrix(X));
    // x^{2N+2} - 4 (2N)^{2N} x^2
    std::vector<Rational> want(2 * N + 3);
    want[2 * N + 2] = 1;
    want[2] = Rational(-4) * pow_rat(Rational(2 * N), 2 * N);
    CHECK(cp == want);
  }
  QuadricSpace X4(4);
  auto cp = characteristic_polynomial(c1_quantum_matrix(X4));
  CHECK(cp[2] == -1024);
  // trace = -c_{m-1}
  CHECK(cp[cp.size() - 2] == 0);
}

TEST_CASE("kernel of (c1 o) on Q_4 is two-dimensional") {
  QuadricSpace X(4);
  auto M = c1_quantum_matrix(X);
  // rank via Gaussian elimination
  size_t m = M.size();
  size_t rank = 0;
  for (size_t col = 0, row = 0; col < m && row < m; ++col) {
    size_t piv = row;
    while (piv < m && M[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(M[piv], M[row]);
    for (size_t i = 0; i < m; ++i) {
      if (i == row || M[i][col] == 0) continue;
      Rational f = M[i][col] / M[row][col];
      for (size_t j = 0; j < m; ++j) M[i][j] -= f * M[row][j];
    }
    ++row;
    ++rank;
  }
  CHECK(m - rank == 2);
}

TEST_CASE("idempotent identities, symbolic, N <= 4") {
  for (int N = 1; N <= 4; ++N) {
    QuadricSpace X(2 * N);
    auto S = idempotent_basis(X);
    SymNum I = SymNum::i_unit(N);
    SymNum T = S.T();
    auto& v = S.idempotents;
    REQUIRE(v.size() == size_t(2 * N + 2));
    // v_pm o v_pm = 2i v_pm; v_pm o v_mp = 0
    CHECK(small_product(v[0], v[0], X) == v[0] * (I * Rational(2)));
    CHECK(small_product(v[1], v[1], X) == v[1] * (I * Rational(2)));
    CHECK(small_product(v[0], v[1], X).is_zero());
    // c1 o v_pm = 0; c1 o v_k = T zeta^{-k} v_k
    auto c1 = basis_h<SymNum>(X, 1) * SymNum(N, Rational(X.n));
    CHECK(small_product(c1, v[0], X).is_zero());
    CHECK(small_product(c1, v[1], X).is_zero());
    for (int k = 0; k < 2 * N; ++k) {
      SymNum u = T * SymNum::zeta_inv(N).pow(k);
      CHECK(small_product(c1, v[2 + k], X) == v[2 + k] * u);
      // normalized: <v_k, v_k> = 1
      CHECK(pairing(v[2 + k], v[2 + k], X) == SymNum(N, 1));
      // idempotent after normalization: v o v = c * v with c*c = <...>... here
      // v_k o v_k = v_k / <psi_k-normalization>; verified via unit decomposition below
    }
    CHECK(pairing(v[0], v[0], X) == SymNum(N, 1));
    CHECK(pairing(v[1], v[1], X) == SymNum(N, 1));
    // unit decomposition 1 = sum <1, v_i> v_i with nonzero coefficients
    CohClass<SymNum> one = basis_h<SymNum>(X, 0);
    CohClass<SymNum> acc(X);
    for (size_t i = 0; i < v.size(); ++i) {
      SymNum a = pairing(one, v[i], X);
      CHECK(!a.is_zero());
      acc += v[i] * a;
    }
    CHECK(acc == one);
  }
}

TEST_CASE("eigenvalue moduli are 0 or T numerically") {
  QuadricSpace X(8);
  auto S = idempotent_basis(X);
  double T = 2.0 * 4 * std::pow(4.0, 1.0 / 8);
  for (const auto& e : S.eigenvalues) {
    double m = std::abs(e.to_complex(4));
    if (e.zero)
      CHECK(m == 0.0);
    else
      CHECK(std::abs(m - T) < 1e-12);
  }
}

TEST_CASE("admissible phases on Q_4") {
  QuadricSpace X(4);
  auto S = idempotent_basis(X);
  CHECK(is_admissible(S.eigenvalues, S.N, Rational(1, 8)));   // pi/8
  CHECK(!is_admissible(S.eigenvalues, S.N, Rational(0)));     // u_0 - 0 = T real
  std::vector<Eigenvalue> single = {{true, 0}};
  CHECK(is_admissible(single, 2, Rational(0)));
  CHECK(excluded_phase_set(single, 2).empty());
}

TEST_CASE("gamma2 hypothesis report on Q_4") {
  QuadricSpace X(4);
  auto S = idempotent_basis(X);
  // phi_+ = pi/10, phi_- = pi/16, phi_k = -k pi/2
  std::vector<Rational> phases = {Rational(1, 10), Rational(1, 16), Rational(0),
                                  Rational(-1, 2), Rational(-1),    Rational(-3, 2)};
  auto rep = gamma2_hypothesis_check(S, phases);
  CHECK(rep.phases_strictly_descending);
  CHECK(rep.spread_below_two_pi);
  CHECK(rep.half_lines_pairwise_disjoint);
  CHECK(rep.all_pass());
  CHECK(rep.im_order.size() == 6);  // ordering report present

  // identical half-lines must fail disjointness
  std::vector<Rational> bad = phases;
  bad[2] = bad[3];  // same base point? no: u_0 != u_1 bases differ; make rays identical:
  // use the two zero eigenvalues with equal phases instead
  bad = phases;
  bad[0] = bad[1];
  auto rep2 = gamma2_hypothesis_check(S, bad);
  CHECK(!rep2.half_lines_pairwise_disjoint);
  CHECK(!rep2.phases_strictly_descending);

  // non-descending phases
  std::vector<Rational> nd = phases;
  std::swap(nd[0], nd[1]);
  CHECK(!gamma2_hypothesis_check(S, nd).phases_strictly_descending);

  // phase count mismatch
  std::vector<Rational> short_list(phases.begin(), phases.end() - 1);
  CHECK_THROWS_AS(gamma2_hypothesis_check(S, short_list), domain_error);
}

TEST_CASE("odd-quadric product law sanity") {
  QuadricSpace X(3);
  auto h = [&](int i) { return basis_h<Rational>(X, i); };
  CHECK(small_product(h(1), h(2), X) == h(3) + h(0) * Rational(2));
  CHECK(small_product(h(1), h(3), X) == h(1) * Rational(2));
  auto cp = characteristic_polynomial(c1_quantum_matrix(X));
  // x^{n+1+1}? for odd n basis size n+1; char poly x^{n+1} - 4 n^n x
  std::vector<Rational> want(X.n + 2);
  want[X.n + 1] = 1;
  want[1] = Rational(-4) * pow_rat(Rational(X.n), X.n);
  CHECK(cp == want);
}
