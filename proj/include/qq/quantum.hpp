#pragma once

#include <algorithm>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qq/cohclass.hpp"
#include "qq/cyclotomic.hpp"
#include "qq/symnum.hpp"

namespace qq {

// ---------------------------------------------------------------------------
// Small quantum product at t = 0.
//
// Even n = 2N (from the 3-point table):
//   h o h^i      = h^{i+1}            (i <= 2N-2)
//   h o h^{2N-1} = h^{2N} + 2 h^0
//   h o h^{2N}   = 2 h
//   h o p        = 0
//   p o p        = h^{2N} - 2 h^0
// Odd n: the same ambient law with 2N -> n (conjectural extension, validated
// by the quantum-ODE annihilation of the P-function pairings).
// ---------------------------------------------------------------------------

template <class K>
CohClass<K> quantum_h_mul(const CohClass<K>& a, const QuadricSpace& X) {
  if (!a.matches(X)) throw domain_error("quantum_h_mul: dimension mismatch");
  int n = X.n;
  CohClass<K> r(X);
  for (int i = 0; i + 1 <= n; ++i) r.amb[i + 1] = r.amb[i + 1] + a.amb[i];
  r.amb[0] = r.amb[0] + a.amb[n - 1] * K(Rational(2));  // h o h^{n-1} = h^n + 2h^0
  r.amb[1] = r.amb[1] + a.amb[n] * K(Rational(2));      // h o h^n = 2h
  // h o p = 0: primitive coordinate drops.
  return r;
}

template <class K>
CohClass<K> small_product(const CohClass<K>& a, const CohClass<K>& b,
                          const QuadricSpace& X) {
  detail::check_pair(a, b, X, "small_product");
  int n = X.n;
  // (h^k o) = (h o)^k for k <= n-1; (h^n o) = (h o)^n - 2*Id;
  // (p o) acts by: p o h^0 = p, p o h^n = -2p, p o p = h^n - 2h^0.
  CohClass<K> r(X);
  CohClass<K> cur = b;  // (h o)^k applied to b
  for (int k = 0; k <= n; ++k) {
    if (k > 0) cur = quantum_h_mul(cur, X);
    if (!(a.amb[k] == K())) r += cur * a.amb[k];
  }
  if (!(a.amb[n] == K())) r -= b * (a.amb[n] * K(Rational(2)));
  if (X.even() && !(a.prim == K())) {
    CohClass<K> pb(X);  // p o b
    pb.prim = b.amb[0] - b.amb[n] * K(Rational(2));
    pb.amb[n] = b.prim;
    pb.amb[0] = b.prim * K(Rational(-2));
    r += pb * a.prim;
  }
  return r;
}

// 3-point invariant <g1, g2, g3> = (small_product(g1,g2), g3).
template <class K>
K three_point(const CohClass<K>& g1, const CohClass<K>& g2, const CohClass<K>& g3,
              const QuadricSpace& X) {
  return pairing(small_product(g1, g2, X), g3, X);
}

// Closed-form 3-point table for even quadrics (basis elements by index,
// 0..n for h^i and n+1 for p). Used as the recursion seed; equality with
// three_point over the product law is a tested property.
inline Rational three_point_table(const QuadricSpace& X, int a, int b, int c) {
  int n = X.n, P = n + 1;
  int prim_count = (a == P) + (b == P) + (c == P);
  if (prim_count > 0 && !X.even())
    throw domain_error("three_point_table: primitive insertions require even dimension");
  if (prim_count % 2 == 1) return 0;
  if (prim_count == 2) {
    int amb = a != P ? a : (b != P ? b : c);
    if (amb == 0) return 2;
    if (amb == n) return -4;
    return 0;
  }
  long s = a + b + c;
  if (s == n) return 2;
  if (s == 2L * n) {
    // shapes {i, 2N-i, 2N} with 1 <= i <= 2N-1
    if (a == n || b == n || c == n) {
      int i = a == n ? (b == n ? c : b) : a;
      if (i >= 1 && i <= n - 1) return 4;
      return 0;  // {0, 2N, 2N} has an h^0 insertion: degree forces 0
    }
    // i+j+k = 4N with all of i,j,k != 2N
    if (a != n && b != n && c != n) return 8;
    return 0;
  }
  if (s == 3L * n && a == n && b == n && c == n) return 8;
  return 0;
}

// Multiplication matrix of (g o) over the full basis (columns indexed by the
// basis, h^0..h^n then p when even), exact rational entries.
using QuantumMatrix = std::vector<std::vector<Rational>>;

inline QuantumMatrix quantum_matrix(const RatClass& g, const QuadricSpace& X) {
  int m = X.basis_size();
  QuantumMatrix M(m, std::vector<Rational>(m));
  for (int j = 0; j < m; ++j) {
    RatClass bj = j <= X.n ? basis_h<Rational>(X, j) : basis_p<Rational>(X);
    RatClass col = small_product(g, bj, X);
    for (int i = 0; i <= X.n; ++i) M[i][j] = col.amb[i];
    if (X.even()) M[X.n + 1][j] = col.prim;
  }
  return M;
}

inline QuantumMatrix c1_quantum_matrix(const QuadricSpace& X) {
  return quantum_matrix(basis_h<Rational>(X, 1) * Rational(X.n), X);
}

// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recurrence;
// returns coefficients c[0..m] with c[m] = 1 (coefficient of x^m).
inline std::vector<Rational> characteristic_polynomial(const QuantumMatrix& M) {
  size_t m = M.size();
  std::vector<std::vector<Rational>> A(m, std::vector<Rational>(m));  // M * B
  std::vector<std::vector<Rational>> B(m, std::vector<Rational>(m));  // auxiliary
  for (size_t i = 0; i < m; ++i) B[i][i] = 1;
  std::vector<Rational> c(m + 1);
  c[m] = 1;
  for (size_t k = 1; k <= m; ++k) {
    // A = M * B
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        Rational s = 0;
        for (size_t t = 0; t < m; ++t) s += M[i][t] * B[t][j];
        A[i][j] = s;
      }
    Rational tr = 0;
    for (size_t i = 0; i < m; ++i) tr += A[i][i];
    Rational ck = -tr / Rational((long)k);
    c[m - k] = ck;
    B = A;
    for (size_t i = 0; i < m; ++i) B[i][i] += ck;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Spectral decomposition at t = 0 (even n = 2N): eigenvalues 0 (twice) and
// T*zeta^{-k}, T = 2N*4^{1/(2N)}, zeta = e^{i*pi/N}, with the normalized
// idempotent basis v_pm, v_k and the exceptional-object labels.
// ---------------------------------------------------------------------------

struct Eigenvalue {
  bool zero;               // true for the two vanishing eigenvalues
  Rational phase_over_pi;  // phase of T*zeta^{-k} as a multiple of pi (else 0)

  std::complex<double> to_complex(int N) const {
    if (zero) return 0.0;
    double T = 2.0 * N * std::pow(4.0, 1.0 / (2 * N));
    const double pi = 3.14159265358979323846;
    return std::polar(T, phase_over_pi.get_d() * pi);
  }
};

struct SpectralData {
  int N = 0;
  std::vector<Eigenvalue> eigenvalues;
  std::vector<CohClass<SymNum>> idempotents;
  std::vector<std::string> labels;

  SymNum T() const { return SymNum::q(N) * Rational(2 * N); }
};

inline Rational reduce_phase_over_pi(Rational x) {
  // normalize to (-1, 1]
  Rational two(2);
  while (x > 1) x -= two;
  while (x <= -1) x += two;
  return x;
}

inline SpectralData idempotent_basis(const QuadricSpace& X) {
  if (!X.even()) throw domain_error("idempotent_basis: even dimension required");
  int N = X.N(), n = X.n;
  SpectralData S;
  S.N = N;
  SymNum I = SymNum::i_unit(N), r = SymNum::r(N), qinv = SymNum::q_inv(N);

  for (int s = 0; s < 2; ++s) {  // v_+ then v_-
    CohClass<SymNum> v(X);
    v.amb[0] = I * Rational(1, 2);
    v.amb[n] = I * Rational(-1, 4);
    v.prim = SymNum(N, s == 0 ? Rational(1, 2) : Rational(-1, 2));
    S.idempotents.push_back(std::move(v));
    S.eigenvalues.push_back({true, 0});
    S.labels.push_back(s == 0 ? "S+" : "S-");
  }
  for (int k = 0; k < 2 * N; ++k) {
    SymNum c = r * rat((k % 2 == 0) ? 1 : -1, N);  // (-1)^k / sqrt(N) = (-1)^k r/N
    CohClass<SymNum> v(X);
    v.amb[0] = c * Rational(1, 2);
    SymNum zk = SymNum::zeta(N).pow(k);  // zeta^{k}
    SymNum f = qinv * zk;                // (q*zeta^{-k})^{-1}
    SymNum acc(N, 1);
    for (int p = 1; p <= n; ++p) {
      acc = acc * f;
      v.amb[p] = c * acc;
    }
    S.idempotents.push_back(std::move(v));
    S.eigenvalues.push_back({false, reduce_phase_over_pi(rat(-k, N))});
    S.labels.push_back("O" + std::to_string(k));
  }
  return S;
}

// ---------------------------------------------------------------------------
// Admissible phases and the Gamma-II hypothesis report. All phases are exact
// rational multiples of pi; geometry is exact in a cyclotomic field.
// ---------------------------------------------------------------------------

// Phases (as multiples of pi, mod 1) excluded by "e^{i phi} parallel to some
// nonzero difference u_i - u_j".
inline std::vector<Rational> excluded_phase_set(const std::vector<Eigenvalue>& eig,
                                                int N) {
  auto mod1 = [](Rational x) {
    Rational r = x - Rational(mpz_class(x.get_num() / x.get_den()));
    while (r < 0) r += 1;
    while (r >= 1) r -= 1;
    return r;
  };
  std::vector<Rational> out;
  for (size_t i = 0; i < eig.size(); ++i)
    for (size_t j = 0; j < eig.size(); ++j) {
      if (i == j) continue;
      const auto &a = eig[i], &b = eig[j];
      if (a.zero && b.zero) continue;  // zero difference
      Rational ph;
      if (b.zero) ph = a.phase_over_pi;          // u_i - 0
      else if (a.zero) ph = b.phase_over_pi + 1; // 0 - u_j
      else if (a.phase_over_pi == b.phase_over_pi) continue;
      else {
        // T e^{i a} - T e^{i b} has phase (a+b)/2 + 1/2 (mod 1), a,b over pi
        ph = (a.phase_over_pi + b.phase_over_pi) / 2 + Rational(1, 2);
      }
      out.push_back(mod1(ph));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_admissible(const std::vector<Eigenvalue>& eig, int N,
                          const Rational& phase_over_pi) {
  auto excl = excluded_phase_set(eig, N);
  Rational x = phase_over_pi;
  while (x < 0) x += 1;
  while (x >= 1) x -= 1;
  return std::find(excl.begin(), excl.end(), x) == excl.end();
}

// Per-eigenvalue sets A_i: phases phi (mod 2 pi) whose open half-line from u_i
// hits some other u_j; admissible phases avoid their union and the paper's
// parallel-difference set.
struct Gamma2Report {
  bool phases_strictly_descending = false;
  bool spread_below_two_pi = false;
  bool half_lines_pairwise_disjoint = false;
  std::vector<std::pair<size_t, size_t>> intersecting_pairs;
  // Ordering report: labels sorted by Im(e^{-i phi_ref} u_i) descending,
  // computed exactly; phi_ref is an admissible phase chosen inside (0, phi_s + something).
  Rational reference_phase_over_pi;
  std::vector<size_t> im_order;  // indices, descending Im
  bool ordering_matches_labels = false;
  bool all_pass() const {
    return phases_strictly_descending && spread_below_two_pi &&
           half_lines_pairwise_disjoint;
  }
};

// Build the scaled configuration (divide by T > 0): points 0 or zeta_{2N}^{-k}
// inside Q(zeta_M); directions e^{i pi phase}.
inline Gamma2Report gamma2_hypothesis_check(const SpectralData& S,
                                            const std::vector<Rational>& phases_over_pi) {
  if (phases_over_pi.size() != S.eigenvalues.size())
    throw domain_error("gamma2_hypothesis_check: phase count mismatch");
  Gamma2Report rep;
  // (a) strictly descending, spread < 2 pi
  rep.phases_strictly_descending = true;
  for (size_t i = 0; i + 1 < phases_over_pi.size(); ++i)
    if (!(phases_over_pi[i] > phases_over_pi[i + 1]))
      rep.phases_strictly_descending = false;
  rep.spread_below_two_pi =
      phases_over_pi.front() - phases_over_pi.back() < Rational(2);

  // Exact geometry lives in Q(zeta_M); points are scaled by 1/T > 0, which
  // preserves all incidence relations.
  auto build_unit = [](long M, const Rational& phase) {
    // e^{i pi x} = zeta_M^{x*M/2}
    Rational t = phase * rat(M, 2);
    if (t.get_den() != 1) throw domain_error("phase not representable at this order");
    return CycloNum::root_power((int)M, t.get_num().get_si());
  };
  auto common_order = [&](const std::vector<Rational>& extra) {
    long M = 2 * S.N;
    for (const auto& ph : phases_over_pi) M = std::lcm(M, (long)ph.get_den().get_si() * 2);
    for (const auto& e : S.eigenvalues)
      if (!e.zero) M = std::lcm(M, (long)e.phase_over_pi.get_den().get_si() * 2);
    for (const auto& x : extra) M = std::lcm(M, (long)x.get_den().get_si() * 2);
    if (M > 4096)
      throw domain_error("gamma2_hypothesis_check: phase denominators too large");
    return M;
  };

  long M = common_order({});
  std::vector<CycloRay> rays;
  for (size_t i = 0; i < S.eigenvalues.size(); ++i) {
    const auto& e = S.eigenvalues[i];
    CycloNum base = e.zero ? CycloNum((int)M) : build_unit(M, e.phase_over_pi);
    rays.push_back({base, build_unit(M, phases_over_pi[i])});
  }
  rep.half_lines_pairwise_disjoint = true;
  for (size_t i = 0; i < rays.size(); ++i)
    for (size_t j = i + 1; j < rays.size(); ++j)
      if (!rays_disjoint(rays[i], rays[j])) {
        rep.half_lines_pairwise_disjoint = false;
        rep.intersecting_pairs.emplace_back(i, j);
      }

  // Ordering report: the conjecture lists the objects so that
  // Im(e^{-i phi} u_1) >= ... >= Im(e^{-i phi} u_s) for an admissible phi.
  // Pick an admissible reference phase below the smallest positive input phase.
  Rational cand(1, 2);
  for (const auto& p : phases_over_pi)
    if (p > 0 && p < cand) cand = p;
  Rational phi_ref = cand / 2;
  for (int tries = 0; tries < 64 && !is_admissible(S.eigenvalues, S.N, phi_ref); ++tries)
    phi_ref /= 3;
  rep.reference_phase_over_pi = phi_ref;

  long M2 = common_order({phi_ref});
  std::vector<CycloNum> pts;
  for (const auto& e : S.eigenvalues)
    pts.push_back(e.zero ? CycloNum((int)M2) : build_unit(M2, e.phase_over_pi));
  CycloNum dir_conj = build_unit(M2, -phi_ref);
  auto im_cmp = [&](size_t a, size_t b) {  // sign of Im(e^{-i phi}(u_a - u_b))
    return (dir_conj * (pts[a] - pts[b])).sign_im();
  };
  std::vector<size_t> idx(pts.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](size_t a, size_t b) { return im_cmp(a, b) > 0; });
  rep.im_order = idx;
  rep.ordering_matches_labels = true;
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    if (im_cmp(i, i + 1) < 0) rep.ordering_matches_labels = false;
  return rep;
}

}  // namespace qq
