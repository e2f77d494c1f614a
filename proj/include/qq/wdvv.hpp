#pragma once

// Exact genus-zero primary Gromov-Witten invariants of quadric hypersurfaces.
//
// Even-dimensional quadrics Q_n (n = 2N) carry, besides the hyperplane powers
// h^0..h^n, a primitive middle class p with p.p = h^n.  Every primary
// invariant with insertions from this basis is computed exactly from the
// 3-point seeds by
//   * the fundamental-class, divisor and degree axioms,
//   * monodromy vanishing (odd number of p insertions),
//   * a WDVV-derived recursion removing p insertions two at a time, and
//   * a WDVV-derived descent for purely ambient insertions.
// Odd-dimensional quadrics only have the ambient sector and are handled by
// the same ambient descent.
//
// The module also provides growth-bound certification (the Catalan-number
// weighted bounds controlling the recursion) and convergence diagnostics for
// the genus-zero potential.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qq/quantum.hpp"
#include "qq/rational.hpp"
#include "qq/space.hpp"

namespace qq {

// ---------------------------------------------------------------------------
// Keys and tables
// ---------------------------------------------------------------------------

// Canonical label of a primary invariant: m_prim primitive insertions and a
// multiset of ambient exponents, stored sorted in descending order.  The
// curve degree is not part of the key; for a non-vanishing invariant it is
// forced by the dimension constraint.
struct GWKey {
  int m_prim = 0;
  std::vector<int> exps;  // descending
  auto operator<=>(const GWKey&) const = default;
  int insertions() const { return m_prim + static_cast<int>(exps.size()); }
};

inline GWKey make_key(int m_prim, std::vector<int> exps) {
  std::sort(exps.begin(), exps.end(), std::greater<int>());
  return GWKey{m_prim, std::move(exps)};
}

// Solves  sum_i deg_C(gamma_i) = n - 3 + (#insertions) + n*d  for an integer
// d >= 0; returns nullopt when no such degree exists (the invariant is then
// zero by the degree axiom).  deg_C(h^e) = e and deg_C(p) = n/2.
inline std::optional<long> degree_from_dimension(const GWKey& key,
                                                 const QuadricSpace& X) {
  const long n = X.n;
  if (key.m_prim > 0 && !X.even())
    throw domain_error("degree_from_dimension: primitive insertions require even dimension");
  long sum = X.even() ? static_cast<long>(key.m_prim) * X.N() : 0;
  for (int e : key.exps) {
    if (e < 0 || e > n) throw domain_error("degree_from_dimension: exponent out of range");
    sum += e;
  }
  const long diff = sum - (n - 3 + key.insertions());
  if (diff < 0 || diff % n != 0) return std::nullopt;
  return diff / n;
}

enum class Provenance { seed, vanishing, divisor, recursion };

inline const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::seed: return "seed";
    case Provenance::vanishing: return "vanishing";
    case Provenance::divisor: return "divisor";
    case Provenance::recursion: return "recursion";
  }
  return "?";
}

// Memoized store of computed invariants for one quadric.
struct InvariantTable {
  int n = 0;  // quadric dimension
  std::map<GWKey, std::pair<Rational, Provenance>> entries;
  std::set<GWKey> in_progress;  // cycle guard for the descent

  explicit InvariantTable(int dim) : n(dim) {}
  explicit InvariantTable(const QuadricSpace& X) : n(X.n) {}
};

Rational invariant(const GWKey& key_in, const QuadricSpace& X, InvariantTable& tab);

namespace detail {

// Enumerates sub-multisets of pool = {(value, multiplicity)}, invoking
// cb(chosen_counts, weight) with weight = prod_j binom(mult_j, chosen_j).
// The weight counts the ways of picking the sub-multiset from labelled
// insertions, which is exactly the combinatorial factor arising when a WDVV
// coefficient identity is extracted from repeated coordinates.
inline void for_each_submultiset(
    const std::vector<std::pair<int, int>>& pool,
    const std::function<void(const std::vector<int>&, const Rational&)>& cb) {
  std::vector<int> chosen(pool.size(), 0);
  std::function<void(size_t, const Rational&)> rec = [&](size_t idx, const Rational& w) {
    if (idx == pool.size()) {
      cb(chosen, w);
      return;
    }
    for (int c = 0; c <= pool[idx].second; ++c) {
      chosen[idx] = c;
      rec(idx + 1, w * Rational(binomial(pool[idx].second, c)));
    }
  };
  rec(0, Rational(1));
}

inline std::vector<std::pair<int, int>> to_pool(const std::vector<int>& sorted_exps) {
  std::vector<std::pair<int, int>> pool;
  for (int e : sorted_exps) {
    if (!pool.empty() && pool.back().first == e)
      ++pool.back().second;
    else
      pool.emplace_back(e, 1);
  }
  return pool;
}

// Splits a pool into the chosen part and its complement as flat exponent lists.
inline void split_pool(const std::vector<std::pair<int, int>>& pool,
                       const std::vector<int>& chosen, std::vector<int>& in,
                       std::vector<int>& out) {
  in.clear();
  out.clear();
  for (size_t t = 0; t < pool.size(); ++t) {
    in.insert(in.end(), chosen[t], pool[t].first);
    out.insert(out.end(), pool[t].second - chosen[t], pool[t].first);
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// WDVV recursion removing primitive insertions
// ---------------------------------------------------------------------------

// Computes <p,...,p (m2 of them), h^{k_*}, h^l> for even m2 >= 2, where l is
// the first (largest) entry of exps and k_* the remaining ones, via the WDVV
// identity with distinguished derivatives (p, p | h^i, h^j), i + j = l.
// Every invariant referenced on the right-hand side has strictly fewer
// primitive insertions, or the same number and strictly fewer insertions in
// total, so the recursion terminates.  The value is independent of the split
// (split_i is exposed to make that a testable property).
inline Rational primitive_recursion(int m2, const std::vector<int>& exps, int split_i,
                                    const QuadricSpace& X, InvariantTable& tab) {
  const int n = X.n;
  if (!X.even()) throw domain_error("primitive_recursion: even dimension required");
  if (m2 < 2 || m2 % 2 != 0) throw domain_error("primitive_recursion: need an even count >= 2");
  if (exps.empty()) throw domain_error("primitive_recursion: need an ambient insertion");
  const int l = exps.front();
  if (l < 2 || l > n) throw domain_error("primitive_recursion: leading exponent outside [2, n]");
  const int i = split_i, j = l - i;
  if (i < 1 || j < 1 || i > n - 1 || j > n - 1)
    throw domain_error("primitive_recursion: inadmissible split");

  const std::vector<int> rest(exps.begin() + 1, exps.end());
  const auto pool = detail::to_pool(rest);
  const int P = m2 - 2;  // primitive insertions distributable over S
  const Rational half = rat(1, 2);

  auto eval = [&](int m_first, std::vector<int> e_first, int m_second,
                  std::vector<int> e_second) -> Rational {
    Rational a = invariant(make_key(m_first, std::move(e_first)), X, tab);
    if (a == 0) return Rational(0);
    return a * invariant(make_key(m_second, std::move(e_second)), X, tab);
  };

  Rational sum1(0), sum2(0);
  std::vector<int> Samb, Camb;
  detail::for_each_submultiset(pool, [&](const std::vector<int>& chosen, const Rational& wamb) {
    detail::split_pool(pool, chosen, Samb, Camb);
    const bool S_all_amb = Samb.size() == rest.size();
    for (int p = 0; p <= P; ++p) {
      const Rational w = wamb * Rational(binomial(P, p));
      const bool S_full = S_all_amb && p == P;
      const bool S_empty = Samb.empty() && p == 0;
      if (!S_full) {
        // <p, p, xi_S, xi_alpha> g <xi_beta, xi_{S^c}, h^i, h^j>
        Rational acc(0);
        for (int al = 0; al <= n; ++al) {
          auto e1 = Samb;
          e1.push_back(al);
          auto e2 = Camb;
          e2.push_back(n - al);
          e2.push_back(i);
          e2.push_back(j);
          acc += eval(2 + p, std::move(e1), P - p, std::move(e2));
        }
        {
          auto e2 = Camb;  // alpha = beta = p
          e2.push_back(i);
          e2.push_back(j);
          acc += eval(3 + p, Samb, P - p + 1, std::move(e2));
        }
        sum1 += w * half * acc;
      }
      if (!S_full && !S_empty) {
        // <p, xi_S, h^i, xi_alpha> g <xi_beta, xi_{S^c}, p, h^j>
        Rational acc(0);
        for (int al = 0; al <= n; ++al) {
          auto e1 = Samb;
          e1.push_back(i);
          e1.push_back(al);
          auto e2 = Camb;
          e2.push_back(n - al);
          e2.push_back(j);
          acc += eval(1 + p, std::move(e1), m2 - 1 - p, std::move(e2));
        }
        {
          auto e1 = Samb;  // alpha = beta = p
          e1.push_back(i);
          auto e2 = Camb;
          e2.push_back(j);
          acc += eval(2 + p, std::move(e1), m2 - p, std::move(e2));
        }
        sum2 += w * half * acc;
      }
    }
  });
  return sum2 - sum1;
}

// ---------------------------------------------------------------------------
// Ambient descent
// ---------------------------------------------------------------------------

// Computes a purely ambient invariant with all exponents in [2, n] and at
// least four insertions from the WDVV identity with distinguished derivative
// slots (h^1, h^a | h^b, h^c) versus (h^1, h^b | h^a, h^c), where
// a = (smallest exponent) - 1, b = largest exponent, c = second largest, and
// the remaining insertions are spectators.  The target appears exactly once
// (coefficient 1, from the empty-spectator term through the 3-point readout
// of h . h^a); every other referenced key either has strictly fewer
// insertions, contains h^1/h^0 (and reduces by the divisor/fundamental-class
// axioms), or has the same size with a strictly smaller minimal exponent.
// The measure (#insertions, minimal exponent) therefore decreases and the
// descent terminates.
inline Rational ambient_reconstruct(const GWKey& key, const QuadricSpace& X,
                                    InvariantTable& tab) {
  const int n = X.n;
  const auto& exps = key.exps;  // descending, all in [2, n], size >= 4
  if (key.m_prim != 0 || exps.size() < 4)
    throw domain_error("ambient_reconstruct: expects >= 4 purely ambient insertions");
  const int b = exps[0], c = exps[1], kmin = exps.back(), a = kmin - 1;
  const std::vector<int> A(exps.begin() + 2, exps.end() - 1);
  const auto pool = detail::to_pool(A);
  const Rational half = rat(1, 2);
  const GWKey target = key;

  Rational coeff(0), lhs_rest(0), rhs_rest(0);
  std::vector<int> Samb, Camb;
  // x is the partner of h^1 in the first factor; y goes with h^c in the second.
  auto run_side = [&](int x, int y, bool is_lhs) {
    Rational& acc_rest = is_lhs ? lhs_rest : rhs_rest;
    detail::for_each_submultiset(pool, [&](const std::vector<int>& chosen, const Rational& w) {
      detail::split_pool(pool, chosen, Samb, Camb);
      for (int al = 0; al <= n; ++al) {
        auto e1 = Samb;
        e1.push_back(1);
        e1.push_back(x);
        e1.push_back(al);
        GWKey k1 = make_key(0, std::move(e1));
        Rational v1 = invariant(k1, X, tab);
        if (v1 == 0) continue;
        auto e2 = Camb;
        e2.push_back(n - al);
        e2.push_back(y);
        e2.push_back(c);
        GWKey k2 = make_key(0, std::move(e2));
        const Rational contrib = w * half * v1;
        if (k2 == target)
          coeff += is_lhs ? contrib : -contrib;
        else
          acc_rest += contrib * invariant(k2, X, tab);
      }
      // alpha = p terms vanish: each factor would carry one primitive class.
    });
  };
  run_side(a, b, true);
  run_side(b, a, false);
  if (coeff == 0)
    throw std::logic_error("ambient_reconstruct: reconstruction frontier cycle");
  return (rhs_rest - lhs_rest) / coeff;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

inline Rational invariant(const GWKey& key_in, const QuadricSpace& X, InvariantTable& tab) {
  if (tab.n != X.n) throw domain_error("invariant: table belongs to a different quadric");
  GWKey key = make_key(key_in.m_prim, key_in.exps);
  if (key.m_prim < 0) throw domain_error("invariant: negative primitive count");
  if (key.m_prim > 0 && !X.even())
    throw domain_error("invariant: primitive insertions require even dimension");
  if (key.insertions() < 3) throw domain_error("invariant: need at least 3 insertions");

  if (auto it = tab.entries.find(key); it != tab.entries.end()) return it->second.first;
  if (tab.in_progress.count(key))
    throw std::logic_error("invariant: reconstruction frontier cycle");
  auto store = [&](const Rational& v, Provenance p) {
    tab.entries.emplace(key, std::make_pair(v, p));
    return v;
  };

  const auto d_opt = degree_from_dimension(key, X);
  if (!d_opt) return store(Rational(0), Provenance::vanishing);
  const long d = *d_opt;
  if (key.m_prim % 2 == 1) return store(Rational(0), Provenance::vanishing);

  if (key.insertions() == 3) {
    const int P = X.n + 1;
    int idx[3];
    int pos = 0;
    for (int t = 0; t < key.m_prim; ++t) idx[pos++] = P;
    for (int e : key.exps) idx[pos++] = e;
    return store(three_point_table(X, idx[0], idx[1], idx[2]), Provenance::seed);
  }
  // >= 4 insertions from here on.
  if (d == 0) return store(Rational(0), Provenance::vanishing);
  if (!key.exps.empty() && key.exps.back() == 0)
    return store(Rational(0), Provenance::vanishing);
  if (!key.exps.empty() && key.exps.back() == 1) {
    GWKey red = key;
    red.exps.pop_back();
    tab.in_progress.insert(key);
    Rational v = Rational(d) * invariant(red, X, tab);
    tab.in_progress.erase(key);
    return store(v, Provenance::divisor);
  }
  if (key.exps.empty()) return store(Rational(0), Provenance::vanishing);

  tab.in_progress.insert(key);
  Rational v = key.m_prim >= 2 ? primitive_recursion(key.m_prim, key.exps, 1, X, tab)
                               : ambient_reconstruct(key, X, tab);
  tab.in_progress.erase(key);
  return store(v, Provenance::recursion);
}

inline Rational invariant(int m_prim, std::vector<int> exps, const QuadricSpace& X,
                          InvariantTable& tab) {
  return invariant(make_key(m_prim, std::move(exps)), X, tab);
}

// Fills the table with every canonical key having at most max_ins insertions
// and a well-defined degree (keys without one vanish identically and form an
// infinite family, so they are not enumerated).
inline void populate_table(const QuadricSpace& X, int max_ins, InvariantTable& tab) {
  const int n = X.n;
  std::vector<int> exps;
  std::function<void(int, int, int)> rec = [&](int m, int remaining, int max_exp) {
    if (m + static_cast<int>(exps.size()) >= 3) {
      GWKey key = GWKey{m, exps};  // built descending already
      if (degree_from_dimension(key, X)) invariant(key, X, tab);
    }
    if (remaining == 0) return;
    for (int e = std::min(max_exp, n); e >= 0; --e) {
      exps.push_back(e);
      rec(m, remaining - 1, e);
      exps.pop_back();
    }
  };
  const int m_step = X.even() ? 2 : 1;
  for (int m = 0; m <= max_ins; m += m_step) {
    exps.clear();
    rec(m, max_ins - m, n);
    if (!X.even()) break;  // odd quadrics have no primitive class
  }
}

// Full WDVV contraction  sum_{S, alpha, beta} <xi_{i1}, xi_{i2}, xi_S, xi_alpha>
// g^{alpha beta} <xi_beta, xi_{S^c}, xi_{i3}, xi_{i4}>  over sub-multisets S of
// `extra` (basis indices; n+1 denotes the primitive class).  Symmetry of this
// sum under swapping i2 and i3 is the general WDVV equation and serves as a
// global consistency oracle for the computed table.
inline Rational wdvv_contraction(int i1, int i2, int i3, int i4,
                                 const std::vector<int>& extra, const QuadricSpace& X,
                                 InvariantTable& tab) {
  const int n = X.n, P = n + 1;
  std::vector<int> sorted = extra;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  const auto pool = detail::to_pool(sorted);
  const Rational half = rat(1, 2);

  auto add_index = [&](int idx, int& m, std::vector<int>& es) {
    if (idx == P)
      ++m;
    else
      es.push_back(idx);
  };
  Rational total(0);
  std::vector<int> Sin, Sout;
  detail::for_each_submultiset(pool, [&](const std::vector<int>& chosen, const Rational& w) {
    detail::split_pool(pool, chosen, Sin, Sout);
    int mS = 0, mC = 0;
    std::vector<int> eS, eC;
    for (int v : Sin) add_index(v, mS, eS);
    for (int v : Sout) add_index(v, mC, eC);
    for (int al = 0; al <= P; ++al) {
      const int be = al == P ? P : n - al;
      int m1 = mS, m2 = mC;
      std::vector<int> e1 = eS, e2 = eC;
      add_index(i1, m1, e1);
      add_index(i2, m1, e1);
      add_index(al, m1, e1);
      add_index(be, m2, e2);
      add_index(i3, m2, e2);
      add_index(i4, m2, e2);
      Rational v1 = invariant(make_key(m1, std::move(e1)), X, tab);
      if (v1 == 0) continue;
      total += w * half * v1 * invariant(make_key(m2, std::move(e2)), X, tab);
    }
  });
  return total;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline std::string key_to_string(const GWKey& key, long d) {
  std::ostringstream os;
  os << key.m_prim << '|';
  for (size_t t = 0; t < key.exps.size(); ++t) {
    if (t) os << ',';
    os << key.exps[t];
  }
  os << '|' << d;
  return os.str();
}

inline std::pair<GWKey, long> key_from_string(const std::string& s) {
  const auto p1 = s.find('|');
  const auto p2 = s.rfind('|');
  if (p1 == std::string::npos || p2 == p1)
    throw domain_error("key_from_string: malformed key '" + s + "'");
  GWKey key;
  key.m_prim = std::stoi(s.substr(0, p1));
  std::vector<int> exps;
  const std::string mid = s.substr(p1 + 1, p2 - p1 - 1);
  std::istringstream is(mid);
  std::string tok;
  while (std::getline(is, tok, ','))
    if (!tok.empty()) exps.push_back(std::stoi(tok));
  const long d = std::stol(s.substr(p2 + 1));
  return {make_key(key.m_prim, std::move(exps)), d};
}

inline constexpr const char* kTableGeneratorVersion = "1";

// Writes the entries with a well-defined degree as a JSON object; keys are
// "m|e1,e2,...|d" and values exact rational strings, so the round trip is
// bit-exact.
inline void save_table(const InvariantTable& tab, const QuadricSpace& X,
                       const std::string& path) {
  nlohmann::json j;
  j["header"] = {{"dimension", tab.n}, {"generator-version", kTableGeneratorVersion}};
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [key, vp] : tab.entries) {
    const auto d = degree_from_dimension(key, X);
    if (!d) continue;
    entries[key_to_string(key, *d)] = to_string(vp.first);
  }
  j["entries"] = std::move(entries);
  std::ofstream out(path);
  if (!out) throw domain_error("save_table: cannot open '" + path + "'");
  out << j.dump(1) << '\n';
}

inline InvariantTable load_table(const std::string& path, const QuadricSpace& X) {
  std::ifstream in(path);
  if (!in) throw domain_error("load_table: cannot open '" + path + "'");
  nlohmann::json j;
  in >> j;
  if (!j.contains("header") || !j["header"].contains("dimension"))
    throw domain_error("load_table: missing header");
  const int dim = j["header"]["dimension"].get<int>();
  if (dim != X.n)
    throw domain_error("load_table: table is for dimension " + std::to_string(dim) +
                       ", not " + std::to_string(X.n));
  InvariantTable tab(X);
  for (const auto& [ks, vs] : j["entries"].items()) {
    const auto [key, d] = key_from_string(ks);
    const auto dd = degree_from_dimension(key, X);
    if (!dd || *dd != d)
      throw domain_error("load_table: degree mismatch for key '" + ks + "'");
    tab.entries.emplace(key,
                        std::make_pair(parse_rational(vs.get<std::string>()),
                                       Provenance::seed));
  }
  return tab;
}

// ---------------------------------------------------------------------------
// Growth bounds and convergence diagnostics
// ---------------------------------------------------------------------------

// a_k = binom(2k, k) / (4k - 2); generating function (1 - sqrt(1 - 4X))/2,
// hence a_k = sum_{i=1}^{k-1} a_i a_{k-i} for k >= 2.
inline Rational catalan_factor(long k) {
  if (k < 1) throw domain_error("catalan_factor: k >= 1 required");
  return Rational(binomial(2 * k, k)) / Rational(4 * k - 2);
}

struct GrowthReport {
  double fitted_C = 0.0;  // minimal constant over the table, 3 significant digits
  GWKey worst_key;        // entry forcing the constant
  bool zinger_pass = false;  // |v| <= s! C^{s+d}, ambient entries
  bool claim1_pass = false;  // Catalan-weighted bound, two primitive insertions
  bool claim2_pass = false;  // Catalan-weighted bound, any even primitive count
  bool pass() const { return zinger_pass && claim1_pass && claim2_pass; }
};

namespace detail {

// log of the Catalan-weighted bound  a_q q! 9^{m'-1} (2C)^{q+d}  for a key
// with 2m' primitive insertions and q = 2m' - 2 + (#ambient - 1).
inline double log_claim_bound(const GWKey& key, long d, double C) {
  const int q = key.m_prim - 2 + static_cast<int>(key.exps.size()) - 1;
  const int mp = key.m_prim / 2;
  return std::log(catalan_factor(q).get_d()) + std::lgamma(q + 1.0) +
         (mp - 1) * std::log(9.0) + (q + static_cast<double>(d)) * std::log(2.0 * C);
}

inline double log_main_bound(const GWKey& key, long d, double C) {
  const int s = key.insertions();
  return std::lgamma(s + 1.0) + (s + static_cast<double>(d)) * std::log(C);
}

}  // namespace detail

// Finds the minimal constant C (to 3 significant digits) such that every
// stored entry satisfies both the factorial bound |v| <= s! C^{s+d} and, for
// entries with primitive insertions, the Catalan-weighted refinement, then
// re-verifies all entries against the reported constant.
inline GrowthReport growth_bound_check(const InvariantTable& tab, const QuadricSpace& X) {
  if (tab.entries.empty()) throw domain_error("growth_bound_check: empty table");
  GrowthReport rep;
  double bestC = 1.0;
  for (const auto& [key, vp] : tab.entries) {
    if (vp.first == 0) continue;
    const auto d = degree_from_dimension(key, X);
    if (!d) continue;
    const double lv = std::log(std::fabs(vp.first.get_d()));
    const int s = key.insertions();
    double req = std::exp((lv - std::lgamma(s + 1.0)) / (s + static_cast<double>(*d)));
    if (key.m_prim >= 2 && !key.exps.empty()) {
      const int q = key.m_prim - 2 + static_cast<int>(key.exps.size()) - 1;
      if (q >= 1) {
        const int mp = key.m_prim / 2;
        const double la = std::log(catalan_factor(q).get_d());
        const double num = lv - la - std::lgamma(q + 1.0) - (mp - 1) * std::log(9.0);
        req = std::max(req, 0.5 * std::exp(num / (q + static_cast<double>(*d))));
      }
    }
    if (req > bestC) {
      bestC = req;
      rep.worst_key = key;
    }
  }
  // Round up to 3 significant digits.
  const double mag = std::pow(10.0, std::floor(std::log10(bestC)) - 2.0);
  rep.fitted_C = std::ceil(bestC / mag) * mag;

  rep.zinger_pass = rep.claim1_pass = rep.claim2_pass = true;
  const double slack = 1e-9;
  for (const auto& [key, vp] : tab.entries) {
    if (vp.first == 0) continue;
    const auto d = degree_from_dimension(key, X);
    if (!d) continue;
    const double lv = std::log(std::fabs(vp.first.get_d()));
    if (lv > detail::log_main_bound(key, *d, rep.fitted_C) + slack) {
      if (key.m_prim == 0) rep.zinger_pass = false;
      rep.claim2_pass = false;
      if (key.m_prim == 2) rep.claim1_pass = false;
    }
    if (key.m_prim >= 2 && !key.exps.empty()) {
      const int q = key.m_prim - 2 + static_cast<int>(key.exps.size()) - 1;
      if (q >= 1 && lv > detail::log_claim_bound(key, *d, rep.fitted_C) + slack) {
        rep.claim2_pass = false;
        if (key.m_prim == 2) rep.claim1_pass = false;
      }
    }
  }
  return rep;
}

struct PotentialSum {
  Rational value;           // truncated genus-zero potential at t
  double tail_bound = 0.0;  // geometric bound on everything beyond the cutoff
  bool convergent = false;  // smallness condition satisfied
  double condition_sum = 0.0;  // sum_i C^{1+(deg_i-1)/n} |t^i|, must be < 1
};

// Partial sum of the genus-zero potential at a point t (coordinates in the
// basis h^0..h^n[, p]) through total order `cutoff`, with the geometric tail
// bound coming from the fitted growth constant: every order-s block is at
// most C^{3/n - 1} x^s with x = condition_sum, so the tail beyond the cutoff
// is bounded by C^{3/n-1} x^{cutoff+1} / (1 - x).
inline PotentialSum potential_partial_sum(const std::vector<Rational>& t, int cutoff,
                                          double C, const QuadricSpace& X,
                                          InvariantTable& tab) {
  const size_t B = X.basis_size();
  if (t.size() != B) throw domain_error("potential_partial_sum: coordinate count mismatch");
  if (cutoff < 3) throw domain_error("potential_partial_sum: cutoff >= 3 required");
  PotentialSum out;
  double x = 0.0;
  for (size_t idx = 1; idx < B; ++idx) {
    const double deg = idx <= static_cast<size_t>(X.n) ? static_cast<double>(idx)
                                                       : X.n / 2.0;
    x += std::pow(C, 1.0 + (deg - 1.0) / X.n) * std::fabs(t[idx].get_d());
  }
  out.condition_sum = x;
  out.convergent = x < 1.0;
  out.tail_bound = out.convergent
                       ? std::pow(C, 3.0 / X.n - 1.0) * std::pow(x, cutoff + 1) / (1.0 - x)
                       : std::numeric_limits<double>::infinity();

  // Sum over monomial multisets of total order 3..cutoff.
  Rational value(0);
  std::vector<int> counts(B, 0);
  std::function<void(size_t, int)> rec = [&](size_t idx, int used) {
    if (idx == B) {
      if (used < 3) return;
      int m = 0;
      std::vector<int> exps;
      for (size_t g = 0; g < B; ++g) {
        if (counts[g] == 0) continue;
        if (g == static_cast<size_t>(X.n + 1))
          m = counts[g];
        else
          exps.insert(exps.end(), counts[g], static_cast<int>(g));
      }
      if (m % 2 == 1) return;  // vanishes; skip the table call
      GWKey key = make_key(m, std::move(exps));
      if (!degree_from_dimension(key, X)) return;
      Rational v = invariant(key, X, tab);
      if (v == 0) return;
      Rational mono(1);
      for (size_t g = 0; g < B; ++g) {
        if (counts[g] == 0) continue;
        if (t[g] == 0) return;
        mono *= pow_rat(t[g], counts[g]) / Rational(factorial(counts[g]));
      }
      value += v * mono;
      return;
    }
    for (int c = 0; c + used <= cutoff; ++c) {
      counts[idx] = c;
      if (c > 0 && t[idx] == 0) break;  // monomial vanishes
      rec(idx + 1, used + c);
    }
    counts[idx] = 0;
  };
  rec(0, 0);
  out.value = value;
  return out;
}

}  // namespace qq
