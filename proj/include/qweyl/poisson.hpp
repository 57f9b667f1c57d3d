#pragma once

// Polynomial Poisson bivectors on T*C^N (coordinates y1..yN, z1..zN) and the
// first-order bracket of D_q(C^N) at q = 1.

#include <string>
#include <tuple>
#include <vector>

#include "qweyl/algebras.hpp"
#include "qweyl/commpoly.hpp"

namespace qweyl {

inline std::vector<std::string> phase_space_names(int N) {
  std::vector<std::string> out;
  for (int i = 1; i <= N; ++i) out.push_back("y" + std::to_string(i));
  for (int i = 1; i <= N; ++i) out.push_back("z" + std::to_string(i));
  return out;
}

/// Antisymmetric table pi^{uv} of polynomials in 2N variables.
struct PolyBivector {
  int N = 0;
  std::vector<std::vector<CommPoly>> pi;

  explicit PolyBivector(int n = 0)
      : N(n), pi(static_cast<std::size_t>(2 * n), std::vector<CommPoly>(static_cast<std::size_t>(2 * n), CommPoly(static_cast<std::size_t>(2 * n)))) {}
  std::size_t dim() const { return pi.size(); }
  /// Sets pi^{uv} = p and pi^{vu} = -p.
  void set(std::size_t u, std::size_t v, const CommPoly& p) {
    pi[u][v] = p;
    pi[v][u] = -p;
  }
  bool antisymmetric() const {
    for (std::size_t u = 0; u < dim(); ++u)
      for (std::size_t v = 0; v < dim(); ++v)
        if (pi[u][v] != -pi[v][u]) return false;
    return true;
  }
};

inline std::size_t y_index(int, int i) { return static_cast<std::size_t>(i - 1); }
inline std::size_t z_index(int N, int i) { return static_cast<std::size_t>(N + i - 1); }

/// 1 + sum_{k<=i} y_k z_k.
inline CommPoly locus_factor(int N, int i) {
  std::size_t n = static_cast<std::size_t>(2 * N);
  CommPoly f = CommPoly::constant(n, 1);
  for (int k = 1; k <= i; ++k) f += CommPoly::variable(n, y_index(N, k)) * CommPoly::variable(n, z_index(N, k));
  return f;
}

inline CommPoly locus_product(int N) {
  CommPoly f = CommPoly::constant(static_cast<std::size_t>(2 * N), 1);
  for (int i = 1; i <= N; ++i) f *= locus_factor(N, i);
  return f;
}

/// The printed bivector: y_j y_i on (y_j, y_i), -z_j z_i on (z_j, z_i) for j > i,
/// y_i z_j on (y_i, z_j) for i != j, and 2(1 + sum_{k<=i} y_k z_k) on (y_i, z_i).
inline PolyBivector pi_bivector(int N) {
  if (N < 1) throw Error("N must be positive");
  PolyBivector b(N);
  std::size_t n = b.dim();
  auto v = [&](std::size_t k) { return CommPoly::variable(n, k); };
  for (int j = 1; j <= N; ++j)
    for (int i = 1; i < j; ++i) {
      b.set(y_index(N, j), y_index(N, i), v(y_index(N, j)) * v(y_index(N, i)));
      b.set(z_index(N, j), z_index(N, i), -(v(z_index(N, j)) * v(z_index(N, i))));
    }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j)
        b.set(y_index(N, i), z_index(N, i), locus_factor(N, i).scaled(2));
      else
        b.set(y_index(N, i), z_index(N, j), v(y_index(N, i)) * v(z_index(N, j)));
    }
  return b;
}

/// Lifts y^a z^b to the PBW monomial x^a d^b of D_q(C^N).
inline Element<QLaurent> lift_to_dq(const CommPoly& f, int N) {
  Accumulator<QLaurent> acc;
  for (const auto& [e, c] : f.terms()) {
    Monomial m;
    for (int g = 0; g < 2 * N; ++g) m.set(g, g < static_cast<int>(e.size()) ? e[static_cast<std::size_t>(g)] : 0);
    acc.add(m, QLaurent(c));
  }
  return acc.to_element();
}

/// (FG - GF)/(q - 1) at q = 1, with F and G the lifts of f and g.
inline CommPoly semiclassical_bracket(Engine<QLaurent>& eng, const CommPoly& f, const CommPoly& g, int N) {
  Element<QLaurent> c = eng.commutator(lift_to_dq(f, N), lift_to_dq(g, N));
  CommPoly out(static_cast<std::size_t>(2 * N));
  const QLaurent qm1 = q_pow(1) - 1;
  for (const auto& [m, k] : c) {
    Rational v = exact_divide(k, qm1).evaluate(1);
    CommPoly::Exponent e(static_cast<std::size_t>(2 * N));
    for (int g = 0; g < 2 * N; ++g) e[static_cast<std::size_t>(g)] = m[g];
    out += CommPoly::monomial(e, v);
  }
  return out;
}

inline CommPoly semiclassical_bracket(const CommPoly& f, const CommPoly& g, int N) {
  Engine<QLaurent> eng(dq_cn(N));
  return semiclassical_bracket(eng, f, g, N);
}

/// pi^{uv} = {u, v} on the coordinate functions.
inline PolyBivector semiclassical_bivector(int N) {
  PolyBivector b(N);
  Engine<QLaurent> eng(dq_cn(N));
  std::size_t n = b.dim();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      b.set(u, v, semiclassical_bracket(eng, CommPoly::variable(n, u), CommPoly::variable(n, v), N));
  return b;
}

struct JacobiReport {
  std::size_t triples = 0;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, CommPoly>> failures;
  bool holds() const { return failures.empty(); }
};

/// Cyclic sums sum_t pi^{ut} d_t pi^{vw} + (cyclic) over all triples u < v < w.
inline JacobiReport jacobi_check(const PolyBivector& b) {
  JacobiReport r;
  std::size_t n = b.dim();
  auto term = [&](std::size_t u, std::size_t v, std::size_t w) {
    CommPoly s(n);
    for (std::size_t t = 0; t < n; ++t)
      if (!b.pi[u][t].is_zero()) s += b.pi[u][t] * b.pi[v][w].derivative(t);
    return s;
  };
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      for (std::size_t w = v + 1; w < n; ++w) {
        ++r.triples;
        CommPoly j = term(u, v, w) + term(v, w, u) + term(w, u, v);
        if (!j.is_zero()) r.failures.emplace_back(u, v, w, j);
      }
  return r;
}

inline CommPoly degeneracy_determinant(const PolyBivector& b) { return poly_determinant(b.pi); }

/// Same zero set over C, certified by f | g^k and g | f^k for some k <= max_power.
inline bool same_vanishing_locus(const CommPoly& f, const CommPoly& g, int max_power = 4) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  auto divides_power = [&](const CommPoly& a, const CommPoly& b) {
    CommPoly p = b;
    for (int k = 1; k <= max_power; ++k) {
      if (exact_quotient(p, a)) return true;
      p *= b;
    }
    return false;
  };
  return divides_power(f, g) && divides_power(g, f);
}

struct BracketComparison {
  std::string pair;
  CommPoly semiclassical, printed;
  int sign = 0;  // +1, -1, or 0 when the values are not equal up to sign
};

struct PiComparisonReport {
  int N = 0;
  std::vector<BracketComparison> rows;
  bool absolute_values_match() const {
    for (const auto& r : rows)
      if (r.sign == 0 && !(r.semiclassical.is_zero() && r.printed.is_zero())) return false;
    return true;
  }
};

/// Pairwise comparison of the semiclassical bracket with the printed bivector.
inline PiComparisonReport compare_with_pi(int N) {
  PiComparisonReport r;
  r.N = N;
  auto sc = semiclassical_bivector(N);
  auto pr = pi_bivector(N);
  auto names = phase_space_names(N);
  std::size_t n = sc.dim();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      BracketComparison c{"(" + names[u] + ", " + names[v] + ")", sc.pi[u][v], pr.pi[u][v], 0};
      if (c.semiclassical.is_zero() && c.printed.is_zero())
        c.sign = 1;
      else if (c.semiclassical == c.printed)
        c.sign = 1;
      else if (c.semiclassical == -c.printed)
        c.sign = -1;
      r.rows.push_back(std::move(c));
    }
  return r;
}

}  // namespace qweyl
