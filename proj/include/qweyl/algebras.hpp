#pragma once

// Built-in presentations: q-difference operators on C^N, the reflection
// equation algebra for GL_2, its Heisenberg double, and the square-root
// extension of the grading operators.

#include <string>
#include <vector>

#include "qweyl/engine.hpp"
#include "qweyl/rmatrix.hpp"

namespace qweyl {

inline std::string x_name(int i) { return "x" + std::to_string(i); }
inline std::string d_name(int i) { return "d" + std::to_string(i); }

/// beta_i = 1 + sum_{j<=i} x_j d_j in D_q(C^N) (generator layout x1..xN, d1..dN).
template <class C>
Element<C> beta_element(const Presentation<C>& p, int N, int i) {
  Element<C> b = p.one();
  for (int j = 1; j <= i; ++j) {
    Monomial m = Monomial::generator(j - 1);
    m.set(N + j - 1, 1);
    b += Element<C>::monomial(m, p.scalar(1));
  }
  return b;
}

/// Weights of beta_i: +2 on x_j and -2 on d_j for j <= i, zero otherwise.
inline std::vector<int> beta_weights(int N, int i, int extra = 0) {
  std::vector<int> w(static_cast<std::size_t>(2 * N + extra), 0);
  for (int j = 1; j <= i; ++j) {
    w[static_cast<std::size_t>(j - 1)] = 2;
    w[static_cast<std::size_t>(N + j - 1)] = -2;
  }
  return w;
}

/// The algebra of q-difference operators on C^N, generators x1..xN < d1..dN.
/// Registers beta1..betaN as scalar commuters and names beta0..betaN.
/// truncate_beta replaces beta_{i-1} by 1 in the d_i x_i rule, which breaks
/// confluence for N >= 2 (negative control only).
inline Presentation<QLaurent> dq_cn(int N, bool truncate_beta = false) {
  if (N < 0) throw PresentationError("N must be non-negative");
  std::vector<std::string> gens;
  for (int i = 1; i <= N; ++i) gens.push_back(x_name(i));
  for (int i = 1; i <= N; ++i) gens.push_back(d_name(i));
  Presentation<QLaurent> p("dq" + std::to_string(N), gens);
  auto X = [](int i) { return i - 1; };
  auto D = [N](int i) { return N + i - 1; };
  auto mono2 = [](int g, int h) {
    Monomial m = Monomial::generator(g);
    m.set(h, m[h] + 1);
    return m;
  };
  for (int j = 1; j <= N; ++j)
    for (int i = 1; i < j; ++i) {
      p.set_rule(X(j), X(i), Element<QLaurent>::monomial(mono2(X(i), X(j)), q_pow(1)));
      p.set_rule(D(j), D(i), Element<QLaurent>::monomial(mono2(D(i), D(j)), q_pow(-1)));
    }
  for (int j = 1; j <= N; ++j)
    for (int i = 1; i <= N; ++i) {
      if (i != j) {
        p.set_rule(D(j), X(i), Element<QLaurent>::monomial(mono2(X(i), D(j)), q_pow(1)));
        continue;
      }
      Element<QLaurent> rhs = Element<QLaurent>::monomial(mono2(X(i), D(i)), q_pow(2));
      rhs += (truncate_beta ? p.one() : beta_element(p, N, i - 1)).scaled(q_pow(2) - 1);
      p.set_rule(D(i), X(i), rhs);
    }
  for (int i = 0; i <= N; ++i) p.set_named("beta" + std::to_string(i), beta_element(p, N, i));
  if (!truncate_beta)
    for (int i = 1; i <= N; ++i) register_commuter(p, "beta" + std::to_string(i), beta_element(p, N, i), beta_weights(N, i));
  return p;
}

/// The quantum plane O_q(C^N): x_j x_i = q x_i x_j for j > i.
inline Presentation<QLaurent> oq_cn(int N) {
  std::vector<std::string> gens;
  for (int i = 1; i <= N; ++i) gens.push_back(x_name(i));
  Presentation<QLaurent> p("oq" + std::to_string(N), gens);
  for (int j = 1; j <= N; ++j)
    for (int i = 1; i < j; ++i) {
      Monomial m = Monomial::generator(i - 1);
      m.set(j - 1, 1);
      p.set_rule(j - 1, i - 1, Element<QLaurent>::monomial(m, q_pow(1)));
    }
  return p;
}

inline const SymbolMatrix kL = {{{0, 1}, {2, 3}}};

/// Reflection-equation relations R21 M1 R M2 = M2 R21 M1 R for a symbol matrix.
inline std::vector<FreeElement> reflection_relations(const SymbolMatrix& m) {
  return expand_matrix_relation({RFactor::of(r21_matrix()), RFactor::first(m), RFactor::of(r_matrix()), RFactor::second(m)},
                                {RFactor::second(m), RFactor::of(r21_matrix()), RFactor::first(m), RFactor::of(r_matrix())});
}

/// Cross relations R21 D1 R X2 = X2 R21 D1 R21^{-1}.
inline std::vector<FreeElement> cross_relations(const SymbolMatrix& d, const SymbolMatrix& x) {
  return expand_matrix_relation({RFactor::of(r21_matrix()), RFactor::first(d), RFactor::of(r_matrix()), RFactor::second(x)},
                                {RFactor::second(x), RFactor::of(r21_matrix()), RFactor::first(d), RFactor::of(inverse(r21_matrix()))});
}

/// det_q = m11 m22 - q^2 m12 m21 for a symbol matrix.
inline Element<QLaurent> quantum_det(const SymbolMatrix& s) {
  Monomial ad = Monomial::generator(s[0][0]);
  ad.set(s[1][1], ad[s[1][1]] + 1);
  Monomial bc = Monomial::generator(s[0][1]);
  bc.set(s[1][0], bc[s[1][0]] + 1);
  return Element<QLaurent>::monomial(ad, 1) - Element<QLaurent>::monomial(bc, q_pow(2));
}

/// The reflection equation algebra O_q^+(GL_2) on a < b < c < d, L = [a b; c d].
/// Registers detq (central) and d as scalar commuters; names detq and trq.
inline Presentation<QLaurent> oq_gl2_plus() {
  Presentation<QLaurent> p("oqgl2", {"a", "b", "c", "d"});
  int n = install_rules(p, reflection_relations(kL));
  if (n != 6) throw PresentationError("reflection equation did not give six rules");
  Element<QLaurent> det = quantum_det(kL);
  Element<QLaurent> tr = p.generator(0) + p.generator(3).scaled(q_pow(-2));
  p.set_named("detq", det);
  p.set_named("trq", tr);
  register_commuter(p, "detq", det, {0, 0, 0, 0});
  register_commuter(p, "d", p.generator(3), {0, 2, -2, 0});
  return p;
}

inline const SymbolMatrix kX = {{{0, 1}, {2, 3}}};
inline const SymbolMatrix kD = {{{4, 5}, {6, 7}}};

/// The Heisenberg double D_q^+(GL_2): x11 < x12 < x21 < x22 < p11 < p12 < p21 < p22
/// (p_ij stands for the difference operator d_ij). Registers detqX and detqD.
inline Presentation<QLaurent> dq_gl2_plus() {
  Presentation<QLaurent> p("dqgl2", {"x11", "x12", "x21", "x22", "p11", "p12", "p21", "p22"});
  int n = install_rules(p, reflection_relations(kX));
  n += install_rules(p, reflection_relations(kD));
  n += install_rules(p, cross_relations(kD, kX));
  if (n != 28) throw PresentationError("matrix relations did not give 28 rules");
  Element<QLaurent> dx = quantum_det(kX);
  Element<QLaurent> dd = quantum_det(kD);
  p.set_named("detqX", dx);
  p.set_named("detqD", dd);
  register_commuter(p, "detqX", dx, {0, 0, 0, 0, 2, 2, 2, 2});
  register_commuter(p, "detqD", dd, {-2, -2, -2, -2, 0, 0, 0, 0});
  return p;
}

inline std::string alpha_name(int i) { return "alpha" + std::to_string(i); }

/// D_q(C^N) with square roots alpha_i of the beta_i adjoined (generators
/// x1..xN, d1..dN, alpha1..alphaN): alpha_i x_j = q x_j alpha_i and
/// alpha_i d_j = q^-1 d_j alpha_i for j <= i, commuting otherwise; alpha_i^2 = beta_i.
/// Registers beta_i and alpha_i as scalar commuters.
inline Presentation<QLaurent> dq_cn_sqrt(int N) {
  auto base = dq_cn(N);
  std::vector<std::string> gens = base.generators();
  for (int i = 1; i <= N; ++i) gens.push_back(alpha_name(i));
  Presentation<QLaurent> p("dq" + std::to_string(N) + "sqrt", gens);
  for (int j = 0; j < 2 * N; ++j)
    for (int i = 0; i < j; ++i) p.set_rule(j, i, base.rule(j, i));
  auto A = [N](int i) { return 2 * N + i - 1; };
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= N; ++j) {
      bool below = j <= i;
      Monomial mx = Monomial::generator(j - 1);
      mx.set(A(i), 1);
      p.set_rule(A(i), j - 1, Element<QLaurent>::monomial(mx, below ? q_pow(1) : QLaurent(1)));
      Monomial md = Monomial::generator(N + j - 1);
      md.set(A(i), 1);
      p.set_rule(A(i), N + j - 1, Element<QLaurent>::monomial(md, below ? q_pow(-1) : QLaurent(1)));
    }
    for (int k = 1; k < i; ++k) {
      Monomial m = Monomial::generator(A(k));
      m.set(A(i), 1);
      p.set_rule(A(i), A(k), Element<QLaurent>::monomial(m, 1));
    }
    p.set_power_rule(A(i), 2, beta_element(p, N, i));
  }
  for (int i = 0; i <= N; ++i) p.set_named("beta" + std::to_string(i), beta_element(p, N, i));
  for (int i = 1; i <= N; ++i) register_commuter(p, "beta" + std::to_string(i), beta_element(p, N, i), beta_weights(N, i, N));
  for (int i = 1; i <= N; ++i) {
    std::vector<int> w(static_cast<std::size_t>(3 * N), 0);
    for (int j = 1; j <= i; ++j) {
      w[static_cast<std::size_t>(j - 1)] = 1;
      w[static_cast<std::size_t>(N + j - 1)] = -1;
    }
    register_commuter(p, alpha_name(i), p.generator(A(i)), w);
  }
  return p;
}

/// Looks up a built-in algebra by its CLI name: dq0..dq9, oq, dqgl2.
inline Presentation<QLaurent> algebra_by_name(const std::string& name) {
  if (name == "oq" || name == "oqgl2") return oq_gl2_plus();
  if (name == "dqgl2") return dq_gl2_plus();
  if (name.size() >= 3 && name.rfind("dq", 0) == 0) {
    std::string digits = name.substr(2);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 2) {
      int N = std::stoi(digits);
      if (N > 8) throw ResourceBound("D_q(C^N) supports N <= 8");
      return dq_cn(N);
    }
  }
  throw PresentationError("unknown algebra '" + name + "'");
}

}  // namespace qweyl
