#pragma once

// Centres at roots of unity: centrality checks, the beta^ell identities, the
// correction elements z, v, w, and brute-force centralizers in bounded degree.

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/algebras.hpp"
#include "qweyl/linalg.hpp"
#include "qweyl/ore.hpp"

namespace qweyl {

template <class C>
struct CentralityReport {
  Element<C> element;
  std::vector<std::pair<std::string, Element<C>>> commutators;  // [e, g] per generator
  bool central = true;
};

template <class C>
CentralityReport<C> is_central(Engine<C>& eng, const Element<C>& e) {
  const auto& p = eng.presentation();
  CentralityReport<C> r{e, {}, true};
  for (int g = 0; g < p.size(); ++g) {
    Element<C> c = eng.commutator(e, p.generator(g));
    if (!c.is_zero()) r.central = false;
    r.commutators.emplace_back(p.generator_name(g), std::move(c));
  }
  return r;
}

struct BetaPowerCheck {
  int i = 0;
  bool holds = false;                // beta_i^ell = 1 + sum_{j<=i} x_j^ell d_j^ell
  bool shorter_sum_holds = false;    // same with the sum stopping at j = i-1
};

/// beta_i^ell against 1 + sum_{j<=i} x_j^ell d_j^ell in D_q(C^N) at a primitive ell-th root.
inline std::vector<BetaPowerCheck> beta_power_identity(int N, int ell) {
  check_level(ell);
  auto p = at_root(dq_cn(N), ell);
  Engine<CycNumber> eng(p);
  std::vector<BetaPowerCheck> out;
  for (int i = 1; i <= N; ++i) {
    Element<CycNumber> lhs = eng.power(beta_element(p, N, i), ell);
    Element<CycNumber> rhs = p.one();
    Element<CycNumber> shorter = p.one();
    for (int j = 1; j <= i; ++j) {
      Monomial m = Monomial::generator(j - 1, ell);
      m.set(N + j - 1, ell);
      auto t = Element<CycNumber>::monomial(m, p.scalar(1));
      rhs += t;
      if (j < i) shorter += t;
    }
    out.push_back({i, lhs == rhs, lhs == shorter});
  }
  return out;
}

/// gamma[n][k] with c_k^{(n)} = gamma[n][k] * beta_{N-1}^{n-k}, from
/// gamma_{n,k} = q^{2k} gamma_{n-1,k} + q^{2(k-1)} gamma_{n-1,k-1}, gamma_{0,0} = 1.
inline std::vector<std::vector<QLaurent>> c_coefficient_table(int n_max) {
  std::vector<std::vector<QLaurent>> g(static_cast<std::size_t>(n_max + 1));
  g[0] = {QLaurent(1)};
  for (int n = 1; n <= n_max; ++n) {
    auto& row = g[static_cast<std::size_t>(n)];
    const auto& prev = g[static_cast<std::size_t>(n - 1)];
    row.assign(static_cast<std::size_t>(n + 1), QLaurent());
    for (int k = 0; k <= n; ++k) {
      if (k < n) row[static_cast<std::size_t>(k)] += q_pow(2 * k) * prev[static_cast<std::size_t>(k)];
      if (k > 0) row[static_cast<std::size_t>(k)] += q_pow(2 * (k - 1)) * prev[static_cast<std::size_t>(k - 1)];
    }
  }
  return g;
}

struct CCoefficientCheck {
  int n = 0;
  std::vector<QLaurent> gamma;  // gamma_{n,k}, k = 0..n
  bool expansion_matches = false;
};

/// Expands (x_N d_N + beta_{N-1})^n with the engine and compares it with
/// sum_k gamma_{n,k} beta_{N-1}^{n-k} x_N^k d_N^k.
inline CCoefficientCheck c_coefficients(int n, int N) {
  if (n < 1 || N < 1) throw Error("c_coefficients needs n >= 1 and N >= 1");
  auto p = dq_cn(N);
  Engine<QLaurent> eng(p);
  auto table = c_coefficient_table(n);
  Monomial xd = Monomial::generator(N - 1);
  xd.set(2 * N - 1, 1);
  Element<QLaurent> beta = beta_element(p, N, N - 1);
  Element<QLaurent> lhs = eng.power(Element<QLaurent>::monomial(xd, 1) + beta, n);
  Element<QLaurent> rhs;
  for (int k = 0; k <= n; ++k) {
    Monomial m = Monomial::generator(N - 1, k);
    m.set(2 * N - 1, k);
    Element<QLaurent> t = eng.multiply(eng.power(beta, n - k), Element<QLaurent>::monomial(m, 1));
    rhs += t.scaled(table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
  }
  return {n, table[static_cast<std::size_t>(n)], lhs == rhs};
}

/// Ore clearing of a right denominator g^k for a single-generator commuter g.
template <class C>
Element<C> divide_right_by_generator(Engine<C>& eng, const Element<C>& num, const std::string& commuter, int k) {
  OreField<C> field(eng);
  OreFraction<C> f = field.normalize(field.multiply(field.from(num), field.inverse_of(commuter, k)));
  if (!f.is_polynomial()) throw NotDivisible("numerator is not right-divisible by " + commuter + "^" + std::to_string(k));
  return f.numerator();
}

/// z with det_q^ell = z d^ell - b^ell c^ell in O_q^+(GL_2) at a primitive ell-th root.
inline Element<CycNumber> compute_z(int ell) {
  check_level(ell);
  auto p = at_root(oq_gl2_plus(), ell);
  Engine<CycNumber> eng(p);
  Element<CycNumber> num = eng.power(*p.find_named("detq"), ell) + eng.multiply(p.generator(1, ell), p.generator(2, ell));
  return divide_right_by_generator(eng, num, "d", ell);
}

/// Renames an O_q^+(GL_2) element along L -> X (offset 0) or L -> D (offset 4) in D_q^+(GL_2).
template <class C>
Element<C> embed_gl2(const Element<C>& e, int offset) {
  Accumulator<C> acc;
  for (const auto& [m, c] : e) {
    Monomial r;
    for (int g = 0; g < 4; ++g) r.set(g + offset, m[g]);
    acc.add(r, c);
  }
  return acc.to_element();
}

struct VW {
  Element<CycNumber> v, w;
};

inline VW compute_v_w(int ell) {
  Element<CycNumber> z = compute_z(ell);
  return {embed_gl2(z, 0), embed_gl2(z, 4)};
}

/// Integer basis of all Z-gradings (weight per generator) for which every rule is homogeneous.
template <class C>
std::vector<std::vector<long>> homogeneous_gradings(const Presentation<C>& p) {
  int n = p.size();
  Matrix<Rational> m;
  auto constrain = [&](const Monomial& lead, const Monomial& t) {
    std::vector<Rational> row(static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g) row[static_cast<std::size_t>(g)] = lead[g] - t[g];
    m.add_row(row);
  };
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (!p.has_rule(j, i)) continue;
      Monomial lead = combine(Monomial::generator(i), Monomial::generator(j));
      for (const auto& [t, c] : p.rule(j, i)) constrain(lead, t);
    }
  for (int g = 0; g < n; ++g)
    if (const auto& pr = p.power_rule(g))
      for (const auto& [t, c] : pr->second) constrain(Monomial::generator(g, pr->first), t);
  if (m.rows() == 0) m = Matrix<Rational>(1, static_cast<std::size_t>(n));
  std::vector<std::vector<long>> out;
  for (auto& v : kernel(m)) {
    mpz_class l = 1;
    for (const auto& x : v) l = lcm(l, mpz_class(x.get_den()));
    std::vector<long> w;
    for (const auto& x : v) w.push_back(Rational(x * l).get_num().get_si());
    out.push_back(std::move(w));
  }
  return out;
}

/// Monomials of total degree <= bound that respect the power rules.
template <class C>
std::vector<Monomial> monomials_up_to(const Presentation<C>& p, int bound) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int, int)> rec = [&](int g, int left) {
    if (g == p.size()) {
      out.push_back(cur);
      return;
    }
    int cap = left;
    if (const auto& pr = p.power_rule(g)) cap = std::min(cap, pr->first - 1);
    for (int e = 0; e <= cap; ++e) {
      cur.set(g, e);
      rec(g + 1, left - e);
    }
    cur.set(g, 0);
  };
  rec(0, bound);
  return out;
}

/// Basis of {e : deg e <= bound, [e, g] = 0 for all generators g}, solved
/// separately on each homogeneous component of the rules' gradings.
template <class C>
std::vector<Element<C>> centralizer_basis(Engine<C>& eng, int degree_bound) {
  const auto& p = eng.presentation();
  auto grads = homogeneous_gradings(p);
  std::map<std::vector<long>, std::vector<Monomial>> components;
  for (const auto& m : monomials_up_to(p, degree_bound)) {
    std::vector<long> key;
    for (const auto& w : grads) {
      long s = 0;
      for (int g = 0; g < p.size(); ++g) s += w[static_cast<std::size_t>(g)] * m[g];
      key.push_back(s);
    }
    components[key].push_back(m);
  }
  std::vector<Element<C>> basis;
  for (const auto& [key, monos] : components) {
    std::map<std::pair<int, Monomial>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, C>>> cols(monos.size());
    for (std::size_t k = 0; k < monos.size(); ++k) {
      Element<C> e = Element<C>::monomial(monos[k], p.scalar(1));
      for (int g = 0; g < p.size(); ++g) {
        Element<C> c = eng.commutator(e, p.generator(g));
        for (const auto& [m, v] : c) {
          auto [it, ins] = row_of.try_emplace({g, m}, row_of.size());
          cols[k].emplace_back(it->second, v);
        }
      }
    }
    Matrix<C> a(std::max<std::size_t>(row_of.size(), 1), monos.size());
    for (std::size_t k = 0; k < monos.size(); ++k)
      for (const auto& [r, v] : cols[k]) a(r, k) = v;
    for (const auto& v : kernel(a)) {
      Accumulator<C> acc;
      for (std::size_t k = 0; k < monos.size(); ++k)
        if (!is_zero(v[k])) acc.add(monos[k], v[k]);
      basis.push_back(acc.to_element());
    }
  }
  return basis;
}

/// Rank of a family of elements as vectors over the coefficient field.
template <class C>
std::size_t span_rank(const std::vector<Element<C>>& elems) {
  std::map<Monomial, std::size_t> col;
  for (const auto& e : elems)
    for (const auto& [m, c] : e) col.try_emplace(m, col.size());
  if (elems.empty() || col.empty()) return 0;
  Matrix<C> a(elems.size(), col.size());
  for (std::size_t r = 0; r < elems.size(); ++r)
    for (const auto& [m, c] : elems[r]) a(r, col[m]) = c;
  return rank(a);
}

/// Whether two families span the same subspace.
template <class C>
bool same_span(const std::vector<Element<C>>& a, const std::vector<Element<C>>& b) {
  std::vector<Element<C>> all = a;
  all.insert(all.end(), b.begin(), b.end());
  std::size_t r = span_rank(all);
  return r == span_rank(a) && r == span_rank(b);
}

/// Products g_1^{k_1} ... g_r^{k_r} of the given elements (with their degrees)
/// of total degree <= bound, including 1.
template <class C>
std::vector<Element<C>> products_up_to(Engine<C>& eng, const std::vector<std::pair<Element<C>, int>>& gens, int bound) {
  std::vector<Element<C>> out;
  std::function<void(std::size_t, int, const Element<C>&)> rec = [&](std::size_t k, int left, const Element<C>& acc) {
    if (k == gens.size()) {
      out.push_back(acc);
      return;
    }
    Element<C> cur = acc;
    for (int used = 0;; used += gens[k].second) {
      rec(k + 1, left - used, cur);
      if (used + gens[k].second > left || gens[k].second <= 0) break;
      cur = eng.multiply(cur, gens[k].first);
    }
  };
  rec(0, bound, eng.one());
  return out;
}

}  // namespace qweyl
