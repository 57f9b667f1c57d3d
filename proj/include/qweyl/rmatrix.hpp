#pragma once

// R-matrix relation generator: expands 4x4 matrix identities whose factors are
// scalar R-matrices or the tensor legs M1 = M (x) Id, M2 = Id (x) M of a 2x2
// matrix of generators, and turns the resulting entry relations into
// rewrite rules by linear elimination over Q(q).

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "qweyl/linalg.hpp"
#include "qweyl/presentation.hpp"

namespace qweyl {

using RMatrix = std::array<std::array<QLaurent, 4>, 4>;

/// The standard R-matrix on C^2 (rows/columns ordered 11, 12, 21, 22).
inline RMatrix r_matrix() {
  RMatrix r{};
  r[0][0] = q_pow(1);
  r[1][1] = 1;
  r[2][1] = q_pow(1) - q_pow(-1);
  r[2][2] = 1;
  r[3][3] = q_pow(1);
  return r;
}

/// R_21, the flip of R.
inline RMatrix r21_matrix() {
  RMatrix r{};
  r[0][0] = q_pow(1);
  r[1][1] = 1;
  r[1][2] = q_pow(1) - q_pow(-1);
  r[2][2] = 1;
  r[3][3] = q_pow(1);
  return r;
}

/// Inverse over Q(q); throws SingularR if the matrix is not invertible or the
/// inverse leaves the Laurent ring.
inline RMatrix inverse(const RMatrix& m) {
  Matrix<RatFunc> a(4, 8);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) a(i, j) = RatFunc(m[i][j]);
    a(i, 4 + i) = RatFunc(1);
  }
  auto piv = rref(a);
  if (piv.size() < 4 || piv[3] != 3) throw SingularR("R-matrix is singular");
  RMatrix inv{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      auto l = a(i, 4 + j).to_laurent();
      if (!l) throw SingularR("R-matrix inverse is not a Laurent matrix");
      inv[i][j] = *l;
    }
  return inv;
}

/// Word in the free algebra, as a sequence of generator indices.
using Word = std::vector<int>;
/// Element of the free algebra: word -> coefficient.
using FreeElement = std::map<Word, QLaurent>;

/// 2x2 matrix of generator indices, e.g. {{a, b}, {c, d}}.
using SymbolMatrix = std::array<std::array<int, 2>, 2>;

/// One factor of a matrix-relation template.
struct RFactor {
  enum Kind { Scalar, First, Second };
  Kind kind = Scalar;
  RMatrix scalar{};
  SymbolMatrix symbols{};

  static RFactor of(const RMatrix& r) { return {Scalar, r, {}}; }
  static RFactor first(const SymbolMatrix& s) { return {First, {}, s}; }
  static RFactor second(const SymbolMatrix& s) { return {Second, {}, s}; }
};

namespace detail {

using FreeMatrix = std::array<std::array<FreeElement, 4>, 4>;

inline void add_into(FreeElement& acc, const Word& w, const QLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

inline FreeMatrix to_free(const RFactor& f) {
  FreeMatrix m{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      if (f.kind == RFactor::Scalar) {
        if (!f.scalar[r][c].is_zero()) m[r][c][Word{}] = f.scalar[r][c];
        continue;
      }
      int i = r / 2, j = r % 2, k = c / 2, l = c % 2;
      if (f.kind == RFactor::First && j == l) m[r][c][Word{f.symbols[i][k]}] = 1;
      if (f.kind == RFactor::Second && i == k) m[r][c][Word{f.symbols[j][l]}] = 1;
    }
  return m;
}

inline FreeMatrix multiply(const FreeMatrix& a, const FreeMatrix& b) {
  FreeMatrix out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int k = 0; k < 4; ++k)
        for (const auto& [wa, ca] : a[r][k])
          for (const auto& [wb, cb] : b[k][c]) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            add_into(out[r][c], w, ca * cb);
          }
  return out;
}

inline FreeMatrix product(const std::vector<RFactor>& factors) {
  FreeMatrix m = to_free(RFactor::of(RMatrix{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}));
  for (const auto& f : factors) m = multiply(m, to_free(f));
  return m;
}

}  // namespace detail

/// The 16 entry relations lhs - rhs = 0 of a matrix identity, in the free algebra.
inline std::vector<FreeElement> expand_matrix_relation(const std::vector<RFactor>& lhs, const std::vector<RFactor>& rhs) {
  auto l = detail::product(lhs);
  auto r = detail::product(rhs);
  std::vector<FreeElement> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      FreeElement e = l[i][j];
      for (const auto& [w, c] : r[i][j]) detail::add_into(e, w, -c);
      out.push_back(std::move(e));
    }
  return out;
}

/// Row-reduces quadratic relations over Q(q), with out-of-order words as the
/// leading columns, and installs one rule per pivot. Throws PresentationError
/// if a relation survives among ordered words only (no PBW basis).
/// Returns the number of rules installed.
inline int install_rules(Presentation<QLaurent>& p, const std::vector<FreeElement>& relations) {
  std::vector<Word> bad, good;
  {
    std::map<Word, bool> seen;
    for (const auto& rel : relations)
      for (const auto& [w, c] : rel) {
        if (w.size() != 2) throw PresentationError("matrix relation produced a non-quadratic word");
        seen[w] = w[0] > w[1];
      }
    for (const auto& [w, out_of_order] : seen) (out_of_order ? bad : good).push_back(w);
  }
  // Larger out-of-order words first.
  std::sort(bad.begin(), bad.end(), [](const Word& a, const Word& b) { return a > b; });
  std::vector<Word> cols = bad;
  cols.insert(cols.end(), good.begin(), good.end());
  std::map<Word, std::size_t> col_of;
  for (std::size_t k = 0; k < cols.size(); ++k) col_of[cols[k]] = k;

  Matrix<RatFunc> m(relations.size(), cols.size());
  for (std::size_t r = 0; r < relations.size(); ++r)
    for (const auto& [w, c] : relations[r]) m(r, col_of[w]) = RatFunc(c);
  auto piv = rref(m);

  int installed = 0;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    std::size_t pc = piv[r];
    if (pc >= bad.size()) throw PresentationError("relations force a linear dependence among ordered monomials");
    const Word& lead = cols[pc];
    Accumulator<QLaurent> rhs;
    for (std::size_t k = pc + 1; k < cols.size(); ++k) {
      if (is_zero(m(r, k))) continue;
      if (k < bad.size()) throw PresentationError("out-of-order word left unresolved by the relations");
      auto coeff = m(r, k).to_laurent();
      if (!coeff) throw PresentationError("rule coefficient is not a Laurent polynomial");
      Monomial mono = Monomial::generator(cols[k][0]);
      mono.set(cols[k][1], mono[cols[k][1]] + 1);
      rhs.add(mono, -*coeff);
    }
    p.set_rule(lead[0], lead[1], rhs.to_element());
    ++installed;
  }
  return installed;
}

}  // namespace qweyl
