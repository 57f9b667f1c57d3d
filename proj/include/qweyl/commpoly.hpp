#pragma once

// Commutative polynomials with rational coefficients, for the classical side:
// coordinate rings of T*C^N and GL_2, Poisson bivectors, matrix formulas.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/coefficients.hpp"
#include "qweyl/errors.hpp"

namespace qweyl {

class CommPoly {
 public:
  using Exponent = std::vector<int>;

  CommPoly() = default;
  explicit CommPoly(std::size_t nvars) : n_(nvars) {}
  static CommPoly constant(std::size_t nvars, const Rational& c) {
    CommPoly p(nvars);
    if (c != 0) p.t_[Exponent(nvars, 0)] = c;
    return p;
  }
  static CommPoly variable(std::size_t nvars, std::size_t v, const Rational& c = 1) {
    CommPoly p(nvars);
    Exponent e(nvars, 0);
    e[v] = 1;
    p.t_[e] = c;
    return p;
  }
  static CommPoly monomial(const Exponent& e, const Rational& c) {
    CommPoly p(e.size());
    if (c != 0) p.t_[e] = c;
    return p;
  }

  std::size_t nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return t_; }
  Rational coeff(const Exponent& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Rational(0) : it->second;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  CommPoly& operator+=(const CommPoly& o) {
    widen(o.n_);
    for (const auto& [e, c] : o.t_) add_term(padded(e), c);
    return *this;
  }
  CommPoly& operator-=(const CommPoly& o) {
    widen(o.n_);
    for (const auto& [e, c] : o.t_) add_term(padded(e), -c);
    return *this;
  }
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator-(CommPoly a) {
    for (auto& [e, c] : a.t_) c = -c;
    return a;
  }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly r(std::max(a.n_, b.n_));
    for (const auto& [e, c] : a.t_)
      for (const auto& [f, d] : b.t_) {
        Exponent g = r.padded(e);
        Exponent h = r.padded(f);
        for (std::size_t k = 0; k < g.size(); ++k) g[k] += h[k];
        r.add_term(g, c * d);
      }
    return r;
  }
  CommPoly& operator*=(const CommPoly& o) { return *this = *this * o; }
  CommPoly scaled(const Rational& s) const {
    if (s == 0) return CommPoly(n_);
    CommPoly r = *this;
    for (auto& [e, c] : r.t_) c *= s;
    return r;
  }
  friend bool operator==(const CommPoly& a, const CommPoly& b) { return (a - b).is_zero(); }
  friend bool operator!=(const CommPoly& a, const CommPoly& b) { return !(a == b); }

  CommPoly pow(int k) const {
    CommPoly r = constant(n_, 1);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  CommPoly derivative(std::size_t v) const {
    CommPoly r(n_);
    for (const auto& [e, c] : t_) {
      if (v >= e.size() || e[v] == 0) continue;
      Exponent f = e;
      --f[v];
      r.add_term(f, c * e[v]);
    }
    return r;
  }

  Rational evaluate(const std::vector<Rational>& x) const {
    Rational s = 0;
    for (const auto& [e, c] : t_) {
      Rational t = c;
      for (std::size_t k = 0; k < e.size(); ++k)
        for (int i = 0; i < e[k]; ++i) t *= x.at(k);
      s += t;
    }
    return s;
  }

  /// Leading term in lex order (largest exponent vector).
  std::pair<Exponent, Rational> leading() const { return *t_.rbegin(); }

  /// Exact quotient a / b, or nothing if b does not divide a.
  friend std::optional<CommPoly> exact_quotient(CommPoly a, const CommPoly& b) {
    if (b.is_zero()) throw Error("division by the zero polynomial");
    std::size_t n = std::max(a.n_, b.n_);
    a.widen(n);
    CommPoly bb = b;
    bb.widen(n);
    CommPoly q(n);
    auto [lb, cb] = bb.leading();
    while (!a.is_zero()) {
      auto [la, ca] = a.leading();
      Exponent d(n);
      for (std::size_t k = 0; k < n; ++k) {
        d[k] = la[k] - lb[k];
        if (d[k] < 0) return std::nullopt;
      }
      CommPoly t = monomial(d, ca / cb);
      q += t;
      a -= t * bb;
    }
    return q;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (!e[k]) continue;
        if (!mono.empty()) mono += "*";
        mono += k < names.size() ? names[k] : "v" + std::to_string(k + 1);
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      Rational a = abs(c);
      std::string body = mono.empty() ? a.get_str() : (a == 1 ? mono : a.get_str() + "*" + mono);
      if (s.empty())
        s = c < 0 ? "-" + body : body;
      else
        s += (c < 0 ? " - " : " + ") + body;
    }
    return s;
  }

 private:
  void widen(std::size_t n) {
    if (n <= n_) return;
    std::map<Exponent, Rational> t;
    for (auto& [e, c] : t_) {
      Exponent f = e;
      f.resize(n, 0);
      t.emplace(std::move(f), c);
    }
    t_ = std::move(t);
    n_ = n;
  }
  Exponent padded(Exponent e) const {
    e.resize(n_, 0);
    return e;
  }
  void add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, ins] = t_.try_emplace(e, c);
    if (ins) return;
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }

  std::size_t n_ = 0;
  std::map<Exponent, Rational> t_;
};

/// Square matrix over CommPoly with determinant by cofactor expansion (small sizes only).
using PolyMatrix = std::vector<std::vector<CommPoly>>;

inline CommPoly poly_determinant(const PolyMatrix& m) {
  std::size_t n = m.size();
  if (n == 0) return CommPoly::constant(0, 1);
  if (n == 1) return m[0][0];
  if (n > 8) throw ResourceBound("cofactor determinant limited to 8x8");
  CommPoly det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<CommPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    CommPoly t = m[0][c] * poly_determinant(minor);
    if (c % 2) det -= t;
    else det += t;
  }
  return det;
}

/// 2x2 matrices with exact rational entries.
struct Mat2 {
  Rational a11, a12, a21, a22;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  Rational det() const { return a11 * a22 - a12 * a21; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22, x.a21 * y.a11 + x.a22 * y.a21,
            x.a21 * y.a12 + x.a22 * y.a22};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 && x.a22 == y.a22;
  }
  Mat2 inverse() const {
    Rational d = det();
    if (d == 0) throw SingularInput("matrix is not invertible");
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
  }
  std::string to_string() const {
    return "[" + a11.get_str() + ", " + a12.get_str() + "; " + a21.get_str() + ", " + a22.get_str() + "]";
  }
};

}  // namespace qweyl
