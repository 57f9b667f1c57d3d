#pragma once

// Exact coefficient rings: rational polynomials, Laurent polynomials in q,
// rational functions in q, and the cyclotomic field Q(zeta_ell).

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/errors.hpp"

namespace qweyl {

using Rational = mpq_class;

inline Rational parse_rational(const std::string& text) {
  Rational r(text, 10);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// QPoly: dense univariate polynomial over Q. Zero is the empty vector.

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  QPoly(long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) c_.emplace_back(constant);
  }
  static QPoly constant(const Rational& r) { return QPoly(std::vector<Rational>{r}); }
  static QPoly monomial(int degree, const Rational& r = 1) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
    c.back() = r;
    return QPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
  }
  const Rational& leading() const { return c_.back(); }

  QPoly& operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(QPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(r));
  }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  QPoly scaled(const Rational& s) const {
    if (s == 0) return {};
    QPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: returns (quotient, remainder).
  friend std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw NotDivisible("division by the zero polynomial");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {QPoly(), a};
    std::vector<Rational> quo(static_cast<std::size_t>(dq) + 1, Rational(0));
    for (int k = dq; k >= 0; --k) {
      const Rational& top = rem[static_cast<std::size_t>(k + db)];
      if (top == 0) continue;
      Rational f = top / b.leading();
      quo[static_cast<std::size_t>(k)] = f;
      for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k + i)] -= f * b.c_[static_cast<std::size_t>(i)];
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
  }

  QPoly monic() const {
    if (is_zero()) return {};
    return scaled(1 / leading());
  }

  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
inline std::tuple<QPoly, QPoly, QPoly> extended_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    r0 = std::exchange(r1, rem);
    s0 = std::exchange(s1, s0 - quo * s1);
    t0 = std::exchange(t1, t0 - quo * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// ---------------------------------------------------------------------------
// QLaurent: Laurent polynomial in q with rational coefficients.
// Stored as q^low * (c[0] + c[1] q + ...), with c.front() and c.back() nonzero.

class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) c_.emplace_back(constant);
  }
  QLaurent(const Rational& constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) c_.push_back(constant);
  }
  static QLaurent q_power(int k, const Rational& coeff = 1) {
    QLaurent r;
    if (coeff != 0) {
      r.low_ = k;
      r.c_.push_back(coeff);
    }
    return r;
  }
  static QLaurent from_terms(const std::map<int, Rational>& terms) {
    QLaurent r;
    for (const auto& [k, v] : terms) r += q_power(k, v);
    return r;
  }
  static QLaurent from_poly(const QPoly& p, int shift = 0) {
    QLaurent r;
    r.low_ = shift;
    r.c_ = p.coeffs();
    r.normalize();
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && low_ == 0); }
  bool is_monomial() const { return c_.size() == 1; }
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const {
    int i = k - low_;
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Rational(0);
  }
  /// Sparse exponent -> coefficient view.
  std::map<int, Rational> terms() const {
    std::map<int, Rational> t;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) t.emplace(low_ + static_cast<int>(i), c_[i]);
    return t;
  }
  /// The polynomial part after factoring out q^low.
  QPoly shifted_poly() const { return QPoly(c_); }

  QLaurent& operator+=(const QLaurent& o) { return add(o, 1); }
  QLaurent& operator-=(const QLaurent& o) { return add(o, -1); }
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator-(QLaurent a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QLaurent r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
  }
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }
  friend bool operator==(const QLaurent& a, const QLaurent& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.low_ == b.low_);
  }

  QLaurent shifted(int k) const {
    QLaurent r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  Rational evaluate(const Rational& q) const {
    if (is_zero()) return 0;
    if (q == 0) {
      if (low_ < 0) throw NotDivisible("evaluating a Laurent polynomial with negative powers at q = 0");
      return low_ == 0 ? c_.front() : Rational(0);
    }
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
    Rational p = 1;
    Rational base = low_ >= 0 ? q : 1 / q;
    for (int i = 0; i < std::abs(low_); ++i) p *= base;
    return acc * p;
  }

 private:
  QLaurent& add(const QLaurent& o, int sign) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = o;
      if (sign < 0)
        for (auto& x : c_) x = -x;
      return *this;
    }
    int lo = std::min(low_, o.low_);
    int hi = std::max(high_degree(), o.high_degree());
    std::vector<Rational> r(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(low_ - lo) + i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      auto& slot = r[static_cast<std::size_t>(o.low_ - lo) + i];
      if (sign > 0)
        slot += o.c_[i];
      else
        slot -= o.c_[i];
    }
    low_ = lo;
    c_ = std::move(r);
    normalize();
    return *this;
  }
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
  }

  int low_ = 0;
  std::vector<Rational> c_;
};

inline QLaurent q_pow(int k) { return QLaurent::q_power(k); }

/// Returns c with b*c = a; throws NotDivisible if no Laurent polynomial c exists.
inline QLaurent exact_divide(const QLaurent& a, const QLaurent& b) {
  if (b.is_zero()) throw NotDivisible("division by zero");
  if (a.is_zero()) return {};
  auto [quo, rem] = divmod(a.shifted_poly(), b.shifted_poly());
  if (!rem.is_zero()) throw NotDivisible("Laurent polynomial division leaves a remainder");
  return QLaurent::from_poly(quo, a.low_degree() - b.low_degree());
}

// ---------------------------------------------------------------------------
// RatFunc: element of Q(q), num/den with den monic and gcd(num, den) = 1.

class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const QLaurent& l) : den_(1) {  // NOLINT(google-explicit-constructor)
    if (l.is_zero()) return;
    if (l.low_degree() >= 0) {
      num_ = shift_up(l);
    } else {
      num_ = l.shifted_poly();
      den_ = QPoly::monomial(-l.low_degree());
    }
    reduce();
  }
  RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw NotDivisible("rational function with zero denominator");
    reduce();
  }

  bool is_zero() const { return num_.is_zero(); }
  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw NotDivisible("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// The value as a Laurent polynomial, if the reduced denominator is a power of q.
  std::optional<QLaurent> to_laurent() const {
    if (is_zero()) return QLaurent();
    int d = den_.degree();
    if (!(den_ == QPoly::monomial(d))) return std::nullopt;
    return QLaurent::from_poly(num_, -d);
  }

 private:
  static QPoly shift_up(const QLaurent& l) {
    return (QPoly::monomial(l.low_degree()) * l.shifted_poly());
  }
  void reduce() {
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    Rational lc = den_.leading();
    if (lc != 1) {
      num_ = num_.scaled(1 / lc);
      den_ = den_.scaled(1 / lc);
    }
  }
  QPoly num_;
  QPoly den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }
inline RatFunc inverse(const RatFunc& r) { return RatFunc(1) / r; }

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and the field Q(zeta_ell), ell odd > 1.

namespace detail {

inline QPoly cyclotomic_any(int n) {
  // Phi_n = (q^n - 1) / prod_{d | n, d < n} Phi_d
  QPoly num = QPoly::monomial(n) - QPoly(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = divmod(num, cyclotomic_any(d)).first;
  return num;
}

struct CycContext {
  int ell = 0;
  int degree = 0;  // phi(ell)
  QPoly phi;
  std::vector<std::vector<Rational>> qpow;  // residue of q^k, 0 <= k < max(ell, 2*degree)
};

inline const CycContext* cyc_context(int ell) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycContext>> contexts;
  std::lock_guard<std::mutex> lock(mu);
  auto it = contexts.find(ell);
  if (it != contexts.end()) return it->second.get();
  auto ctx = std::make_unique<CycContext>();
  ctx->ell = ell;
  ctx->phi = cyclotomic_any(ell);
  ctx->degree = ctx->phi.degree();
  int n = std::max(ell, 2 * ctx->degree);
  for (int k = 0; k < n; ++k) {
    auto rem = divmod(QPoly::monomial(k), ctx->phi).second;
    std::vector<Rational> r(static_cast<std::size_t>(ctx->degree), Rational(0));
    for (int i = 0; i <= rem.degree(); ++i) r[static_cast<std::size_t>(i)] = rem.coeff(i);
    ctx->qpow.push_back(std::move(r));
  }
  const CycContext* raw = ctx.get();
  contexts.emplace(ell, std::move(ctx));
  return raw;
}

}  // namespace detail

inline void check_level(int ell) {
  if (ell <= 1 || ell % 2 == 0) throw BadLevel("root-of-unity level must be an odd integer > 1, got " + std::to_string(ell));
}

/// The ell-th cyclotomic polynomial, ell odd and > 1.
inline QPoly cyclotomic(int ell) {
  check_level(ell);
  return detail::cyc_context(ell)->phi;
}

/// Element of Q(zeta_ell) stored as a residue polynomial of degree < phi(ell).
/// A default-constructed value is a zero that is compatible with every level.
class CycNumber {
 public:
  CycNumber() = default;
  /// A rational constant, compatible with every level.
  explicit CycNumber(const Rational& r) {
    if (r != 0) r_.push_back(r);
  }
  explicit CycNumber(int v) : CycNumber(Rational(v)) {}
  CycNumber(int ell, const Rational& r) : ctx_(context_for(ell)) {
    if (r != 0) r_.push_back(r);
  }
  /// Reduces an arbitrary polynomial in q modulo Phi_ell.
  CycNumber(int ell, const QPoly& p) : ctx_(context_for(ell)) {
    r_.assign(static_cast<std::size_t>(ctx_->degree), Rational(0));
    for (int k = 0; k <= p.degree(); ++k) add_qpow(k, p.coeff(k));
    trim();
  }
  static CycNumber q_power(int ell, int k) {
    CycNumber c;
    c.ctx_ = context_for(ell);
    c.r_.assign(static_cast<std::size_t>(c.ctx_->degree), Rational(0));
    c.add_qpow(k, 1);
    c.trim();
    return c;
  }

  int level() const { return ctx_ ? ctx_->ell : 0; }
  bool is_zero() const { return r_.empty(); }
  const std::vector<Rational>& residue() const { return r_; }
  bool is_rational() const { return r_.size() <= 1; }
  Rational rational_value() const {
    if (!is_rational()) throw ModeMismatch("cyclotomic number is not rational");
    return r_.empty() ? Rational(0) : r_[0];
  }
  QPoly as_poly() const { return QPoly(r_); }

  CycNumber& operator+=(const CycNumber& o) { return add(o, 1); }
  CycNumber& operator-=(const CycNumber& o) { return add(o, -1); }
  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator-(CycNumber a) {
    for (auto& x : a.r_) x = -x;
    return a;
  }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    const detail::CycContext* ctx = join(a.ctx_, b.ctx_);
    CycNumber r;
    r.ctx_ = ctx;
    if (a.is_zero() || b.is_zero()) return r;
    if (a.r_.size() == 1 || b.r_.size() == 1) {
      const CycNumber& s = a.r_.size() == 1 ? a : b;
      const CycNumber& o = a.r_.size() == 1 ? b : a;
      r.r_ = o.r_;
      for (auto& x : r.r_) x *= s.r_[0];
      return r;
    }
    std::vector<Rational> prod(a.r_.size() + b.r_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.r_.size(); ++i) {
      if (a.r_[i] == 0) continue;
      for (std::size_t j = 0; j < b.r_.size(); ++j) prod[i + j] += a.r_[i] * b.r_[j];
    }
    r.r_.assign(static_cast<std::size_t>(ctx->degree), Rational(0));
    for (std::size_t k = 0; k < prod.size(); ++k)
      if (prod[k] != 0) r.add_qpow(static_cast<int>(k), prod[k]);
    r.trim();
    return r;
  }
  CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }
  friend bool operator==(const CycNumber& a, const CycNumber& b) {
    if (a.r_.empty() || b.r_.empty()) return a.r_.empty() && b.r_.empty();
    join(a.ctx_, b.ctx_);
    return a.r_ == b.r_;
  }

  CycNumber inverse() const {
    if (is_zero()) throw NotDivisible("inverse of zero in the cyclotomic field");
    if (is_rational()) {
      CycNumber r(Rational(1) / r_[0]);
      r.ctx_ = ctx_;
      return r;
    }
    auto [g, s, t] = extended_gcd(as_poly(), ctx_->phi);
    (void)t;
    if (g.degree() != 0) throw NotDivisible("non-invertible cyclotomic residue");
    return CycNumber(ctx_->ell, s);
  }
  friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

 private:
  static const detail::CycContext* context_for(int ell) {
    check_level(ell);
    return detail::cyc_context(ell);
  }
  static const detail::CycContext* join(const detail::CycContext* a, const detail::CycContext* b) {
    if (a && b && a != b)
      throw ModeMismatch("cyclotomic levels " + std::to_string(a->ell) + " and " + std::to_string(b->ell) + " differ");
    return a ? a : b;
  }
  void add_qpow(int k, const Rational& c) {
    int e = k % ctx_->ell;
    if (e < 0) e += ctx_->ell;
    const auto& row = ctx_->qpow[static_cast<std::size_t>(e)];
    if (r_.size() < row.size()) r_.resize(row.size(), Rational(0));
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) r_[i] += c * row[i];
  }
  CycNumber& add(const CycNumber& o, int sign) {
    ctx_ = join(ctx_, o.ctx_);
    if (o.r_.size() > r_.size()) r_.resize(o.r_.size(), Rational(0));
    for (std::size_t i = 0; i < o.r_.size(); ++i) {
      if (sign > 0)
        r_[i] += o.r_[i];
      else
        r_[i] -= o.r_[i];
    }
    trim();
    return *this;
  }
  void trim() {
    while (!r_.empty() && r_.back() == 0) r_.pop_back();
  }

  const detail::CycContext* ctx_ = nullptr;
  std::vector<Rational> r_;
};

inline bool is_zero(const CycNumber& c) { return c.is_zero(); }
inline CycNumber inverse(const CycNumber& c) { return c.inverse(); }
inline bool is_zero(const QLaurent& c) { return c.is_zero(); }
inline bool is_zero(const Rational& r) { return r == 0; }
inline Rational inverse(const Rational& r) { return 1 / r; }

/// Image of a Laurent polynomial under q -> zeta_ell.
inline CycNumber specialize(const QLaurent& a, int ell) {
  check_level(ell);
  if (a.is_zero()) return CycNumber(ell, Rational(0));
  // q^low * P(q); q^low = q^(low mod ell)
  int shift = a.low_degree() % ell;
  if (shift < 0) shift += ell;
  return CycNumber(ell, QPoly::monomial(shift) * a.shifted_poly());
}

/// Residue of a cyclotomic number as a Laurent polynomial (nonnegative powers).
inline QLaurent as_laurent(const CycNumber& c) { return QLaurent::from_poly(c.as_poly()); }

// ---------------------------------------------------------------------------
// Printing. Multi-term coefficients factor out their rational content, so
// 10q^3 - 5q prints as 5*(2*q^3 - q).

namespace detail {

inline std::string q_factor(int k) {
  if (k == 1) return "q";
  return "q^" + std::to_string(k);
}

inline std::string plain_terms(const QLaurent& p) {
  std::ostringstream os;
  bool first = true;
  auto terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    Rational c = it->second;
    int k = it->first;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << q_factor(k);
    }
  }
  return os.str();
}

inline Rational rational_content(const QLaurent& p) {
  mpz_class num = 0, den = 1;
  for (const auto& [k, c] : p.terms()) {
    num = gcd(num, mpz_class(c.get_num()));
    den = lcm(den, mpz_class(c.get_den()));
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace detail

/// Coefficient in the printing convention: single terms as "3*q^2", "-q^-1", "1/2";
/// multi-term values as "(q^2 - 1)" or "5*(2*q^3 - q)" with a positive leading coefficient.
inline std::string format_coefficient(const QLaurent& c) {
  if (c.is_zero()) return "0";
  if (c.is_monomial()) return detail::plain_terms(c);
  Rational content = detail::rational_content(c);
  if (c.coeff(c.high_degree()) < 0) content = -content;
  QLaurent primitive;
  for (const auto& [k, v] : c.terms()) primitive += QLaurent::q_power(k, v / content);
  std::string inner = "(" + detail::plain_terms(primitive) + ")";
  if (content == 1) return inner;
  if (content == -1) return "-" + inner;
  return content.get_str() + "*" + inner;
}

inline std::string to_string(const QLaurent& c) { return format_coefficient(c); }
inline std::string to_string(const CycNumber& c) { return format_coefficient(as_laurent(c)); }

}  // namespace qweyl
