#pragma once

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qweyl/coefficients.hpp"
#include "qweyl/monomial.hpp"

namespace qweyl {

/// How q is interpreted by a coefficient ring.
struct Mode {
  enum Kind { Generic, Root, Numeric };
  Kind kind = Generic;
  int level = 0;       // Root: q is a primitive level-th root of unity
  Rational value = 1;  // Numeric: q takes this rational value

  static Mode generic() { return {}; }
  static Mode root(int ell) {
    check_level(ell);
    Mode m;
    m.kind = Root;
    m.level = ell;
    return m;
  }
  static Mode numeric(const Rational& v) {
    if (v == 0) throw NotDivisible("q must be nonzero");
    Mode m;
    m.kind = Numeric;
    m.value = v;
    return m;
  }
  friend bool operator==(const Mode& a, const Mode& b) {
    return a.kind == b.kind && a.level == b.level && a.value == b.value;
  }
};

/// Image of a Laurent polynomial in the coefficient ring C under a mode.
template <class C>
C lift(const QLaurent& x, const Mode& mode);

template <>
inline QLaurent lift<QLaurent>(const QLaurent& x, const Mode& mode) {
  if (mode.kind != Mode::Generic) throw ModeMismatch("Laurent coefficients require generic mode");
  return x;
}
template <>
inline CycNumber lift<CycNumber>(const QLaurent& x, const Mode& mode) {
  if (mode.kind != Mode::Root) throw ModeMismatch("cyclotomic coefficients require root-of-unity mode");
  return specialize(x, mode.level);
}
template <>
inline Rational lift<Rational>(const QLaurent& x, const Mode& mode) {
  if (mode.kind != Mode::Numeric) throw ModeMismatch("rational coefficients require numeric mode");
  return x.evaluate(mode.value);
}

/// Noncommutative polynomial in PBW normal form: terms sorted by decreasing monomial.
template <class C>
class Element {
 public:
  using Term = std::pair<Monomial, C>;

  Element() = default;
  static Element scalar(const C& c) { return monomial(Monomial(), c); }
  static Element monomial(const Monomial& m, const C& c) {
    Element e;
    if (!qweyl::is_zero(c)) e.terms_.emplace_back(m, c);
    return e;
  }
  /// Builds from terms already sorted in decreasing order with nonzero coefficients.
  static Element from_sorted(std::vector<Term> terms) {
    Element e;
    e.terms_ = std::move(terms);
    return e;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  C coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.first > k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return C();
  }
  int degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }
  const Term& leading() const { return terms_.front(); }

  Element& operator+=(const Element& o) { return merge(o, false); }
  Element& operator-=(const Element& o) { return merge(o, true); }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }
  Element scaled(const C& s) const {
    if (qweyl::is_zero(s)) return {};
    Element r = *this;
    for (auto& t : r.terms_) t.second = t.second * s;
    return r;
  }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  template <class F>
  auto map_coefficients(F f) const {
    using D = decltype(f(std::declval<C>()));
    std::vector<typename Element<D>::Term> out;
    for (const auto& [m, c] : terms_) {
      D d = f(c);
      if (!qweyl::is_zero(d)) out.emplace_back(m, std::move(d));
    }
    return Element<D>::from_sorted(std::move(out));
  }

 private:
  Element& merge(const Element& o, bool negate) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
      if (j == o.terms_.end() || (i != terms_.end() && i->first > j->first)) {
        out.push_back(std::move(*i++));
      } else if (i == terms_.end() || j->first > i->first) {
        out.emplace_back(j->first, negate ? C(-j->second) : j->second);
        ++j;
      } else {
        C c = negate ? C(i->second - j->second) : C(i->second + j->second);
        if (!qweyl::is_zero(c)) out.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  std::vector<Term> terms_;
};

/// Unordered term collector; to_element() sorts and drops zeros.
template <class C>
class Accumulator {
 public:
  void add(const Monomial& m, const C& c) {
    if (qweyl::is_zero(c)) return;
    auto [it, inserted] = map_.try_emplace(m, c);
    if (!inserted) it->second += c;
  }
  void add(const Element<C>& e, const C& scale) {
    for (const auto& [m, c] : e) add(m, c * scale);
  }
  void add(const Element<C>& e) {
    for (const auto& [m, c] : e) add(m, c);
  }
  bool empty() const { return map_.empty(); }
  Element<C> to_element() {
    std::vector<typename Element<C>::Term> terms;
    terms.reserve(map_.size());
    for (auto& [m, c] : map_)
      if (!qweyl::is_zero(c)) terms.emplace_back(m, std::move(c));
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    map_.clear();
    return Element<C>::from_sorted(std::move(terms));
  }

 private:
  std::unordered_map<Monomial, C, MonomialHash> map_;
};

}  // namespace qweyl
