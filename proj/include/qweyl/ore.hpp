#pragma once

// Right fractions n * s_0^{-a_0} ... s_r^{-a_r} over the scalar commuters
// registered in a presentation.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qweyl/engine.hpp"
#include "qweyl/printer.hpp"

namespace qweyl {

template <class C>
class OreFraction {
 public:
  OreFraction() = default;
  OreFraction(Element<C> num, std::vector<int> den) : num_(std::move(num)), den_(std::move(den)) {}

  const Element<C>& numerator() const { return num_; }
  const std::vector<int>& denominator() const { return den_; }
  int power(std::size_t k) const { return k < den_.size() ? den_[k] : 0; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const {
    return std::all_of(den_.begin(), den_.end(), [](int a) { return a == 0; });
  }

 private:
  Element<C> num_;
  std::vector<int> den_;
};

/// Arithmetic on OreFraction values for one presentation.
template <class C>
class OreField {
 public:
  explicit OreField(Engine<C>& engine) : eng_(engine), p_(engine.presentation()) {
    std::size_t r = p_.commuters().size();
    c_.assign(r, std::vector<int>(r, 0));
    for (std::size_t t = 0; t < r; ++t)
      for (std::size_t u = 0; u < r; ++u) {
        if (t == u) continue;
        const auto& su = p_.commuters()[u].element;
        c_[t][u] = su.is_zero() ? 0 : p_.commuters()[t].exponent(su.leading().first);
      }
  }

  Engine<C>& engine() { return eng_; }
  std::size_t size() const { return c_.size(); }

  OreFraction<C> from(const Element<C>& e) const { return {e, zeros()}; }

  /// s^{-power} for the commuter registered under name.
  OreFraction<C> inverse_of(const std::string& name, int power = 1) const {
    auto k = p_.commuter_index(name);
    if (!k) throw UnregisteredDenominator("no registered denominator named '" + name + "'");
    std::vector<int> d = zeros();
    d[static_cast<std::size_t>(*k)] = power;
    return {p_.one(), d};
  }

  /// Commuter index of an element, or UnregisteredDenominator.
  std::size_t denominator_index(const Element<C>& e) const {
    for (std::size_t k = 0; k < p_.commuters().size(); ++k)
      if (p_.commuters()[k].element == e) return k;
    throw UnregisteredDenominator("element is not a registered denominator");
  }

  OreFraction<C> inverse_of(const Element<C>& e, int power = 1) const {
    std::vector<int> d = zeros();
    d[denominator_index(e)] = power;
    return {p_.one(), d};
  }

  /// S^{-1} n = n' S^{-1}: each monomial m picks up q^{-sum_t a_t e(s_t, m)}.
  Element<C> pass_left(const std::vector<int>& den, const Element<C>& n) const {
    Accumulator<C> acc;
    for (const auto& [m, c] : n) {
      int e = 0;
      for (std::size_t t = 0; t < den.size(); ++t)
        if (den[t]) e += den[t] * p_.commuters()[t].exponent(m);
      acc.add(m, e ? c * p_.qpow(-e) : c);
    }
    return acc.to_element();
  }

  OreFraction<C> multiply(const OreFraction<C>& f, const OreFraction<C>& g) {
    check(f);
    check(g);
    Element<C> n = eng_.multiply(f.numerator(), pass_left(f.denominator(), g.numerator()));
    int e = 0;
    std::vector<int> d = zeros();
    for (std::size_t u = 0; u < d.size(); ++u) {
      for (std::size_t t = u + 1; t < d.size(); ++t) e += c_[t][u] * f.power(t) * g.power(u);
      d[u] = f.power(u) + g.power(u);
    }
    if (e) n = n.scaled(p_.qpow(e));
    return normalize({std::move(n), std::move(d)});
  }

  /// Rewrites f over the (larger) denominator target.
  OreFraction<C> expand_to(OreFraction<C> f, const std::vector<int>& target) {
    check(f);
    Element<C> n = f.numerator();
    std::vector<int> d = f.denominator();
    d.resize(c_.size(), 0);
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (target[k] < d[k]) throw Error("expand_to: target denominator is smaller");
      while (d[k] < target[k]) {
        int e = 0;
        for (std::size_t t = 0; t < k; ++t) e += d[t] * c_[t][k];
        n = eng_.multiply(n, p_.commuters()[k].element);
        if (e) n = n.scaled(p_.qpow(-e));
        ++d[k];
      }
    }
    return {std::move(n), std::move(d)};
  }

  OreFraction<C> add(const OreFraction<C>& f, const OreFraction<C>& g, bool subtract = false) {
    std::vector<int> d = zeros();
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = std::max(f.power(k), g.power(k));
    auto a = expand_to(f, d);
    auto b = expand_to(g, d);
    Element<C> n = a.numerator();
    if (subtract)
      n -= b.numerator();
    else
      n += b.numerator();
    return normalize({std::move(n), std::move(d)});
  }

  OreFraction<C> subtract(const OreFraction<C>& f, const OreFraction<C>& g) { return add(f, g, true); }

  OreFraction<C> scaled(const OreFraction<C>& f, const C& s) const { return {f.numerator().scaled(s), f.denominator()}; }

  OreFraction<C> power(const OreFraction<C>& f, int n) {
    if (n < 0) throw PresentationError("negative power of a fraction");
    OreFraction<C> r = from(p_.one());
    for (int i = 0; i < n; ++i) r = multiply(r, f);
    return r;
  }

  bool equal(const OreFraction<C>& f, const OreFraction<C>& g) { return subtract(f, g).is_zero(); }

  /// Cancels denominators that are single generators dividing every numerator
  /// monomial on the right. Other denominators are left as they are.
  OreFraction<C> normalize(OreFraction<C> f) const {
    if (f.is_zero()) return {Element<C>(), zeros()};
    Element<C> n = f.numerator();
    std::vector<int> d = f.denominator();
    d.resize(c_.size(), 0);
    for (std::size_t k = 0; k < d.size(); ++k) {
      const auto& s = p_.commuters()[k];
      if (!d[k] || s.element.size() != 1) continue;
      const auto& [sm, sc] = s.element.leading();
      if (sm.degree() != 1 || !(sc == p_.scalar(1))) continue;
      int g = sm.first();
      while (d[k] > 0) {
        bool divisible = std::all_of(n.begin(), n.end(), [&](const auto& t) { return t.first[g] > 0; });
        if (!divisible) break;
        int shift = 0;
        for (std::size_t t = 0; t < k; ++t) shift += c_[t][k] * d[t];
        Accumulator<C> acc;
        for (const auto& [m, c] : n) {
          Monomial r = m;
          r.set(g, m[g] - 1);
          int e = shift;
          for (int h = g + 1; h < p_.size(); ++h) e += m[h] * s.weights[static_cast<std::size_t>(h)];
          acc.add(r, e ? c * p_.qpow(e) : c);
        }
        n = acc.to_element();
        --d[k];
      }
    }
    return {std::move(n), std::move(d)};
  }

  /// Substitutes images for generators: sum_m c_m prod_g image(g)^{e_g}.
  template <class Source>
  OreFraction<C> apply(const std::vector<OreFraction<C>>& images, const Element<Source>& e,
                       const std::function<C(const Source&)>& coeff) {
    std::map<std::pair<int, int>, OreFraction<C>> powers;
    auto pw = [&](int g, int k) -> const OreFraction<C>& {
      auto key = std::make_pair(g, k);
      auto it = powers.find(key);
      if (it != powers.end()) return it->second;
      OreFraction<C> r = k == 1 ? images[static_cast<std::size_t>(g)] : multiply(powers.at({g, k - 1}), images[static_cast<std::size_t>(g)]);
      return powers.emplace(key, std::move(r)).first->second;
    };
    OreFraction<C> total = from(Element<C>());
    for (const auto& [m, c] : e) {
      OreFraction<C> term = from(Element<C>::scalar(coeff(c)));
      for (int g = 0; g < kMaxGenerators; ++g) {
        if (!m[g]) continue;
        if (static_cast<std::size_t>(g) >= images.size()) throw PresentationError("no image for a generator");
        for (int k = 1; k <= m[g]; ++k) pw(g, k);
        term = multiply(term, pw(g, m[g]));
      }
      total = add(total, term);
    }
    return total;
  }

 private:
  std::vector<int> zeros() const { return std::vector<int>(c_.size(), 0); }
  void check(const OreFraction<C>& f) const {
    if (f.denominator().size() > c_.size()) throw UnregisteredDenominator("fraction refers to an unknown denominator");
  }

  Engine<C>& eng_;
  const Presentation<C>& p_;
  std::vector<std::vector<int>> c_;
};

template <class C>
std::string format_fraction(const OreFraction<C>& f, const Presentation<C>& p, PrintStyle style = PrintStyle::Ascii) {
  std::string s = format_element(f.numerator(), p.generators(), style);
  std::string den;
  for (std::size_t k = 0; k < f.denominator().size(); ++k) {
    int a = f.denominator()[k];
    if (!a) continue;
    if (!den.empty()) den += "*";
    den += p.commuters()[k].name + "^-" + std::to_string(a);
  }
  if (den.empty()) return s;
  return "(" + s + ")*" + den;
}

}  // namespace qweyl
