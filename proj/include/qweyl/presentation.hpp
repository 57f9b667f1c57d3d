#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/element.hpp"

namespace qweyl {

/// An element s with s*g = q^{weights[g]} g*s for every generator g.
template <class C>
struct ScalarCommuter {
  std::string name;
  Element<C> element;
  std::vector<int> weights;

  /// Exponent e(s, m) with s*m = q^{e} m*s.
  int exponent(const Monomial& m) const {
    int e = 0;
    for (std::size_t g = 0; g < weights.size(); ++g) e += weights[g] * m[static_cast<int>(g)];
    return e;
  }
};

/// Ordered generators, one rewrite rule per out-of-order pair, optional power
/// rules g^k -> P, registered scalar commuters and named elements.
template <class C>
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::string name, std::vector<std::string> generators, Mode mode = Mode{})
      : name_(std::move(name)), generators_(std::move(generators)), mode_(std::move(mode)) {
    if (generators_.size() > static_cast<std::size_t>(kMaxGenerators))
      throw ResourceBound("at most " + std::to_string(kMaxGenerators) + " generators are supported");
    std::size_t n = generators_.size();
    rules_.assign(n * n, std::nullopt);
    power_rules_.assign(n, std::nullopt);
  }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const Mode& mode() const { return mode_; }
  int size() const { return static_cast<int>(generators_.size()); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::string& generator_name(int g) const { return generators_.at(static_cast<std::size_t>(g)); }
  std::optional<int> generator_index(const std::string& name) const {
    for (std::size_t g = 0; g < generators_.size(); ++g)
      if (generators_[g] == name) return static_cast<int>(g);
    return std::nullopt;
  }

  C qpow(int k) const { return lift<C>(QLaurent::q_power(k), mode_); }
  C scalar(const QLaurent& x) const { return lift<C>(x, mode_); }

  Element<C> generator(int g, int power = 1) const { return Element<C>::monomial(Monomial::generator(g, power), C(scalar(1))); }
  Element<C> one() const { return Element<C>::scalar(scalar(1)); }

  /// Normal form of g_j g_i for j > i.
  void set_rule(int j, int i, Element<C> rhs) {
    if (j <= i) throw PresentationError("rules are indexed by out-of-order pairs (j > i)");
    rules_[index(j, i)] = std::move(rhs);
  }
  bool has_rule(int j, int i) const { return rules_[index(j, i)].has_value(); }
  const Element<C>& rule(int j, int i) const {
    const auto& r = rules_[index(j, i)];
    if (!r) throw PresentationError("missing rule for " + generator_name(j) + "*" + generator_name(i));
    return *r;
  }

  /// g^k -> rhs, used for fibers and square-root extensions.
  void set_power_rule(int g, int k, Element<C> rhs) {
    if (k < 1) throw PresentationError("power rules need a positive exponent");
    power_rules_[static_cast<std::size_t>(g)] = std::make_pair(k, std::move(rhs));
  }
  const std::optional<std::pair<int, Element<C>>>& power_rule(int g) const {
    return power_rules_[static_cast<std::size_t>(g)];
  }
  bool has_power_rules() const {
    for (const auto& p : power_rules_)
      if (p) return true;
    return false;
  }

  /// Throws PresentationError unless every out-of-order pair has a rule.
  void validate() const {
    for (int j = 0; j < size(); ++j)
      for (int i = 0; i < j; ++i)
        if (!has_rule(j, i)) throw PresentationError("missing rule for " + generator_name(j) + "*" + generator_name(i));
  }

  /// Appends a scalar commuter without verification; see register_commuter in engine.hpp.
  int add_commuter(ScalarCommuter<C> s) {
    if (s.weights.size() != generators_.size()) throw PresentationError("commuter weight vector has the wrong length");
    commuters_.push_back(std::move(s));
    return static_cast<int>(commuters_.size()) - 1;
  }
  const std::vector<ScalarCommuter<C>>& commuters() const { return commuters_; }
  std::optional<int> commuter_index(const std::string& name) const {
    for (std::size_t k = 0; k < commuters_.size(); ++k)
      if (commuters_[k].name == name) return static_cast<int>(k);
    return std::nullopt;
  }

  void set_named(const std::string& name, Element<C> e) { named_[name] = std::move(e); }
  const std::map<std::string, Element<C>>& named() const { return named_; }
  const Element<C>* find_named(const std::string& name) const {
    auto it = named_.find(name);
    return it == named_.end() ? nullptr : &it->second;
  }

  /// Same presentation with every coefficient pushed through f into ring D under mode m.
  template <class D, class F>
  Presentation<D> convert(Mode m, F f) const {
    Presentation<D> p(name_, generators_, std::move(m));
    for (int j = 0; j < size(); ++j)
      for (int i = 0; i < j; ++i)
        if (has_rule(j, i)) p.set_rule(j, i, rule(j, i).map_coefficients(f));
    for (int g = 0; g < size(); ++g)
      if (const auto& pr = power_rule(g)) p.set_power_rule(g, pr->first, pr->second.map_coefficients(f));
    for (const auto& s : commuters_) p.add_commuter({s.name, s.element.map_coefficients(f), s.weights});
    for (const auto& [n, e] : named_) p.set_named(n, e.map_coefficients(f));
    return p;
  }

 private:
  std::size_t index(int j, int i) const {
    if (j < 0 || i < 0 || j >= size() || i >= size()) throw PresentationError("generator index out of range");
    return static_cast<std::size_t>(j) * generators_.size() + static_cast<std::size_t>(i);
  }

  std::string name_;
  std::vector<std::string> generators_;
  Mode mode_;
  std::vector<std::optional<Element<C>>> rules_;
  std::vector<std::optional<std::pair<int, Element<C>>>> power_rules_;
  std::vector<ScalarCommuter<C>> commuters_;
  std::map<std::string, Element<C>> named_;
};

/// Generic presentation specialized at a primitive ell-th root of unity.
inline Presentation<CycNumber> at_root(const Presentation<QLaurent>& p, int ell) {
  auto out = p.convert<CycNumber>(Mode::root(ell), [ell](const QLaurent& c) { return specialize(c, ell); });
  return out;
}

/// Generic presentation evaluated at a rational value of q.
inline Presentation<Rational> at_value(const Presentation<QLaurent>& p, const Rational& q) {
  return p.convert<Rational>(Mode::numeric(q), [q](const QLaurent& c) { return c.evaluate(q); });
}

}  // namespace qweyl
