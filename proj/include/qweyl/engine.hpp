#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qweyl/presentation.hpp"

namespace qweyl {

/// Normal-form multiplication for a presentation. Holds caches, so one
/// engine per thread; the presentation is copied in and never changes.
template <class C>
class Engine {
 public:
  struct Stats {
    std::uint64_t rule_applications = 0;
    std::uint64_t products = 0;
  };

  explicit Engine(Presentation<C> p, std::size_t cache_limit = std::size_t(1) << 20)
      : p_(std::move(p)), cache_limit_(cache_limit) {
    p_.validate();
  }

  const Presentation<C>& presentation() const { return p_; }
  const Stats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }
  void clear_cache() {
    cache_.clear();
    swaps_.clear();
  }

  Element<C> one() const { return p_.one(); }
  Element<C> generator(int g) const { return p_.generator(g); }
  Element<C> scalar(const C& c) const { return Element<C>::scalar(c); }

  Element<C> multiply(const Element<C>& a, const Element<C>& b) {
    maybe_trim();
    Accumulator<C> acc;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) add_product(acc, ma, mb, ca * cb);
    return acc.to_element();
  }

  Element<C> multiply(const Monomial& a, const Monomial& b) {
    maybe_trim();
    Accumulator<C> acc;
    add_product(acc, a, b, p_.scalar(1));
    return acc.to_element();
  }

  /// Product of a word given as (generator, power) pairs, read left to right.
  Element<C> normal_form(const std::vector<std::pair<int, int>>& word) {
    Element<C> r = one();
    for (const auto& [g, k] : word) {
      if (g < 0 || g >= p_.size()) throw PresentationError("generator index out of range");
      if (k < 0) throw PresentationError("negative power in a word");
      if (p_.power_rule(g)) {
        for (int t = 0; t < k; ++t) r = multiply(r, generator(g));
      } else if (k > 0) {
        r = multiply(r, Element<C>::monomial(Monomial::generator(g, k), p_.scalar(1)));
      }
    }
    return r;
  }

  /// Re-reduces an element whose monomials may violate power rules.
  Element<C> reduce(const Element<C>& e) {
    if (!p_.has_power_rules()) return e;
    Element<C> out;
    for (const auto& [m, c] : e) {
      std::vector<std::pair<int, int>> word;
      for (int g = 0; g < p_.size(); ++g)
        if (m[g]) word.emplace_back(g, m[g]);
      out += normal_form(word).scaled(c);
    }
    return out;
  }

  Element<C> commutator(const Element<C>& a, const Element<C>& b) { return multiply(a, b) - multiply(b, a); }

  Element<C> power(const Element<C>& a, int n) {
    if (n < 0) throw PresentationError("negative power of an element");
    Element<C> result = one();
    Element<C> base = a;
    while (n > 0) {
      if (n & 1) result = multiply(result, base);
      n >>= 1;
      if (n) base = multiply(base, base);
    }
    return result;
  }

 private:
  static constexpr int kMaxDepth = 4000;

  struct DepthGuard {
    int& d;
    explicit DepthGuard(int& depth) : d(depth) {
      if (++d > kMaxDepth) {
        --d;
        throw ResourceBound("rewriting recursion exceeded its depth bound");
      }
    }
    ~DepthGuard() { --d; }
  };

  void maybe_trim() {
    if (depth_ == 0 && cache_.size() > cache_limit_) cache_.clear();
  }

  bool trivial(const Monomial& a, const Monomial& b, Monomial& out) const {
    if (a.is_unit()) {
      out = b;
      return true;
    }
    if (b.is_unit()) {
      out = a;
      return true;
    }
    int j = a.last(), i = b.first();
    if (j < i) {
      out = combine(a, b);
      return true;
    }
    if (j == i) {
      const auto& pr = p_.power_rule(j);
      if (!pr || a[j] + b[j] < pr->first) {
        out = combine(a, b);
        return true;
      }
    }
    return false;
  }

  void add_product(Accumulator<C>& acc, const Monomial& a, const Monomial& b, const C& coeff) {
    Monomial m;
    if (trivial(a, b, m)) {
      acc.add(m, coeff);
      return;
    }
    const Element<C>& r = product(a, b);
    for (const auto& [mm, c] : r) acc.add(mm, coeff * c);
  }

  const Element<C>& product(const Monomial& a, const Monomial& b) {
    auto key = std::make_pair(a, b);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    DepthGuard guard(depth_);
    ++stats_.products;
    Accumulator<C> acc;
    Accumulator<C> mid;
    int j = a.last(), i = b.first();
    if (j == i) {
      const auto& pr = *p_.power_rule(j);
      Monomial left = a;
      left.set(j, a[j] + b[j] - pr.first);
      Monomial right = b;
      right.set(j, 0);
      for (const auto& [m, c] : pr.second) add_product(mid, left, m, c);
      Element<C> t = mid.to_element();
      for (const auto& [m, c] : t) add_product(acc, m, right, c);
    } else {
      int A = a[j], B = b[i];
      Monomial a2 = a;
      a2.set(j, 0);
      Monomial b2 = b;
      b2.set(i, 0);
      const Element<C>& s = swap(j, A, i, B);
      for (const auto& [m, c] : s) add_product(mid, a2, m, c);
      Element<C> t = mid.to_element();
      for (const auto& [m, c] : t) add_product(acc, m, b2, c);
    }
    auto [it, inserted] = cache_.emplace(key, acc.to_element());
    return it->second;
  }

  /// Normal form of g_j^A g_i^B for j > i.
  const Element<C>& swap(int j, int A, int i, int B) {
    std::uint64_t key = ((static_cast<std::uint64_t>(j) * 256 + A) * 256 + i) * 256 + B;
    if (auto it = swaps_.find(key); it != swaps_.end()) return it->second;
    DepthGuard guard(depth_);
    Element<C> result;
    if (A == 1 && B == 1) {
      ++stats_.rule_applications;
      result = p_.rule(j, i);
    } else if (A == 1) {
      const Element<C>& t = swap(j, 1, i, B - 1);
      Accumulator<C> acc;
      Monomial gi = Monomial::generator(i);
      for (const auto& [m, c] : t) add_product(acc, m, gi, c);
      result = acc.to_element();
    } else {
      const Element<C>& t = swap(j, A - 1, i, B);
      Accumulator<C> acc;
      Monomial gj = Monomial::generator(j);
      for (const auto& [m, c] : t) add_product(acc, gj, m, c);
      result = acc.to_element();
    }
    auto [it, inserted] = swaps_.emplace(key, std::move(result));
    return it->second;
  }

  Presentation<C> p_;
  std::size_t cache_limit_;
  int depth_ = 0;
  Stats stats_;
  std::unordered_map<std::pair<Monomial, Monomial>, Element<C>, MonomialPairHash> cache_;
  std::unordered_map<std::uint64_t, Element<C>> swaps_;
};

/// One unresolved overlap found by check_confluence.
template <class C>
struct Overlap {
  std::string word;
  Element<C> difference;
};

/// Reduces every overlap g_k g_j g_i (k > j > i) both ways, plus the overlaps
/// of power rules with single generators, and reports disagreements.
template <class C>
std::vector<Overlap<C>> check_confluence(const Presentation<C>& p) {
  Engine<C> eng(p);
  std::vector<Overlap<C>> out;
  auto name = [&](int g) { return p.generator_name(g); };
  for (int k = 0; k < p.size(); ++k)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i) {
        Element<C> left = eng.multiply(p.rule(k, j), p.generator(i));
        Element<C> right = eng.multiply(p.generator(k), p.rule(j, i));
        Element<C> diff = left - right;
        if (!diff.is_zero()) out.push_back({name(k) + "*" + name(j) + "*" + name(i), std::move(diff)});
      }
  for (int g = 0; g < p.size(); ++g) {
    const auto& pr = p.power_rule(g);
    if (!pr) continue;
    int k = pr->first;
    Element<C> gk1 = Element<C>::monomial(Monomial::generator(g, k - 1), p.scalar(1));
    for (int h = 0; h < p.size(); ++h) {
      if (h == g) continue;
      Element<C> left, right;
      std::string w;
      if (h < g) {
        // g^k h
        left = eng.multiply(pr->second, p.generator(h));
        right = eng.multiply(gk1, p.rule(g, h));
        w = name(g) + "^" + std::to_string(k) + "*" + name(h);
      } else {
        // h g^k
        left = eng.multiply(p.generator(h), pr->second);
        right = eng.multiply(p.rule(h, g), gk1);
        w = name(h) + "*" + name(g) + "^" + std::to_string(k);
      }
      Element<C> diff = left - right;
      if (!diff.is_zero()) out.push_back({w, std::move(diff)});
    }
  }
  return out;
}

/// Verifies s*m = q^{e(s,m)} m*s on every generator and every ordered
/// degree-2 monomial, then appends s to the presentation's commuters.
template <class C>
int register_commuter(Presentation<C>& p, const std::string& name, const Element<C>& element,
                      const std::vector<int>& weights) {
  ScalarCommuter<C> s{name, element, weights};
  if (weights.size() != static_cast<std::size_t>(p.size()))
    throw PresentationError("commuter weight vector has the wrong length");
  Engine<C> eng(p);
  std::vector<Monomial> probes;
  for (int a = 0; a < p.size(); ++a) {
    probes.push_back(Monomial::generator(a));
    for (int b = a; b < p.size(); ++b) {
      Monomial m = Monomial::generator(a);
      m.set(b, m[b] + 1);
      probes.push_back(m);
    }
  }
  for (const auto& m : probes) {
    Element<C> me = eng.reduce(Element<C>::monomial(m, p.scalar(1)));
    Element<C> lhs = eng.multiply(element, me);
    Element<C> rhs = eng.multiply(me, element).scaled(p.qpow(s.exponent(m)));
    if (lhs != rhs) throw PresentationError("element " + name + " does not q-commute with the declared weights");
  }
  for (const auto& t : p.commuters()) {
    std::set<int> seen, back;
    for (const auto& [m, c] : element) seen.insert(t.exponent(m));
    for (const auto& [m, c] : t.element) back.insert(s.exponent(m));
    if (seen.size() > 1 || back.size() > 1)
      throw PresentationError("commuters " + name + " and " + t.name + " are not mutually homogeneous");
  }
  return p.add_commuter(std::move(s));
}

}  // namespace qweyl
