#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>

#include "qweyl/errors.hpp"

namespace qweyl {

inline constexpr int kMaxGenerators = 16;
inline constexpr int kMaxExponent = 255;

/// Ordered monomial g_0^{e_0} g_1^{e_1} ... in a fixed generator order.
/// Ordering: total degree first, then lexicographic on the exponent vector.
class Monomial {
 public:
  Monomial() { e_.fill(0); }

  static Monomial generator(int g, int power = 1) {
    Monomial m;
    m.set(g, power);
    return m;
  }

  int operator[](int g) const { return e_[static_cast<std::size_t>(g)]; }
  void set(int g, int value) {
    if (g < 0 || g >= kMaxGenerators) throw ResourceBound("generator index out of range");
    if (value < 0 || value > kMaxExponent) throw ResourceBound("exponent " + std::to_string(value) + " out of range");
    e_[static_cast<std::size_t>(g)] = static_cast<std::uint8_t>(value);
  }

  bool is_unit() const {
    for (auto x : e_)
      if (x) return false;
    return true;
  }
  int degree() const {
    int d = 0;
    for (auto x : e_) d += x;
    return d;
  }
  /// Index of the first generator with positive exponent, or -1.
  int first() const {
    for (int g = 0; g < kMaxGenerators; ++g)
      if (e_[static_cast<std::size_t>(g)]) return g;
    return -1;
  }
  /// Index of the last generator with positive exponent, or -1.
  int last() const {
    for (int g = kMaxGenerators - 1; g >= 0; --g)
      if (e_[static_cast<std::size_t>(g)]) return g;
    return -1;
  }

  /// Exponent-wise sum; the ordered product when the supports do not interleave.
  friend Monomial combine(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int g = 0; g < kMaxGenerators; ++g) r.set(g, a[g] + b[g]);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e_ < b.e_;
  }
  friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }

  std::size_t hash() const {
    std::uint64_t lo, hi;
    std::memcpy(&lo, e_.data(), 8);
    std::memcpy(&hi, e_.data() + 8, 8);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL;
    h ^= (hi + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint8_t, kMaxGenerators> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct MonomialPairHash {
  std::size_t operator()(const std::pair<Monomial, Monomial>& p) const {
    return p.first.hash() * 31 + (p.second.hash() ^ (p.second.hash() >> 17));
  }
};

}  // namespace qweyl
