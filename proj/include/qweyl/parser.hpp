#pragma once

// Surface syntax:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := atom ['^' int]
//   atom   := rational | 'q' ['^' int] | ident | '(' expr ')'
// Products keep their written order. Negative exponents are accepted only on
// registered denominators, or inside a term whose scalar factor vanishes.

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "qweyl/ore.hpp"

namespace qweyl {

struct Expr {
  enum Kind { Number, QPower, Symbol, Sum, Product, Power };
  Kind kind = Number;
  Rational value;
  int exponent = 0;
  std::string name;
  std::vector<Expr> children;
  std::vector<int> signs;  // Sum only: +1 / -1 per child
  std::size_t position = 0;
};

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (i_ != s_.size()) throw SyntaxError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_atom() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  Expr expr() {
    Expr sum;
    sum.kind = Expr::Sum;
    skip();
    sum.position = i_;
    int sign = 1;
    if (peek('-') || peek('+')) {
      sign = s_[i_] == '-' ? -1 : 1;
      ++i_;
    }
    sum.children.push_back(term());
    sum.signs.push_back(sign);
    while (peek('+') || peek('-')) {
      sign = s_[i_] == '-' ? -1 : 1;
      ++i_;
      sum.children.push_back(term());
      sum.signs.push_back(sign);
    }
    return sum;
  }

  Expr term() {
    Expr prod;
    prod.kind = Expr::Product;
    skip();
    prod.position = i_;
    prod.children.push_back(factor());
    for (;;) {
      if (peek('*')) {
        ++i_;
        prod.children.push_back(factor());
      } else if (starts_atom()) {
        prod.children.push_back(factor());
      } else {
        break;
      }
    }
    return prod;
  }

  int integer() {
    skip();
    std::size_t start = i_;
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
      neg = s_[i_] == '-';
      ++i_;
    }
    std::size_t d = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (d == i_) throw SyntaxError("expected an integer exponent", start);
    if (i_ - d > 6) throw SyntaxError("exponent too large", start);
    int v = std::stoi(s_.substr(d, i_ - d));
    return neg ? -v : v;
  }

  Expr factor() {
    Expr a = atom();
    if (!peek('^')) return a;
    ++i_;
    skip();
    std::size_t pos = i_;
    int k;
    if (peek('(')) {
      // q^(-2) and x^(3) are accepted as well
      ++i_;
      k = integer();
      if (!peek(')')) throw SyntaxError("expected ')'", i_);
      ++i_;
    } else {
      k = integer();
    }
    if (a.kind == Expr::QPower && a.exponent == 1 && a.children.empty()) {
      a.exponent = k;
      return a;
    }
    Expr p;
    p.kind = Expr::Power;
    p.exponent = k;
    p.position = pos;
    p.children.push_back(std::move(a));
    return p;
  }

  Expr atom() {
    skip();
    if (i_ >= s_.size()) throw SyntaxError("unexpected end of input", i_);
    Expr e;
    e.position = i_;
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      e = expr();
      if (!peek(')')) throw SyntaxError("expected ')'", i_);
      ++i_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        std::size_t d = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (d == i_) throw SyntaxError("expected a denominator", d);
      }
      e.kind = Expr::Number;
      try {
        e.value = parse_rational(s_.substr(start, i_ - start));
      } catch (const Error&) {
        throw SyntaxError("bad rational literal", start);
      }
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      e.name = s_.substr(start, i_ - start);
      if (e.name == "q") {
        e.kind = Expr::QPower;
        e.exponent = 1;
      } else {
        e.kind = Expr::Symbol;
      }
      return e;
    }
    throw SyntaxError("unexpected '" + std::string(1, c) + "'", i_);
  }

  std::string s_;
  std::size_t i_ = 0;
};

inline Expr parse_expression(const std::string& text) { return Parser(text).parse(); }

/// Evaluates parsed expressions in one presentation, to Ore fractions.
template <class C>
class Evaluator {
 public:
  explicit Evaluator(OreField<C>& field) : f_(field), p_(field.engine().presentation()) {}

  OreFraction<C> evaluate(const Expr& e) {
    Value v = eval(e);
    if (v.poisoned) throw SyntaxError("negative exponent on a symbol that is not a registered denominator", v.poison_at);
    return v.f;
  }

  OreFraction<C> evaluate(const std::string& text) { return evaluate(parse_expression(text)); }

  /// Evaluates and requires a polynomial result.
  Element<C> element(const std::string& text) {
    auto r = evaluate(text);
    if (!r.is_polynomial()) throw SyntaxError("expression has a denominator where an element is required", 0);
    return r.numerator();
  }

  /// Resolves an identifier: generator, named element (beta_i spelled beta1 or beta_1).
  Element<C> symbol(const std::string& name) const {
    if (auto g = p_.generator_index(name)) return p_.generator(*g);
    if (const auto* e = p_.find_named(name)) return *e;
    std::string alt = name;
    if (auto k = alt.find('_'); k != std::string::npos) {
      alt.erase(k, 1);
      if (const auto* e = p_.find_named(alt)) return *e;
    }
    throw UnknownSymbol(name);
  }

 private:
  struct Value {
    OreFraction<C> f;
    bool poisoned = false;
    std::size_t poison_at = 0;
  };

  Value plain(const Element<C>& e) { return {f_.from(e)}; }

  Value eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Number:
        return plain(Element<C>::scalar(p_.scalar(QLaurent(e.value))));
      case Expr::QPower:
        return plain(Element<C>::scalar(p_.qpow(e.exponent)));
      case Expr::Symbol:
        return plain(symbol(e.name));
      case Expr::Sum: {
        Value acc = plain(Element<C>());
        for (std::size_t k = 0; k < e.children.size(); ++k) {
          Value v = eval(e.children[k]);
          if (v.poisoned || acc.poisoned) {
            if (!acc.poisoned) acc = v;
            continue;
          }
          acc.f = e.signs[k] < 0 ? f_.subtract(acc.f, v.f) : f_.add(acc.f, v.f);
        }
        return acc;
      }
      case Expr::Product: {
        Value acc = plain(p_.one());
        for (const auto& c : e.children) {
          Value v = eval(c);
          if (acc.poisoned || v.poisoned) {
            bool zero = (!acc.poisoned && acc.f.is_zero()) || (!v.poisoned && v.f.is_zero());
            if (zero) {
              acc = plain(Element<C>());
            } else if (!acc.poisoned) {
              acc = v;
            }
            continue;
          }
          acc.f = f_.multiply(acc.f, v.f);
        }
        return acc;
      }
      case Expr::Power: {
        Value base = eval(e.children.front());
        if (base.poisoned) return base;
        if (e.exponent >= 0) return {f_.power(base.f, e.exponent)};
        if (base.f.is_polynomial()) {
          try {
            OreFraction<C> inv = f_.inverse_of(base.f.numerator(), 1);
            return {f_.power(inv, -e.exponent)};
          } catch (const UnregisteredDenominator&) {
          }
        }
        Value v;
        v.poisoned = true;
        v.poison_at = e.position;
        return v;
      }
    }
    throw Error("unreachable expression kind");
  }

  OreField<C>& f_;
  const Presentation<C>& p_;
};

}  // namespace qweyl
