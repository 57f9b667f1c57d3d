#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "qweyl/element.hpp"

namespace qweyl {

enum class PrintStyle { Ascii, Unicode, Latex };

inline std::string coefficient_string(const QLaurent& c) { return format_coefficient(c); }
inline std::string coefficient_string(const CycNumber& c) { return format_coefficient(as_laurent(c)); }
inline std::string coefficient_string(const Rational& c) { return c.get_str(); }

namespace detail {

inline bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

/// d1 / p11 style names denote difference operators.
inline bool is_difference_name(const std::string& name) {
  return name.size() > 1 && (name[0] == 'd' || name[0] == 'p') && all_digits(name.substr(1));
}

inline std::string styled_generator(const std::string& name, PrintStyle style) {
  if (style == PrintStyle::Ascii) return name;
  if (style == PrintStyle::Unicode) return is_difference_name(name) ? "∂" + name.substr(1) : name;
  if (is_difference_name(name)) return "\\partial_{" + name.substr(1) + "}";
  std::size_t k = name.find_first_of("0123456789");
  if (k != std::string::npos && k > 0) {
    std::string head = name.substr(0, k);
    if (head == "alpha" || head == "beta") head = "\\" + head;
    return head + "_{" + name.substr(k) + "}";
  }
  return name;
}

inline std::string latex_coefficient(std::string s) {
  // q^-2 -> q^{-2}, a*b -> a b
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '^') {
      std::size_t j = i + 1;
      if (j < s.size() && s[j] == '-') ++j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out += "^{" + s.substr(i + 1, j - i - 1) + "}";
      i = j - 1;
    } else if (s[i] == '*') {
      out += ' ';
    } else {
      out += s[i];
    }
  }
  return out;
}

}  // namespace detail

inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& names, PrintStyle style = PrintStyle::Ascii) {
  std::string out;
  for (std::size_t g = 0; g < names.size(); ++g) {
    int e = m[static_cast<int>(g)];
    if (!e) continue;
    if (!out.empty()) out += style == PrintStyle::Latex ? " " : "*";
    out += detail::styled_generator(names[g], style);
    if (e > 1) out += style == PrintStyle::Latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

/// Canonical text of an element: terms by decreasing monomial, coefficient before monomial.
template <class C>
std::string format_element(const Element<C>& e, const std::vector<std::string>& names, PrintStyle style = PrintStyle::Ascii) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e) {
    std::string s = coefficient_string(c);
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s = s.substr(1);
    if (style == PrintStyle::Latex) s = detail::latex_coefficient(s);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string mono = format_monomial(m, names, style);
    const char* times = style == PrintStyle::Latex ? " " : "*";
    if (m.is_unit())
      os << s;
    else if (s == "1")
      os << mono;
    else
      os << s << times << mono;
  }
  return os.str();
}

}  // namespace qweyl
