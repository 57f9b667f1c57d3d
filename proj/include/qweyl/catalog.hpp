#pragma once

// Identity catalogs: text fixtures of parametrised identities lhs = rhs,
// instantiated over integer ranges and checked by normal form.
// File format: docs/catalog-format.md.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "qweyl/algebras.hpp"
#include "qweyl/parser.hpp"

namespace qweyl {

using Binding = std::map<std::string, std::variant<long, std::string>>;

namespace detail {

/// Integer arithmetic over bound variables: + - * ( ), unary minus, and one
/// optional comparison (< <= > >= == !=) yielding 0/1.
class IntExpr {
 public:
  IntExpr(const std::string& s, const Binding& b) : s_(s), b_(b) {}

  long evaluate() {
    long v = comparison();
    skip();
    if (i_ != s_.size()) throw SyntaxError("bad integer template '" + s_ + "'", i_);
    return v;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(const char* op) {
    skip();
    std::size_t n = std::char_traits<char>::length(op);
    if (s_.compare(i_, n, op) == 0) {
      i_ += n;
      return true;
    }
    return false;
  }
  long comparison() {
    long a = sum();
    if (eat("<=")) return a <= sum();
    if (eat(">=")) return a >= sum();
    if (eat("==")) return a == sum();
    if (eat("!=")) return a != sum();
    if (eat("<")) return a < sum();
    if (eat(">")) return a > sum();
    return a;
  }
  long sum() {
    long v = product();
    for (;;) {
      if (eat("+"))
        v += product();
      else if (eat("-"))
        v -= product();
      else
        return v;
    }
  }
  long product() {
    long v = unary();
    while (eat("*")) v *= unary();
    return v;
  }
  long unary() {
    if (eat("-")) return -unary();
    if (eat("(")) {
      long v = sum();
      if (!eat(")")) throw SyntaxError("expected ')' in integer template '" + s_ + "'", i_);
      return v;
    }
    skip();
    std::size_t start = i_;
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return std::stol(s_.substr(start, i_ - start));
    }
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    std::string name = s_.substr(start, i_ - start);
    if (name.empty()) throw SyntaxError("bad integer template '" + s_ + "'", start);
    auto it = b_.find(name);
    if (it == b_.end()) throw UnknownSymbol(name);
    if (!std::holds_alternative<long>(it->second)) throw SyntaxError("variable '" + name + "' is not an integer", start);
    return std::get<long>(it->second);
  }

  const std::string& s_;
  const Binding& b_;
  std::size_t i_ = 0;
};

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

}  // namespace detail

inline long eval_int(const std::string& text, const Binding& b) { return detail::IntExpr(text, b).evaluate(); }

/// Replaces each {expr} by its value under b.
inline std::string instantiate(const std::string& tmpl, const Binding& b) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] != '{') {
      out += tmpl[i];
      continue;
    }
    std::size_t j = tmpl.find('}', i);
    if (j == std::string::npos) throw SyntaxError("unterminated '{' in template", i);
    std::string inner = detail::trim(tmpl.substr(i + 1, j - i - 1));
    auto it = b.find(inner);
    if (it != b.end() && std::holds_alternative<std::string>(it->second))
      out += std::get<std::string>(it->second);
    else
      out += std::to_string(eval_int(inner, b));
    i = j;
  }
  return out;
}

struct LoopVar {
  std::string name;
  std::string lo, hi;               // integer range lo..hi
  std::vector<std::string> values;  // or a list a|b|c
};

struct Identity {
  std::string id;
  std::vector<LoopVar> loops;
  std::vector<std::string> where;
  std::string lhs, rhs;
  std::string printed;  // the identity as originally displayed, when rhs differs from it
  std::string note;
  int line = 0;
};

struct Catalog {
  std::string name;
  std::string algebra;
  std::vector<Identity> identities;
};

struct Bounds {
  long n_max = 4;
  long m_max = 4;
};

inline Catalog parse_catalog(std::istream& in, const std::string& name = "") {
  Catalog cat;
  cat.name = name;
  std::string line;
  int lineno = 0;
  bool header = false;
  Identity* cur = nullptr;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = detail::trim(line);
    if (!header) {
      if (t.empty()) continue;
      if (t != "# qweyl-catalog v1") throw SyntaxError("missing '# qweyl-catalog v1' header", 0);
      header = true;
      continue;
    }
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw SyntaxError("bad record header on line " + std::to_string(lineno), 0);
      cat.identities.push_back({});
      cur = &cat.identities.back();
      cur->id = t.substr(1, t.size() - 2);
      cur->line = lineno;
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos) throw SyntaxError("expected 'key = value' on line " + std::to_string(lineno), 0);
    std::string key = detail::trim(t.substr(0, eq));
    std::string value = detail::trim(t.substr(eq + 1));
    if (!cur) {
      if (key == "algebra")
        cat.algebra = value;
      else if (key == "name")
        cat.name = value;
      else
        throw SyntaxError("unknown catalog key '" + key + "' on line " + std::to_string(lineno), 0);
      continue;
    }
    if (key == "for") {
      for (const auto& part : detail::split(value, ';')) {
        if (part.empty()) continue;
        auto k = part.find(" in ");
        if (k == std::string::npos) throw SyntaxError("expected 'var in range' on line " + std::to_string(lineno), 0);
        LoopVar v;
        v.name = detail::trim(part.substr(0, k));
        std::string dom = detail::trim(part.substr(k + 4));
        if (auto dots = dom.find(".."); dots != std::string::npos) {
          v.lo = dom.substr(0, dots);
          v.hi = dom.substr(dots + 2);
        } else {
          v.values = detail::split(dom, '|');
        }
        cur->loops.push_back(std::move(v));
      }
    } else if (key == "where") {
      for (const auto& part : detail::split(value, ';'))
        if (!part.empty()) cur->where.push_back(part);
    } else if (key == "lhs") {
      cur->lhs = value;
    } else if (key == "rhs") {
      cur->rhs = value;
    } else if (key == "printed") {
      cur->printed = value;
    } else if (key == "note") {
      cur->note = value;
    } else {
      throw SyntaxError("unknown record key '" + key + "' on line " + std::to_string(lineno), 0);
    }
  }
  if (!header) throw SyntaxError("empty catalog", 0);
  for (const auto& id : cat.identities)
    if (id.lhs.empty() || id.rhs.empty()) throw SyntaxError("record [" + id.id + "] needs lhs and rhs", 0);
  return cat;
}

inline Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog " + path);
  std::string base = path.substr(path.find_last_of('/') + 1);
  if (auto dot = base.rfind('.'); dot != std::string::npos) base = base.substr(0, dot);
  return parse_catalog(in, base);
}

/// Enumerates the bindings of an identity within bounds.
inline std::vector<Binding> instances(const Identity& id, const Bounds& bounds, int algebra_n = 0) {
  std::vector<Binding> out;
  Binding b{{"NMAX", bounds.n_max}, {"MMAX", bounds.m_max}, {"N", static_cast<long>(algebra_n)}};
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == id.loops.size()) {
      for (const auto& w : id.where)
        if (!eval_int(w, b)) return;
      out.push_back(b);
      return;
    }
    const auto& v = id.loops[k];
    if (!v.values.empty()) {
      for (const auto& s : v.values) {
        b[v.name] = s;
        rec(k + 1);
      }
    } else {
      long lo = eval_int(v.lo, b), hi = eval_int(v.hi, b);
      for (long x = lo; x <= hi; ++x) {
        b[v.name] = x;
        rec(k + 1);
      }
    }
    b.erase(v.name);
  };
  rec(0);
  return out;
}

inline std::string format_binding(const Binding& b) {
  std::string s;
  for (const auto& [k, v] : b) {
    if (k == "NMAX" || k == "MMAX" || k == "N") continue;
    if (!s.empty()) s += ",";
    s += k + "=" + (std::holds_alternative<long>(v) ? std::to_string(std::get<long>(v)) : std::get<std::string>(v));
  }
  return s;
}

struct InstanceResult {
  std::string id;
  std::string binding;
  bool pass = false;
  std::string witness;  // lhs - rhs when nonzero, or the error text
  bool has_printed = false;
  bool printed_pass = false;
};

struct CatalogReport {
  std::string catalog;
  std::vector<InstanceResult> results;
  bool all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const InstanceResult& r) { return r.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const InstanceResult& r) { return !r.pass; }));
  }
};

inline int thread_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QWEYL_THREADS")) {
    try {
      n = std::stoi(env);
    } catch (...) {
    }
  }
  return std::max(1, n);
}

/// Checks every instance of every identity. Instances are spread over
/// QWEYL_THREADS workers, each with its own engine; results keep catalog order.
inline CatalogReport verify_catalog(const Catalog& cat, const Bounds& bounds) {
  Presentation<QLaurent> p = algebra_by_name(cat.algebra);
  int algebra_n = 0;
  if (cat.algebra.rfind("dq", 0) == 0 && cat.algebra.size() > 2 && std::isdigit(static_cast<unsigned char>(cat.algebra[2])))
    algebra_n = std::stoi(cat.algebra.substr(2));

  struct Task {
    const Identity* id;
    Binding b;
  };
  std::vector<Task> tasks;
  for (const auto& id : cat.identities)
    for (auto& b : instances(id, bounds, algebra_n)) tasks.push_back({&id, std::move(b)});

  CatalogReport report;
  report.catalog = cat.name;
  report.results.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Engine<QLaurent> eng(p);
    OreField<QLaurent> field(eng);
    Evaluator<QLaurent> ev(field);
    for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) {
      const auto& t = tasks[k];
      InstanceResult r;
      r.id = t.id->id;
      r.binding = format_binding(t.b);
      try {
        auto lhs = ev.evaluate(instantiate(t.id->lhs, t.b));
        auto rhs = ev.evaluate(instantiate(t.id->rhs, t.b));
        auto diff = field.subtract(lhs, rhs);
        r.pass = diff.is_zero();
        if (!r.pass) r.witness = format_fraction(diff, p);
        if (!t.id->printed.empty()) {
          r.has_printed = true;
          auto lit = ev.evaluate(instantiate(t.id->printed, t.b));
          r.printed_pass = field.equal(lhs, lit);
        }
      } catch (const Error& e) {
        r.pass = false;
        r.witness = e.what();
      }
      report.results[k] = std::move(r);
    }
  };
  int threads = std::min<int>(thread_count(), static_cast<int>(std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return report;
}

}  // namespace qweyl
