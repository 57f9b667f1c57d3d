#pragma once

// The ten acceptance criteria as runnable check lists, shared by the
// acceptance binary and `qweyl all`.

#include <atomic>
#include <chrono>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "qweyl/catalog.hpp"
#include "qweyl/center.hpp"
#include "qweyl/fibers.hpp"
#include "qweyl/momentmaps.hpp"
#include "qweyl/poisson.hpp"
#include "qweyl/report.hpp"

#ifndef QWEYL_CATALOG_DIR
#define QWEYL_CATALOG_DIR "catalogs"
#endif

namespace qweyl {

inline const char* kZ3 = "a^3 + 3*a*b*c + 3*q*b*c*d";
inline const char* kZ5 =
    "a^5 + 5*a^3*b*c + 5*(2*q^3 - q)*a^2*b*c*d + 5*a*b^2*c^2 + 5*(2*q^3 + 3*q^2 + 4*q + 2)*a*b*c*d^2 + "
    "5*q^3*b^2*c^2*d - 5*(q^3 + 2*q^2 + q)*b*c*d^3";

inline std::string catalog_dir() {
  if (const char* env = std::getenv("QWEYL_CATALOG_DIR")) return env;
  return QWEYL_CATALOG_DIR;
}

inline const std::vector<std::string>& catalog_files() {
  static const std::vector<std::string> files = {"dq-beta.qcat", "oq-gl2.qcat", "dq-gl2-det.qcat", "dq-gl2-cross.qcat"};
  return files;
}

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CheckRecord> checks;
  std::vector<std::string> findings;
  double seconds = 0;

  Verdict verdict() const {
    bool skipped = false;
    for (const auto& c : checks) {
      if (c.verdict == Verdict::Fail) return Verdict::Fail;
      if (c.verdict == Verdict::Skip) skipped = true;
    }
    if (checks.empty()) return Verdict::Fail;
    return skipped ? Verdict::Skip : Verdict::Pass;
  }
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
CheckRecord guarded(const std::string& name, const std::string& anchor, F f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return check(name, anchor, false, std::string("error: ") + e.what());
  }
}

}  // namespace detail

inline CriterionResult criterion_z() {
  CriterionResult r{1, "z reproduction at l = 3 and l = 5", {}, {}, 0};
  for (auto [ell, want, budget] : {std::tuple{3, kZ3, 1.0}, std::tuple{5, kZ5, 30.0}}) {
    std::string name = "z-element l=" + std::to_string(ell);
    r.checks.push_back(detail::guarded(name, "z-example", [&] {
      auto t0 = std::chrono::steady_clock::now();
      std::string got = format_element(compute_z(ell), at_root(oq_gl2_plus(), ell).generators());
      double s = detail::seconds_since(t0);
      bool ok = got == want && s < budget;
      return check(name, "z-example", ok, ok ? got : "got " + got);
    }));
  }
  return r;
}

inline CriterionResult criterion_beta() {
  CriterionResult r{2, "beta_i^l = 1 + sum_{j<=i} x_j^l d_j^l", {}, {}, 0};
  for (int ell : {3, 5})
    for (int N = 1; N <= 3; ++N) {
      std::string name = "beta power N=" + std::to_string(N) + " l=" + std::to_string(ell);
      r.checks.push_back(detail::guarded(name, "beta-power", [&] {
        bool ok = true;
        std::string bad;
        for (const auto& b : beta_power_identity(N, ell))
          if (!b.holds) {
            ok = false;
            bad += " i=" + std::to_string(b.i);
          }
        return check(name, "beta-power", ok, bad);
      }));
    }
  r.checks.push_back(detail::guarded("c_k vanish at l=3", "beta-coefficients", [] {
    auto t = c_coefficient_table(3);
    bool ok = true;
    for (int k = 1; k <= 2; ++k) ok = ok && specialize(t[3][static_cast<std::size_t>(k)], 3).is_zero();
    bool expansion = c_coefficients(3, 2).expansion_matches;
    return check("c_k vanish at l=3", "beta-coefficients", ok && expansion, expansion ? "" : "recursion disagrees with expansion");
  }));
  return r;
}

inline CriterionResult criterion_catalogs(const Bounds& bounds = {}) {
  CriterionResult r{3, "identity catalogs for n, m <= 4", {}, {}, 0};
  for (const auto& file : catalog_files()) {
    std::string name = "catalog " + file;
    r.checks.push_back(detail::guarded(name, "identity-catalog", [&] {
      auto rep = verify_catalog(load_catalog(catalog_dir() + "/" + file), bounds);
      std::string w = std::to_string(rep.results.size() - rep.failures()) + "/" + std::to_string(rep.results.size()) + " instances";
      for (const auto& x : rep.results)
        if (!x.pass) {
          w += "; first failure " + x.id + " " + x.binding + ": " + x.witness;
          break;
        }
      return check(name, "identity-catalog", rep.all_pass() && !rep.results.empty(), w);
    }));
  }
  return r;
}

inline CriterionResult criterion_confluence() {
  CriterionResult r{4, "confluence of the rewrite systems", {}, {}, 0};
  std::vector<std::pair<std::string, Presentation<QLaurent>>> systems = {
      {"dq1", dq_cn(1)}, {"dq2", dq_cn(2)}, {"dq3", dq_cn(3)}, {"oqgl2", oq_gl2_plus()}, {"dqgl2", dq_gl2_plus()}};
  for (auto& [name, p] : systems) {
    std::string n = "confluent " + name;
    r.checks.push_back(detail::guarded(n, "confluence", [&] {
      auto ov = check_confluence(p);
      return check(n, "confluence", ov.empty(), ov.empty() ? "" : std::to_string(ov.size()) + " unresolved overlaps");
    }));
  }
  r.checks.push_back(detail::guarded("negative control dq2 truncated", "confluence", [] {
    auto ov = check_confluence(dq_cn(2, true));
    return check("negative control dq2 truncated", "confluence", !ov.empty(), std::to_string(ov.size()) + " unresolved overlaps");
  }));
  return r;
}

inline CriterionResult criterion_azumaya(std::uint64_t seed = 7) {
  CriterionResult r{5, "Azumaya certificates at N = 2, l = 3", {}, {}, 0};
  std::mt19937_64 rng(seed);
  for (int s = 0; s < 10; ++s) {
    CentralCharacter c = random_locus_character(rng, 2);
    std::string name = "in locus " + format_character(c);
    r.checks.push_back(detail::guarded(name, "azumaya-locus", [&] {
      auto v = fiber_verdict(2, 3, c);
      bool ok = v.azumaya && v.trace_rank == 81 && v.dimension == 81;
      return check(name, "azumaya-locus", ok,
                   "center " + std::to_string(v.center_dimension) + ", trace rank " + std::to_string(v.trace_rank));
    }));
  }
  for (int k : {1, 2, 1}) {
    CentralCharacter c = random_boundary_character(rng, 2, k);
    std::string name = "boundary " + format_character(c);
    r.checks.push_back(detail::guarded(name, "azumaya-locus", [&] {
      auto v = fiber_verdict(2, 3, c);
      return check(name, "azumaya-locus", !v.azumaya,
                   "center " + std::to_string(v.center_dimension) + ", trace rank " + std::to_string(v.trace_rank));
    }));
  }
  return r;
}

inline CriterionResult criterion_mu(int ell = 3) {
  CriterionResult r{6, "mu_q and its Frobenius diagram", {}, {}, 0};
  r.checks.push_back(detail::guarded("mu_q relations", "mu-homomorphism", [] {
    auto h = mu_q();
    std::string w;
    for (const auto& c : h.checks)
      if (!c.vanishes) w += c.relation + " -> " + c.image + "; ";
    return check("mu_q relations", "mu-homomorphism", h.verified && h.checks.size() == 6, w);
  }));
  r.checks.push_back(detail::guarded("mu_q(det_q) = beta2", "mu-determinant", [] {
    return check("mu_q(det_q) = beta2", "mu-determinant", mu_det_is_beta2(mu_q()));
  }));
  r.checks.push_back(detail::guarded("Frobenius images l=" + std::to_string(ell), "mu-frobenius", [&] {
    auto f = mu_q_frobenius(ell);
    std::string w;
    for (const auto& e : f.entries)
      if (!e.match) w += e.name + ": " + e.image + " != " + e.expected + "; ";
    return check("Frobenius images l=" + std::to_string(ell), "mu-frobenius", f.all_match() && f.entries.size() == 5, w);
  }));
  r.checks.push_back(detail::guarded("diagram and inequations l=" + std::to_string(ell), "mu-diagram", [&] {
    auto d = diagram_check_mu(ell, 10, 11);
    std::string w = std::to_string(d.samples) + " samples, " + std::to_string(d.sample_failures) + " failures";
    if (!d.inequations_match) w += "; inequation sets differ";
    return check("diagram and inequations l=" + std::to_string(ell), "mu-diagram", d.commutes(), w);
  }));
  r.findings.push_back("mu_q is a homomorphism for L -> q^-2 [1 + d2 x2, d2 x1; d1 x2, 1 + d1 x1]; the unscaled a, b, c images are not");
  return r;
}

inline CriterionResult criterion_phi() {
  CriterionResult r{7, "phi_q: L -> D X^-1 D^-1 X", {}, {}, 0};
  std::optional<PhiMap<QLaurent>> pm;
  r.checks.push_back(detail::guarded("phi_q construction", "phi-homomorphism", [&] {
    pm = phi_q();
    return check("phi_q construction", "phi-homomorphism", true);
  }));
  if (!pm) return r;
  r.checks.push_back(check("X^-1 two-sided", "phi-inverse", pm->x_check.two_sided()));
  r.checks.push_back(check("D^-1 two-sided", "phi-inverse", pm->d_check.two_sided()));
  for (const auto& c : pm->hom.checks) r.checks.push_back(check("phi_q " + c.relation, "phi-homomorphism", c.vanishes, c.vanishes ? "" : c.image));
  if (pm->hom.checks.size() != 6) r.checks.push_back(check("six relations checked", "phi-homomorphism", false));
  auto k = det_image_qpower(*pm);
  r.findings.push_back(k ? "phi_q(det_q) = q^" + std::to_string(*k) : "phi_q(det_q) is not a power of q");
  return r;
}

inline CriterionResult criterion_phi_frobenius(int samples = 20, double budget_seconds = 1800) {
  CriterionResult r{8, "phi_q Frobenius at l = 3", {}, {}, 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto f = phi_frobenius_check(3, samples, 3);
    double s = detail::seconds_since(t0);
    r.checks.push_back(check("det of l-centre matrices is det_q^3", "phi-frobenius", f.det_identity));
    for (const auto& e : f.entries) r.checks.push_back(check(e.name + " symbolic", "phi-frobenius", e.match, e.image));
    std::string w = std::to_string(f.samples) + " characters";
    if (!f.sample_failures.empty()) w += ", first failure at " + f.sample_failures.front();
    r.checks.push_back(check("z entry at random characters", "phi-frobenius", f.sample_failures.empty() && f.samples == samples, w));
    if (s > budget_seconds && r.verdict() == Verdict::Pass)
      for (auto& c : r.checks) c.verdict = Verdict::Skip, c.witness += " (over time budget)";
  } catch (const ResourceBound& e) {
    r.checks.push_back({"phi Frobenius", "phi-frobenius", Verdict::Skip, e.what()});
  } catch (const std::exception& e) {
    r.checks.push_back(check("phi Frobenius", "phi-frobenius", false, e.what()));
  }
  return r;
}

inline CriterionResult criterion_poisson() {
  CriterionResult r{9, "semiclassical bracket and the bivector", {}, {}, 0};
  for (int N = 1; N <= 3; ++N) {
    std::string n = std::to_string(N);
    r.checks.push_back(detail::guarded("Jacobi semiclassical N=" + n, "poisson-jacobi", [&] {
      auto j = jacobi_check(semiclassical_bivector(N));
      return check("Jacobi semiclassical N=" + n, "poisson-jacobi", j.holds(), std::to_string(j.triples) + " triples");
    }));
    r.checks.push_back(detail::guarded("|coefficients| match N=" + n, "poisson-compare", [&] {
      auto c = compare_with_pi(N);
      std::string signs;
      for (const auto& row : c.rows) signs += row.pair + (row.sign > 0 ? " +" : row.sign < 0 ? " -" : " ?") + "; ";
      if (N == 2) r.findings.push_back("sign table N=2: " + signs);
      return check("|coefficients| match N=" + n, "poisson-compare", c.absolute_values_match(), signs);
    }));
    auto jp = jacobi_check(pi_bivector(N));
    r.findings.push_back("printed bivector N=" + n + (jp.holds() ? " satisfies Jacobi" : " fails Jacobi on " + std::to_string(jp.failures.size()) + " triples"));
  }
  for (int N = 1; N <= 2; ++N) {
    std::string n = "degeneracy locus N=" + std::to_string(N);
    r.checks.push_back(detail::guarded(n, "poisson-locus", [&] {
      return check(n, "poisson-locus", same_vanishing_locus(degeneracy_determinant(semiclassical_bivector(N)), locus_product(N)));
    }));
  }
  return r;
}

inline CriterionResult criterion_centralizer() {
  CriterionResult r{10, "centralizer converse in bounded degree", {}, {}, 0};
  r.checks.push_back(detail::guarded("D_q(C^1) l=3 degree<=6", "centralizer", [] {
    auto p = at_root(dq_cn(1), 3);
    Engine<CycNumber> eng(p);
    auto central = centralizer_basis(eng, 6);
    auto products = products_up_to<CycNumber>(eng, {{p.generator(0, 3), 3}, {p.generator(1, 3), 3}}, 6);
    bool ok = same_span(central, products);
    return check("D_q(C^1) l=3 degree<=6", "centralizer", ok,
                 "central dim " + std::to_string(span_rank(central)) + ", products dim " + std::to_string(span_rank(products)));
  }));
  r.checks.push_back(detail::guarded("a^3 not central, z central", "centralizer", [] {
    auto p = at_root(oq_gl2_plus(), 3);
    Engine<CycNumber> eng(p);
    bool a3 = is_central(eng, p.generator(0, 3)).central;
    bool z = is_central(eng, compute_z(3)).central;
    return check("a^3 not central, z central", "centralizer", !a3 && z);
  }));
  return r;
}

struct CriterionEntry {
  int id;
  std::function<CriterionResult()> run;
};

inline std::vector<CriterionEntry> all_criteria() {
  return {{1, [] { return criterion_z(); }},          {2, [] { return criterion_beta(); }},
          {3, [] { return criterion_catalogs(); }},   {4, [] { return criterion_confluence(); }},
          {5, [] { return criterion_azumaya(); }},    {6, [] { return criterion_mu(); }},
          {7, [] { return criterion_phi(); }},        {8, [] { return criterion_phi_frobenius(); }},
          {9, [] { return criterion_poisson(); }},    {10, [] { return criterion_centralizer(); }}};
}

/// Runs the selected criteria on up to QWEYL_THREADS workers; results keep id order.
inline std::vector<CriterionResult> run_criteria(const std::vector<CriterionEntry>& list) {
  std::vector<CriterionResult> out(list.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < list.size();) {
      auto t0 = std::chrono::steady_clock::now();
      out[k] = list[k].run();
      out[k].seconds = detail::seconds_since(t0);
    }
  };
  int threads = std::min<int>(thread_count(), static_cast<int>(list.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace qweyl
