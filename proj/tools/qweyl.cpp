// qweyl: command-line driver for normal forms, identity catalogs, centres,
// fibers, moment maps and the Poisson checks.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qweyl/criteria.hpp"
#include "qweyl/parser.hpp"
#include "qweyl/qweyl.hpp"

using namespace qweyl;

namespace {

struct Output {
  bool json = false;
  bool unicode = false;
  bool latex = false;
  std::string path;

  PrintStyle style() const { return latex ? PrintStyle::Latex : unicode ? PrintStyle::Unicode : PrintStyle::Ascii; }
};

/// Lines printed before the check list in text mode.
struct Emitted {
  RunReport report;
  std::vector<std::string> lines;
};

int emit(const Emitted& e, const Output& out) {
  std::string text;
  if (out.json) {
    text = e.report.to_json().dump(2) + "\n";
  } else {
    for (const auto& l : e.lines) text += l + "\n";
    text += e.report.to_text();
  }
  if (out.path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out.path);
    if (!f) throw Error("cannot write report to " + out.path);
    f << text;
  }
  return e.report.exit_code();
}

Rational rational_arg(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw SyntaxError("not a rational number: '" + s + "'", 0);
  }
}

CentralCharacter parse_character(const std::string& text, int N) {
  auto parts = detail::split(text, ',');
  if (parts.size() != static_cast<std::size_t>(2 * N))
    throw SyntaxError("--char needs " + std::to_string(2 * N) + " comma-separated values nu1,nucheck1,...", 0);
  CentralCharacter c;
  for (int i = 0; i < N; ++i) {
    c.nu.push_back(rational_arg(parts[static_cast<std::size_t>(2 * i)]));
    c.nu_check.push_back(rational_arg(parts[static_cast<std::size_t>(2 * i + 1)]));
  }
  return c;
}

template <class C>
Emitted normal_form(Presentation<C> p, const std::string& expr, const Output& out) {
  Engine<C> eng(std::move(p));
  OreField<C> field(eng);
  Evaluator<C> ev(field);
  auto f = ev.evaluate(expr);
  Emitted e;
  e.report.command = "nf";
  std::string ascii = format_fraction(f, eng.presentation());
  std::string shown = format_fraction(f, eng.presentation(), out.style());
  e.report.results["normal_form"] = ascii;
  if (out.style() != PrintStyle::Ascii) e.report.results["rendered"] = shown;
  e.lines.push_back(shown);
  return e;
}

Emitted run_nf(const std::string& algebra, int ell, const std::string& expr, const Output& out) {
  auto p = algebra_by_name(algebra);
  Emitted e = ell ? normal_form(at_root(p, ell), expr, out) : normal_form(p, expr, out);
  e.report.parameters = {{"algebra", algebra}, {"ell", ell}, {"expression", expr}};
  return e;
}

std::string resolve_catalog(const std::string& name) {
  std::ifstream probe(name);
  if (probe) return name;
  std::string dir = catalog_dir() + "/";
  for (const std::string& cand : {dir + name, dir + name + ".qcat"}) {
    std::ifstream f(cand);
    if (f) return cand;
  }
  throw Error("catalog not found: " + name);
}

Emitted run_verify(const std::string& name, long n_max, long m_max) {
  Emitted e;
  e.report.command = "verify";
  e.report.parameters = {{"catalog", name}, {"n_max", n_max}, {"m_max", m_max}};
  if (n_max > 12 || m_max > 12) throw ResourceBound("catalog bounds are limited to 12");
  Catalog cat = load_catalog(resolve_catalog(name));
  auto rep = verify_catalog(cat, {n_max, m_max});
  std::map<std::string, std::pair<int, int>> per_id;
  std::map<std::string, std::string> first_failure;
  std::vector<std::string> order;
  for (const auto& r : rep.results) {
    if (!per_id.count(r.id)) order.push_back(r.id);
    auto& [pass, total] = per_id[r.id];
    ++total;
    if (r.pass) ++pass;
    else if (!first_failure.count(r.id)) first_failure[r.id] = r.binding + ": " + r.witness;
    if (r.has_printed && !r.printed_pass)
      e.report.findings.push_back(r.id + " " + r.binding + ": the printed form differs from the verified one");
  }
  for (const auto& id : order) {
    auto [pass, total] = per_id[id];
    std::string w = std::to_string(pass) + "/" + std::to_string(total);
    if (first_failure.count(id)) w += "; " + first_failure[id];
    e.report.add(check(cat.name + ":" + id, "identity-catalog", pass == total, w));
  }
  e.report.results["instances"] = rep.results.size();
  e.report.results["failures"] = rep.failures();
  e.lines.push_back(cat.name + ": " + std::to_string(rep.results.size() - rep.failures()) + "/" +
                    std::to_string(rep.results.size()) + " instances pass");
  return e;
}

Emitted run_center(const std::string& algebra, int ell, int bound, const Output& out) {
  if (bound > 12) throw ResourceBound("degree bound is limited to 12");
  auto p = at_root(algebra_by_name(algebra), ell);
  Engine<CycNumber> eng(p);
  auto basis = centralizer_basis(eng, bound);
  Emitted e;
  e.report.command = "center";
  e.report.parameters = {{"algebra", algebra}, {"ell", ell}, {"degree_bound", bound}};
  e.report.results["dimension"] = basis.size();
  e.report.results["basis"] = nlohmann::json::array();
  bool all_central = true;
  e.lines.push_back("central subspace of degree <= " + std::to_string(bound) + ": dimension " + std::to_string(basis.size()));
  for (const auto& b : basis) {
    e.report.results["basis"].push_back(format_element(b, p.generators()));
    e.lines.push_back("  " + format_element(b, p.generators(), out.style()));
    all_central = all_central && is_central(eng, b).central;
  }
  e.report.add(check("basis elements commute with every generator", "centralizer", all_central));
  if (algebra.rfind("dq", 0) == 0) {
    std::vector<std::pair<Element<CycNumber>, int>> gens;
    for (int g = 0; g < p.size(); ++g) gens.emplace_back(p.generator(g, ell), ell);
    auto products = products_up_to(eng, gens, bound);
    e.report.add(check("spanned by products of l-th powers", "centralizer", same_span(basis, products),
                       "products span dimension " + std::to_string(span_rank(products))));
  }
  return e;
}

Emitted run_z(int ell, const Output& out) {
  auto p = at_root(oq_gl2_plus(), ell);
  Element<CycNumber> z = compute_z(ell);
  Engine<CycNumber> eng(p);
  Emitted e;
  e.report.command = "z-element";
  e.report.parameters = {{"ell", ell}};
  e.report.results["z"] = format_element(z, p.generators());
  e.lines.push_back(format_element(z, p.generators(), out.style()));
  e.report.add(check("z is central", "z-example", is_central(eng, z).central));
  Element<CycNumber> lhs = eng.power(*p.find_named("detq"), ell);
  Element<CycNumber> rhs = eng.multiply(z, p.generator(3, ell)) - eng.multiply(p.generator(1, ell), p.generator(2, ell));
  e.report.add(check("det_q^l = z d^l - b^l c^l", "z-example", lhs == rhs));
  if (ell == 3) e.report.add(check("matches the l=3 example", "z-example", e.report.results["z"] == kZ3));
  if (ell == 5) e.report.add(check("matches the l=5 example", "z-example", e.report.results["z"] == kZ5));
  return e;
}

Emitted run_tensor(int N) {
  if (N < 1 || N > 4) throw ResourceBound("tensor relations are checked for 1 <= N <= 4");
  Emitted e;
  e.report.command = "fiber";
  e.report.parameters = {{"N", N}, {"tensor", true}};
  for (const auto& r : tensor_decomposition_check(N)) e.report.add(check(r.relation, "tensor-decomposition", r.holds));
  int printed = 0;
  for (const auto& r : tensor_decomposition_check(N, TensorNormalization::AsPrinted)) printed += !r.holds;
  if (printed)
    e.report.findings.push_back("with z_i = -q d_i alpha_i^-1, " + std::to_string(printed) +
                                " relations fail; z_i = -q^-1 d_i alpha_i^-1 satisfies all of them");
  return e;
}

Emitted run_fiber(int N, int ell, const std::string& chr, bool sweep, int samples, std::uint64_t seed) {
  if (N < 1 || N > 3) throw ResourceBound("fibers are supported for 1 <= N <= 3");
  check_level(ell);
  if (N == 3 && ell > 3) throw ResourceBound("fiber of dimension > 3^6 requested");
  if (N == 2 && ell > 5) throw ResourceBound("fiber of dimension > 5^4 requested");
  Emitted e;
  e.report.command = "fiber";
  e.report.parameters = {{"N", N}, {"ell", ell}};
  e.report.results["fibers"] = nlohmann::json::array();
  auto one = [&](const CentralCharacter& c, bool expect) {
    auto v = fiber_verdict(N, ell, c);
    std::string w = "dim " + std::to_string(v.dimension) + ", center " + std::to_string(v.center_dimension) +
                    ", trace rank " + std::to_string(v.trace_rank);
    e.report.results["fibers"].push_back({{"character", format_character(c)},
                                          {"in_locus", in_locus(c)},
                                          {"dimension", v.dimension},
                                          {"center_dimension", v.center_dimension},
                                          {"trace_rank", v.trace_rank},
                                          {"azumaya", v.azumaya}});
    e.report.add(check(format_character(c) + (in_locus(c) ? " in locus" : " off locus"), "azumaya-locus",
                       v.azumaya == expect, w + (v.azumaya ? ", matrix algebra" : ", not a matrix algebra")));
  };
  if (sweep) {
    e.report.parameters["samples"] = samples;
    e.report.parameters["seed"] = seed;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
      // every third sample is forced onto the boundary
      CentralCharacter c = s % 3 == 2 ? random_boundary_character(rng, N, 1 + (s / 3) % N) : random_locus_character(rng, N);
      one(c, in_locus(c));
    }
  } else {
    if (chr.empty()) throw SyntaxError("fiber needs --char or --sweep", 0);
    CentralCharacter c = parse_character(chr, N);
    e.report.parameters["char"] = chr;
    one(c, in_locus(c));
  }
  return e;
}

Emitted run_moment(const std::string& which, int ell, bool frobenius, int samples, std::uint64_t seed, const Output& out) {
  Emitted e;
  e.report.command = "moment-map";
  e.report.parameters = {{"map", which}, {"ell", ell}, {"frobenius", frobenius}, {"samples", samples}, {"seed", seed}};
  auto transcript = [&](const std::vector<RelationCheck>& checks, const std::string& prefix) {
    for (const auto& c : checks) {
      e.report.add(check(prefix + " " + c.relation, prefix + "-homomorphism", c.vanishes, c.vanishes ? "0" : c.image));
    }
  };
  if (which == "mu") {
    auto h = mu_q();
    const auto& tp = h.target->presentation();
    for (std::size_t g = 0; g < h.images.size(); ++g)
      e.lines.push_back(h.source.generators()[g] + " -> " + format_fraction(h.images[g], tp, out.style()));
    transcript(h.checks, "mu");
    e.report.add(check("mu(det_q) = beta2", "mu-determinant", mu_det_is_beta2(h)));
    auto literal = mu_q(MuConvention::AsPrinted);
    e.report.findings.push_back(std::string("unscaled images (d -> 1 + x1 d1, a -> 1 + d2 x2, ...) ") +
                                (literal.verified ? "also respect" : "do not respect") + " the relations");
    if (frobenius) {
      auto f = mu_q_frobenius(ell);
      for (const auto& x : f.entries)
        e.report.add(check("mu(" + x.name + ") = " + x.expected, "mu-frobenius", x.match, x.image));
      auto d = diagram_check_mu(ell, samples, seed);
      for (const auto& x : d.entries) e.report.add(check("entry " + x.name + " = " + x.expected, "mu-diagram", x.match, x.image));
      e.report.add(check("random points", "mu-diagram", d.sample_failures == 0,
                         std::to_string(d.samples) + " samples, " + std::to_string(d.sample_failures) + " failures"));
      e.report.add(check("inequations {d^l, det^l} = {beta1^l, beta2^l}", "mu-diagram", d.inequations_match));
    }
  } else if (which == "phi") {
    auto m = phi_q();
    const auto& tp = m.hom.target->presentation();
    for (std::size_t g = 0; g < m.hom.images.size(); ++g)
      e.lines.push_back(m.hom.source.generators()[g] + " -> " + format_fraction(m.hom.images[g], tp, out.style()));
    e.report.add(check("X^-1 two-sided", "phi-inverse", m.x_check.two_sided()));
    e.report.add(check("D^-1 two-sided", "phi-inverse", m.d_check.two_sided()));
    transcript(m.hom.checks, "phi");
    auto k = det_image_qpower(m);
    e.report.results["det_image_qpower"] = k ? nlohmann::json(*k) : nlohmann::json(nullptr);
    if (frobenius) {
      auto f = phi_frobenius_check(ell, samples, seed);
      e.report.add(check("det of l-centre matrices = det_q^l", "phi-frobenius", f.det_identity));
      for (const auto& x : f.entries) e.report.add(check("phi(" + x.name + ") symbolic", "phi-frobenius", x.match, x.image));
      e.report.add(check("z entry at random characters", "phi-frobenius", f.sample_failures.empty(),
                         std::to_string(f.samples) + " characters"));
    }
  } else {
    throw SyntaxError("moment-map expects 'mu' or 'phi'", 0);
  }
  return e;
}

Emitted run_poisson(int N) {
  if (N < 1 || N > 4) throw ResourceBound("poisson is supported for 1 <= N <= 4");
  Emitted e;
  e.report.command = "poisson";
  e.report.parameters = {{"N", N}};
  auto names = phase_space_names(N);
  auto cmp = compare_with_pi(N);
  e.report.results["table"] = nlohmann::json::array();
  for (const auto& r : cmp.rows) {
    std::string sign = r.sign > 0 ? "+" : r.sign < 0 ? "-" : "?";
    e.report.results["table"].push_back({{"pair", r.pair},
                                         {"semiclassical", r.semiclassical.to_string(names)},
                                         {"printed", r.printed.to_string(names)},
                                         {"sign", sign}});
    e.lines.push_back(r.pair + "  " + r.semiclassical.to_string(names) + "  |  " + r.printed.to_string(names) + "  [" + sign + "]");
  }
  e.report.add(check("|coefficients| agree", "poisson-compare", cmp.absolute_values_match()));
  auto sc = semiclassical_bivector(N);
  auto j = jacobi_check(sc);
  e.report.add(check("Jacobi for the semiclassical bracket", "poisson-jacobi", j.holds(), std::to_string(j.triples) + " triples"));
  auto jp = jacobi_check(pi_bivector(N));
  e.report.findings.push_back("printed bivector " + std::string(jp.holds() ? "satisfies" : "fails") + " Jacobi (" +
                              std::to_string(jp.failures.size()) + " failing triples)");
  if (N <= 3) {
    auto det = degeneracy_determinant(sc);
    e.report.results["determinant"] = det.to_string(names);
    e.report.add(check("degeneracy locus = {prod_i (1 + sum_{k<=i} y_k z_k) = 0}", "poisson-locus",
                       same_vanishing_locus(det, locus_product(N))));
  }
  return e;
}

Emitted run_all() {
  auto results = run_criteria(all_criteria());
  Emitted e;
  e.report.command = "all";
  for (const auto& r : results) {
    std::string line = std::string(r.verdict() == Verdict::Pass ? "PASS" : r.verdict() == Verdict::Skip ? "SKIP" : "FAIL") +
                       "  criterion " + std::to_string(r.id) + ": " + r.title;
    e.lines.push_back(line);
    for (const auto& c : r.checks) {
      CheckRecord x = c;
      x.name = "[" + std::to_string(r.id) + "] " + c.name;
      e.report.add(x);
    }
    for (const auto& f : r.findings) e.report.findings.push_back("[" + std::to_string(r.id) + "] " + f);
  }
  return e;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in quantum Weyl algebras and the reflection equation algebra"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json, "Emit the report as JSON");
  app.add_flag("--unicode", out.unicode, "Render difference operators as the partial sign");
  app.add_flag("--latex", out.latex, "Render elements as LaTeX");
  app.add_option("-o,--output", out.path, "Write the report to a file");

  std::string algebra = "dq2", expr;
  int ell = 0;
  auto* nf = app.add_subcommand("nf", "Normal form of an expression");
  nf->add_option("--algebra", algebra, "dq1..dq8, oq, dqgl2")->capture_default_str();
  nf->add_option("--ell", ell, "Work at a primitive l-th root of unity");
  nf->add_option("expression", expr, "Expression")->required();

  std::string catalog;
  long n_max = 4, m_max = 4;
  auto* verify = app.add_subcommand("verify", "Check an identity catalog");
  verify->add_option("catalog", catalog, "Catalog file or name")->required();
  verify->add_option("--n-max", n_max)->capture_default_str();
  verify->add_option("--m-max", m_max)->capture_default_str();

  int degree_bound = 6, center_ell = 3;
  std::string center_algebra = "dq1";
  auto* center = app.add_subcommand("center", "Central elements up to a degree bound");
  center->add_option("--algebra", center_algebra)->capture_default_str();
  center->add_option("--ell", center_ell)->capture_default_str();
  center->add_option("--degree-bound", degree_bound)->capture_default_str();

  int z_ell = 3;
  auto* z = app.add_subcommand("z-element", "The central element z with det_q^l = z d^l - b^l c^l");
  z->add_option("--ell", z_ell)->capture_default_str();

  int N = 2, fiber_ell = 3, samples = 10;
  std::uint64_t seed = 7;
  std::string chr;
  bool sweep = false, tensor = false;
  auto* fiber = app.add_subcommand("fiber", "Azumaya certificate of fibers of D_q(C^N)");
  fiber->add_option("--N", N)->capture_default_str();
  fiber->add_option("--ell", fiber_ell)->capture_default_str();
  fiber->add_option("--char", chr, "nu1,nucheck1,...,nuN,nucheckN");
  fiber->add_flag("--sweep", sweep, "Sample characters");
  fiber->add_option("--samples", samples)->capture_default_str();
  fiber->add_option("--seed", seed)->capture_default_str();
  fiber->add_flag("--tensor", tensor, "Check the w_i, z_i relations in the square-root extension");

  std::string which;
  int mm_ell = 3, mm_samples = 10;
  std::uint64_t mm_seed = 1;
  bool frob = false;
  auto* mm = app.add_subcommand("moment-map", "Quantum moment maps mu and phi");
  mm->add_option("map", which, "mu or phi")->required()->check(CLI::IsMember({"mu", "phi"}));
  mm->add_option("--ell", mm_ell)->capture_default_str();
  mm->add_flag("--frobenius", frob, "Also check the restriction to l-centres");
  mm->add_option("--samples", mm_samples)->capture_default_str();
  mm->add_option("--seed", mm_seed)->capture_default_str();

  int pN = 2;
  auto* poisson = app.add_subcommand("poisson", "Semiclassical bracket against the bivector");
  poisson->add_option("--N", pN)->capture_default_str();

  auto* all = app.add_subcommand("all", "Run every acceptance criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Emitted e;
    if (nf->parsed()) e = run_nf(algebra, ell, expr, out);
    else if (verify->parsed()) e = run_verify(catalog, n_max, m_max);
    else if (center->parsed()) e = run_center(center_algebra, center_ell, degree_bound, out);
    else if (z->parsed()) e = run_z(z_ell, out);
    else if (fiber->parsed()) e = tensor ? run_tensor(N) : run_fiber(N, fiber_ell, chr, sweep, samples, seed);
    else if (mm->parsed()) e = run_moment(which, mm_ell, frob, mm_samples, mm_seed, out);
    else if (poisson->parsed()) e = run_poisson(pN);
    else if (all->parsed()) e = run_all();
    return emit(e, out);
  } catch (const RelationFailure& e) {
    std::cerr << "qweyl: relation failure: " << e.what() << "\n";
    return 1;
  } catch (const NotDivisible& e) {
    std::cerr << "qweyl: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "qweyl: " << e.what() << "\n";
    return 2;
  }
}
