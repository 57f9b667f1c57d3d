#pragma once

// Quantum moment maps O_q^+(GL_2) -> D_q(C^2) and O_q^+(GL_2) -> D_q^+(GL_2),
// their classical counterparts and their restrictions to l-centres.

#include <functional>
#include <memory>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "qweyl/center.hpp"
#include "qweyl/commpoly.hpp"
#include "qweyl/fibers.hpp"
#include "qweyl/linalg.hpp"
#include "qweyl/ore.hpp"

namespace qweyl {

struct RelationCheck {
  std::string relation;
  std::string image;
  bool vanishes = false;
};

/// Generator images of a map from a source presentation into Ore fractions of a target.
template <class C>
struct AlgebraHom {
  Presentation<C> source;
  std::shared_ptr<Engine<C>> target;
  std::vector<OreFraction<C>> images;
  std::vector<RelationCheck> checks;
  bool verified = false;

  OreField<C> field() const { return OreField<C>(*target); }

  OreFraction<C> operator()(const Element<C>& e) const {
    OreField<C> f = field();
    return f.template apply<C>(images, e, [](const C& c) { return c; });
  }
};

/// Image of every source relation g_j g_i - rule(j, i); sets verified when all vanish.
template <class C>
void verify_relations(AlgebraHom<C>& h) {
  OreField<C> f = h.field();
  const auto& src = h.source;
  const auto& tgt = h.target->presentation();
  h.checks.clear();
  for (int j = 0; j < src.size(); ++j)
    for (int i = 0; i < j; ++i) {
      if (!src.has_rule(j, i)) continue;
      OreFraction<C> lhs = f.multiply(h.images[static_cast<std::size_t>(j)], h.images[static_cast<std::size_t>(i)]);
      OreFraction<C> rhs = f.template apply<C>(h.images, src.rule(j, i), [](const C& c) { return c; });
      OreFraction<C> d = f.subtract(lhs, rhs);
      RelationCheck r;
      r.relation = src.generators()[static_cast<std::size_t>(j)] + "*" + src.generators()[static_cast<std::size_t>(i)] +
                   " - (" + format_element(src.rule(j, i), src.generators()) + ")";
      r.image = format_fraction(d, tgt);
      r.vanishes = d.is_zero();
      h.checks.push_back(std::move(r));
    }
  h.verified = std::all_of(h.checks.begin(), h.checks.end(), [](const RelationCheck& r) { return r.vanishes; });
}

// ---------------------------------------------------------------------------
// mu_q : O_q^+(GL_2) -> D_q(C^2)

enum class MuConvention {
  /// L -> q^-2 [1 + d2 x2, d2 x1; d1 x2, 1 + d1 x1]; d -> 1 + x1 d1 and det_q -> beta2.
  Homomorphism,
  /// a -> 1 + d2 x2, b -> d2 x1, c -> d1 x2, d -> 1 + x1 d1 without the common scale.
  AsPrinted,
};

/// mu_q into the given presentation of D_q(C^2) (generic or specialized).
template <class C>
AlgebraHom<C> mu_q_into(Presentation<C> oq, Presentation<C> dq2, MuConvention conv = MuConvention::Homomorphism) {
  AlgebraHom<C> h{std::move(oq), std::make_shared<Engine<C>>(std::move(dq2)), {}, {}, false};
  Engine<C>& e = *h.target;
  const auto& p = e.presentation();
  auto g = [&](int k) { return e.generator(k); };
  OreField<C> f = h.field();
  Element<C> a = e.one() + e.multiply(g(3), g(1));
  Element<C> b = e.multiply(g(3), g(0));
  Element<C> c = e.multiply(g(2), g(1));
  if (conv == MuConvention::AsPrinted) {
    h.images = {f.from(a), f.from(b), f.from(c), f.from(e.one() + e.multiply(g(0), g(2)))};
  } else {
    C s = p.qpow(-2);
    Element<C> d = e.one() + e.multiply(g(2), g(0));
    h.images = {f.from(a.scaled(s)), f.from(b.scaled(s)), f.from(c.scaled(s)), f.from(d.scaled(s))};
  }
  verify_relations(h);
  return h;
}

inline AlgebraHom<QLaurent> mu_q(MuConvention conv = MuConvention::Homomorphism) {
  return mu_q_into(oq_gl2_plus(), dq_cn(2), conv);
}

/// mu_q(det_q) == beta2.
template <class C>
bool mu_det_is_beta2(const AlgebraHom<C>& h) {
  OreField<C> f = h.field();
  return f.equal(h(*h.source.find_named("detq")), f.from(*h.target->presentation().find_named("beta2")));
}

struct FrobeniusEntry {
  std::string name;
  std::string image;
  std::string expected;
  bool match = false;
};

struct FrobeniusReport {
  int ell = 0;
  std::vector<FrobeniusEntry> entries;
  bool all_match() const {
    return std::all_of(entries.begin(), entries.end(), [](const FrobeniusEntry& e) { return e.match; });
  }
};

/// Images of z, b^l, c^l, d^l and det_q^l under mu_q at a primitive l-th root.
inline FrobeniusReport mu_q_frobenius(int ell) {
  check_level(ell);
  auto h = mu_q_into(at_root(oq_gl2_plus(), ell), at_root(dq_cn(2), ell));
  if (!h.verified) throw RelationFailure("mu_q does not respect the relations at the root of unity");
  Engine<CycNumber>& e = *h.target;
  const auto& p = e.presentation();
  auto mono = [&](int x1, int x2, int d1, int d2) {
    Monomial m;
    m.set(0, x1);
    m.set(1, x2);
    m.set(2, d1);
    m.set(3, d2);
    return Element<CycNumber>::monomial(m, p.scalar(1));
  };
  Element<CycNumber> one = p.one();
  Element<CycNumber> z = compute_z(ell);
  auto src = [&](int g) { return h.source.generator(g, ell); };
  Engine<CycNumber> se(h.source);
  Element<CycNumber> detl = se.power(*h.source.find_named("detq"), ell);
  std::vector<std::tuple<std::string, Element<CycNumber>, Element<CycNumber>>> cases = {
      {"z", z, one + mono(0, ell, 0, ell)},
      {"b^" + std::to_string(ell), src(1), mono(ell, 0, 0, ell)},
      {"c^" + std::to_string(ell), src(2), mono(0, ell, ell, 0)},
      {"d^" + std::to_string(ell), src(3), one + mono(ell, 0, ell, 0)},
      {"detq^" + std::to_string(ell), detl, one + mono(ell, 0, ell, 0) + mono(0, ell, 0, ell)},
  };
  FrobeniusReport r;
  r.ell = ell;
  for (auto& [name, x, want] : cases) {
    OreFraction<CycNumber> img = h(x);
    FrobeniusEntry fe;
    fe.name = name;
    fe.image = format_fraction(img, p);
    fe.expected = format_element(want, p.generators());
    fe.match = img.is_polynomial() && img.numerator() == want;
    r.entries.push_back(std::move(fe));
  }
  return r;
}

/// mu~(a, b, xi, zeta) = [1 + a xi, a zeta; b xi, 1 + b zeta].
inline Mat2 classical_mu(const Rational& a, const Rational& b, const Rational& xi, const Rational& zeta) {
  return {1 + a * xi, a * zeta, b * xi, 1 + b * zeta};
}

/// phi~(A, B) = A B^-1 A^-1 B.
inline Mat2 classical_phi(const Mat2& A, const Mat2& B) { return A * B.inverse() * A.inverse() * B; }

/// Coordinates (a, b, xi, zeta) of T*C^2 matched to the l-th powers
/// (d2, d1, x2, x1) so that the Frobenius images are the entries of mu~.
inline const std::vector<std::string> kMuCoordinates = {"a", "b", "xi", "zeta"};

/// Translates an element of the l-centre of D_q(C^2) (exponents divisible by l,
/// rational coefficients) into a polynomial in (a, b, xi, zeta).
inline CommPoly to_classical_mu(const Element<CycNumber>& e, int ell) {
  CommPoly out(4);
  for (const auto& [m, c] : e) {
    if (!c.is_rational()) throw RelationFailure("l-centre element has an irrational coefficient");
    int ex[4] = {m[0], m[1], m[2], m[3]};
    for (int k : ex)
      if (k % ell) throw RelationFailure("element is not in the l-centre");
    // x1 -> zeta, x2 -> xi, d1 -> b, d2 -> a
    out += CommPoly::monomial({ex[3] / ell, ex[2] / ell, ex[1] / ell, ex[0] / ell}, c.rational_value());
  }
  return out;
}

struct DiagramReport {
  int ell = 0;
  std::vector<FrobeniusEntry> entries;  // symbolic comparison per matrix entry
  int samples = 0;
  int sample_failures = 0;
  bool inequations_match = false;
  bool commutes() const {
    return sample_failures == 0 && inequations_match &&
           std::all_of(entries.begin(), entries.end(), [](const FrobeniusEntry& e) { return e.match; });
  }
};

/// Compares mu_q^(l) with the pullback of mu~ entrywise, symbolically and at
/// random rational points, and checks {d^l != 0, det^l != 0} against {beta1^l != 0, beta2^l != 0}.
inline DiagramReport diagram_check_mu(int ell, int samples = 10, std::uint64_t seed = 1) {
  check_level(ell);
  auto h = mu_q_into(at_root(oq_gl2_plus(), ell), at_root(dq_cn(2), ell));
  Engine<CycNumber>& e = *h.target;
  const auto& p = e.presentation();
  Engine<CycNumber> se(h.source);
  std::vector<Element<CycNumber>> gens = {compute_z(ell), h.source.generator(1, ell), h.source.generator(2, ell),
                                          h.source.generator(3, ell)};
  const char* names[] = {"(1,1) <- z", "(1,2) <- b^l", "(2,1) <- c^l", "(2,2) <- d^l"};
  auto v = [](std::size_t k) { return CommPoly::variable(4, k); };
  CommPoly one = CommPoly::constant(4, 1);
  std::vector<CommPoly> classical = {one + v(0) * v(2), v(0) * v(3), v(1) * v(2), one + v(1) * v(3)};
  DiagramReport r;
  r.ell = ell;
  std::vector<CommPoly> pulled;
  for (std::size_t k = 0; k < 4; ++k) {
    OreFraction<CycNumber> img = h(gens[k]);
    FrobeniusEntry fe;
    fe.name = names[k];
    fe.expected = classical[k].to_string(kMuCoordinates);
    if (!img.is_polynomial()) {
      fe.image = format_fraction(img, p);
      pulled.push_back(CommPoly(4));
    } else {
      CommPoly c = to_classical_mu(img.numerator(), ell);
      fe.image = c.to_string(kMuCoordinates);
      fe.match = c == classical[k];
      pulled.push_back(c);
    }
    r.entries.push_back(std::move(fe));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> pt = {dist(rng), dist(rng), dist(rng), dist(rng)};
    Mat2 m = classical_mu(pt[0], pt[1], pt[2], pt[3]);
    Mat2 q{pulled[0].evaluate(pt), pulled[1].evaluate(pt), pulled[2].evaluate(pt), pulled[3].evaluate(pt)};
    ++r.samples;
    if (!(m == q)) ++r.sample_failures;
  }
  // The two inequation sets, as sets of l-centre elements up to nonzero scalars.
  Element<CycNumber> dl = h(gens[3]).numerator();
  Element<CycNumber> detl = h(se.power(*h.source.find_named("detq"), ell)).numerator();
  Element<CycNumber> b1 = e.power(*p.find_named("beta1"), ell);
  Element<CycNumber> b2 = e.power(*p.find_named("beta2"), ell);
  auto proportional = [](const Element<CycNumber>& x, const Element<CycNumber>& y) {
    return span_rank<CycNumber>({x, y}) == 1;
  };
  r.inequations_match = (proportional(dl, b1) && proportional(detl, b2)) || (proportional(dl, b2) && proportional(detl, b1));
  return r;
}

// ---------------------------------------------------------------------------
// Inverse matrices by undetermined coefficients

template <class C>
using Matrix2 = std::array<std::array<Element<C>, 2>, 2>;
template <class C>
using FracMatrix2 = std::array<std::array<OreFraction<C>, 2>, 2>;

namespace detail {

/// Field in which the ansatz is solved, and the way back to coefficients.
template <class C>
struct AnsatzField {
  using F = C;
  static F up(const C& c) { return c; }
  static C down(const F& f) { return f; }
};

template <>
struct AnsatzField<QLaurent> {
  using F = RatFunc;
  static F up(const QLaurent& c) { return RatFunc(c); }
  static QLaurent down(const RatFunc& f) {
    auto l = f.to_laurent();
    if (!l) throw NoSolution("inverse entry has a non-Laurent coefficient");
    return *l;
  }
};

}  // namespace detail

/// M^{-1} = N * det^{-1} with N linear in the generators occurring in M (or of
/// the given degree), determined from M N = N' M = det * I where N' is N with
/// det passed to the right. `det` must be a registered commuter.
template <class C>
FracMatrix2<C> matrix_inverse_q(Engine<C>& eng, const Matrix2<C>& M, const std::string& det, int degree = 1) {
  using AF = detail::AnsatzField<C>;
  using F = typename AF::F;
  const auto& p = eng.presentation();
  OreField<C> field(eng);
  auto k = p.commuter_index(det);
  if (!k) throw UnregisteredDenominator("no registered denominator named '" + det + "'");
  const Element<C>& detel = p.commuters()[static_cast<std::size_t>(*k)].element;
  std::vector<int> den(field.size(), 0);
  den[static_cast<std::size_t>(*k)] = 1;

  // Ansatz monomials: exact degree `degree` in the generators used by M.
  std::vector<bool> used(static_cast<std::size_t>(p.size()), false);
  for (const auto& row : M)
    for (const auto& x : row)
      for (const auto& [m, c] : x)
        for (int g = 0; g < p.size(); ++g)
          if (m[g]) used[static_cast<std::size_t>(g)] = true;
  std::vector<Monomial> monos;
  for (const auto& m : monomials_up_to(p, degree)) {
    if (m.degree() != degree) continue;
    bool ok = true;
    for (int g = 0; g < p.size(); ++g)
      if (m[g] && !used[static_cast<std::size_t>(g)]) ok = false;
    if (ok) monos.push_back(m);
  }
  const std::size_t K = monos.size();
  auto unknown = [&](int r, int c, std::size_t t) { return (static_cast<std::size_t>(r * 2 + c)) * K + t; };
  const std::size_t nunk = 4 * K;

  // One linear equation per (side, i, j, monomial of the product).
  std::map<std::tuple<int, int, int, Monomial>, std::vector<F>> eqs;
  auto row = [&](int side, int i, int j, const Monomial& m) -> std::vector<F>& {
    auto [it, ins] = eqs.try_emplace({side, i, j, m}, std::vector<F>(nunk + 1));
    return it->second;
  };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      for (int s = 0; s < 2; ++s)
        for (std::size_t t = 0; t < K; ++t) {
          Element<C> mt = Element<C>::monomial(monos[t], p.scalar(1));
          // M N: sum_s M[i][s] N[s][j]
          for (const auto& [m, c] : eng.multiply(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)], mt))
            row(0, i, j, m)[unknown(s, j, t)] += AF::up(c);
          // N det^-1 M: sum_s N[i][s] (det^-1 M[s][j] det) det^-1
          Element<C> moved = field.pass_left(den, M[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)]);
          for (const auto& [m, c] : eng.multiply(mt, moved)) row(1, i, j, m)[unknown(i, s, t)] += AF::up(c);
        }
      if (i == j)
        for (int side = 0; side < 2; ++side)
          for (const auto& [m, c] : detel) row(side, i, j, m)[nunk] -= AF::up(c);
    }
  Matrix<F> A(eqs.size(), nunk + 1);
  std::size_t r = 0;
  for (const auto& [key, v] : eqs) {
    for (std::size_t c = 0; c <= nunk; ++c) A(r, c) = v[c];
    ++r;
  }
  auto piv = rref(A);
  if (!piv.empty() && piv.back() == nunk) throw NoSolution("no inverse of the given ansatz degree");
  std::vector<F> sol(nunk);
  for (std::size_t i = 0; i < piv.size(); ++i) sol[piv[i]] = -A(i, nunk);

  FracMatrix2<C> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Accumulator<C> acc;
      for (std::size_t t = 0; t < K; ++t) {
        const F& v = sol[unknown(i, j, t)];
        if (!is_zero(v)) acc.add(monos[t], AF::down(v));
      }
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = OreFraction<C>(acc.to_element(), den);
    }
  return out;
}

template <class C>
FracMatrix2<C> frac_matrix(OreField<C>& f, const Matrix2<C>& m) {
  FracMatrix2<C> out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out[i][j] = f.from(m[i][j]);
  return out;
}

template <class C>
FracMatrix2<C> multiply(OreField<C>& f, const FracMatrix2<C>& a, const FracMatrix2<C>& b) {
  FracMatrix2<C> out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      out[i][j] = f.add(f.multiply(a[i][0], b[0][j]), f.multiply(a[i][1], b[1][j]));
  return out;
}

template <class C>
bool is_identity(OreField<C>& f, const FracMatrix2<C>& m) {
  auto one = f.from(f.engine().one());
  return f.equal(m[0][0], one) && m[0][1].is_zero() && m[1][0].is_zero() && f.equal(m[1][1], one);
}

/// Left and right inverse checks for a matrix and a candidate inverse.
struct InverseCheck {
  bool right = false;
  bool left = false;
  bool two_sided() const { return right && left; }
};

template <class C>
InverseCheck check_inverse(OreField<C>& f, const Matrix2<C>& m, const FracMatrix2<C>& inv) {
  auto fm = frac_matrix(f, m);
  return {is_identity(f, multiply(f, fm, inv)), is_identity(f, multiply(f, inv, fm))};
}

template <class C>
Matrix2<C> symbol_matrix(const Presentation<C>& p, const SymbolMatrix& s) {
  Matrix2<C> m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m[i][j] = p.generator(s[i][j]);
  return m;
}

// ---------------------------------------------------------------------------
// phi_q : O_q^+(GL_2) -> D_q^+(GL_2), L -> D X^-1 D^-1 X

template <class C>
struct PhiMap {
  AlgebraHom<C> hom;
  FracMatrix2<C> x_inverse, d_inverse;
  InverseCheck x_check, d_check;
  OreFraction<C> det_image;
};

template <class C>
PhiMap<C> phi_q_into(Presentation<C> oq, Presentation<C> dq, bool verify = true) {
  PhiMap<C> r;
  r.hom = AlgebraHom<C>{std::move(oq), std::make_shared<Engine<C>>(std::move(dq)), {}, {}, false};
  Engine<C>& e = *r.hom.target;
  OreField<C> f(e);
  const auto& p = e.presentation();
  Matrix2<C> X = symbol_matrix(p, kX), D = symbol_matrix(p, kD);
  r.x_inverse = matrix_inverse_q(e, X, "detqX");
  r.d_inverse = matrix_inverse_q(e, D, "detqD");
  r.x_check = check_inverse(f, X, r.x_inverse);
  r.d_check = check_inverse(f, D, r.d_inverse);
  auto L = multiply(f, multiply(f, multiply(f, frac_matrix(f, D), r.x_inverse), r.d_inverse), frac_matrix(f, X));
  r.hom.images = {L[0][0], L[0][1], L[1][0], L[1][1]};
  if (verify) verify_relations(r.hom);
  r.det_image = r.hom(*r.hom.source.find_named("detq"));
  return r;
}

inline PhiMap<QLaurent> phi_q(bool verify = true) { return phi_q_into(oq_gl2_plus(), dq_gl2_plus(), verify); }

/// k with phi_q(det_q) = q^k, if the image is a q-power.
template <class C>
std::optional<int> det_image_qpower(const PhiMap<C>& m) {
  OreField<C> f = m.hom.field();
  auto norm = f.normalize(m.det_image);
  const auto& p = m.hom.target->presentation();
  for (int k = -16; k <= 16; ++k)
    if (f.equal(norm, f.from(Element<C>::scalar(p.qpow(k))))) return k;
  return std::nullopt;
}

struct PhiFrobeniusReport {
  int ell = 0;
  bool det_identity = false;  // det of the l-centre matrices equals det_q^l, for X and D
  std::vector<FrobeniusEntry> entries;
  int samples = 0;
  std::vector<std::string> sample_failures;
  bool passed() const {
    return det_identity && sample_failures.empty() &&
           std::all_of(entries.begin(), entries.end(), [](const FrobeniusEntry& e) { return e.match; });
  }
};

/// b^l, c^l, d^l: phi_q(g)^l against D^(l) (X^(l))^-1 (D^(l))^-1 X^(l) symbolically;
/// z: both sides at random characters in the fibers of D_q^+(GL_2).
inline PhiFrobeniusReport phi_frobenius_check(int ell, int samples, std::uint64_t seed = 1) {
  check_level(ell);
  if (ell > 3) throw ResourceBound("phi_q Frobenius check is limited to l = 3");
  PhiFrobeniusReport r;
  r.ell = ell;
  auto pm = phi_q_into(at_root(oq_gl2_plus(), ell), at_root(dq_gl2_plus(), ell), false);
  Engine<CycNumber>& e = *pm.hom.target;
  const auto& p = e.presentation();
  OreField<CycNumber> f(e);
  Element<CycNumber> z = compute_z(ell);

  // l-centre matrices, inverted with the classical adjugate over det_q^l.
  auto centre_matrix = [&](int offset) {
    Matrix2<CycNumber> m;
    m[0][0] = embed_gl2(z, offset);
    m[0][1] = p.generator(offset + 1, ell);
    m[1][0] = p.generator(offset + 2, ell);
    m[1][1] = p.generator(offset + 3, ell);
    return m;
  };
  auto adjugate_inverse = [&](const Matrix2<CycNumber>& m, const std::string& det) {
    FracMatrix2<CycNumber> inv;
    OreFraction<CycNumber> s = f.inverse_of(det, ell);
    inv[0][0] = f.multiply(f.from(m[1][1]), s);
    inv[0][1] = f.multiply(f.from(-m[0][1]), s);
    inv[1][0] = f.multiply(f.from(-m[1][0]), s);
    inv[1][1] = f.multiply(f.from(m[0][0]), s);
    return inv;
  };
  auto Xl = centre_matrix(0), Dl = centre_matrix(4);
  auto classical_det = [&](const Matrix2<CycNumber>& m) {
    return e.multiply(m[0][0], m[1][1]) - e.multiply(m[0][1], m[1][0]);
  };
  r.det_identity = classical_det(Xl) == e.power(*p.find_named("detqX"), ell) &&
                   classical_det(Dl) == e.power(*p.find_named("detqD"), ell);
  auto M = multiply(f, multiply(f, multiply(f, frac_matrix(f, Dl), adjugate_inverse(Xl, "detqX")), adjugate_inverse(Dl, "detqD")),
                    frac_matrix(f, Xl));
  const char* names[] = {"b", "c", "d"};
  for (int k = 1; k <= 3; ++k) {
    FrobeniusEntry fe;
    fe.name = std::string(names[k - 1]) + "^" + std::to_string(ell);
    OreFraction<CycNumber> lhs = f.power(pm.hom.images[static_cast<std::size_t>(k)], ell);
    const auto& rhs = M[static_cast<std::size_t>(k / 2)][static_cast<std::size_t>(k % 2)];
    fe.match = f.equal(lhs, rhs);
    fe.image = std::to_string(lhs.numerator().size()) + " terms";
    fe.expected = format_fraction(rhs, p);
    r.entries.push_back(std::move(fe));
  }

  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    GL2Character chi = random_gl2_character(rng);
    auto fib = phi_q_into(at_root(oq_gl2_plus(), ell), gl2_fiber_presentation(ell, chi), false);
    OreField<CycNumber> ff = fib.hom.field();
    Rational want = classical_phi(chi.d_matrix(), chi.x_matrix()).a11;
    OreFraction<CycNumber> got = fib.hom(z);
    ++r.samples;
    if (!ff.equal(got, ff.from(Element<CycNumber>::scalar(CycNumber(ell, want)))))
      r.sample_failures.push_back(format_character(chi));
  }
  return r;
}

}  // namespace qweyl
