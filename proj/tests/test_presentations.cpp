#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "qweyl/catalog.hpp"
#include "qweyl/criteria.hpp"
#include "qweyl/parser.hpp"
#include "qweyl/printer.hpp"

using namespace qweyl;

namespace {

using E = Element<QLaurent>;
using Mat4 = std::array<std::array<E, 4>, 4>;

// R on C^2 (x) C^2, basis 11, 12, 21, 22.
Mat4 scalar_r(bool flipped) {
  Mat4 r;
  QLaurent q = q_pow(1), off = q_pow(1) - q_pow(-1);
  r[0][0] = E::scalar(q);
  r[1][1] = E::scalar(1);
  r[2][2] = E::scalar(1);
  r[3][3] = E::scalar(q);
  if (flipped)
    r[1][2] = E::scalar(off);
  else
    r[2][1] = E::scalar(off);
  return r;
}

Mat4 scalar_r21_inverse() {
  Mat4 r;
  QLaurent qi = q_pow(-1);
  r[0][0] = E::scalar(qi);
  r[1][1] = E::scalar(1);
  r[2][2] = E::scalar(1);
  r[3][3] = E::scalar(qi);
  r[1][2] = E::scalar(q_pow(-1) - q_pow(1));
  return r;
}

// M (x) 1 and 1 (x) M for a 2x2 matrix of generators.
Mat4 leg(const Presentation<QLaurent>& p, int offset, bool first) {
  Mat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        E g = p.generator(offset + 2 * i + j);
        if (first)
          r[static_cast<std::size_t>(2 * i + k)][static_cast<std::size_t>(2 * j + k)] = g;
        else
          r[static_cast<std::size_t>(2 * k + i)][static_cast<std::size_t>(2 * k + j)] = g;
      }
  return r;
}

Mat4 mul(Engine<QLaurent>& eng, const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) r[i][j] += eng.multiply(a[i][k], b[k][j]);
  return r;
}

bool equal(const Mat4& a, const Mat4& b) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

bool reflection_holds(const Presentation<QLaurent>& p, int offset) {
  Engine<QLaurent> eng(p);
  Mat4 r = scalar_r(false), r21 = scalar_r(true), m1 = leg(p, offset, true), m2 = leg(p, offset, false);
  return equal(mul(eng, mul(eng, mul(eng, r21, m1), r), m2), mul(eng, mul(eng, mul(eng, m2, r21), m1), r));
}

E random_element(std::mt19937_64& rng, const Presentation<QLaurent>& p) {
  std::uniform_int_distribution<int> e(0, 2), c(-4, 4), k(-3, 3), pick(0, 2);
  Accumulator<QLaurent> acc;
  for (int t = 0; t < 4; ++t) {
    Monomial m;
    for (int g = 0; g < p.size(); ++g)
      if (pick(rng) == 0) m.set(g, e(rng));
    acc.add(m, q_pow(k(rng)) * QLaurent(c(rng)) + QLaurent(c(rng)) * q_pow(k(rng)));
  }
  return acc.to_element();
}

}  // namespace

TEST(Reflection, OqGl2SatisfiesTheMatrixRelation) {
  auto p = oq_gl2_plus();
  EXPECT_TRUE(reflection_holds(p, 0));
}

TEST(Reflection, DqGl2SatisfiesAllThreeMatrixRelations) {
  auto p = dq_gl2_plus();
  EXPECT_TRUE(reflection_holds(p, 0));
  EXPECT_TRUE(reflection_holds(p, 4));
  Engine<QLaurent> eng(p);
  Mat4 d1 = leg(p, 4, true), x2 = leg(p, 0, false);
  Mat4 lhs = mul(eng, mul(eng, mul(eng, scalar_r(true), d1), scalar_r(false)), x2);
  Mat4 rhs = mul(eng, mul(eng, mul(eng, x2, scalar_r(true)), d1), scalar_r21_inverse());
  EXPECT_TRUE(equal(lhs, rhs));
}

TEST(Reflection, RMatrixInverse) {
  RMatrix inv = inverse(r21_matrix());
  RMatrix r = r21_matrix();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      QLaurent s;
      for (std::size_t k = 0; k < 4; ++k) s += r[i][k] * inv[k][j];
      EXPECT_EQ(s, QLaurent(i == j ? 1 : 0));
    }
}

TEST(Reflection, QuantumDeterminantsAreCentralOrCommute) {
  auto p = oq_gl2_plus();
  Engine<QLaurent> eng(p);
  const E& det = *p.find_named("detq");
  const E& tr = *p.find_named("trq");
  for (int g = 0; g < 4; ++g) {
    EXPECT_TRUE(eng.commutator(det, p.generator(g)).is_zero());
    EXPECT_TRUE(eng.commutator(tr, p.generator(g)).is_zero());
  }
}

TEST(Parser, RoundTripThroughThePrinter) {
  std::mt19937_64 rng(21);
  for (auto p : {dq_cn(2), oq_gl2_plus(), dq_gl2_plus()}) {
    Engine<QLaurent> eng(p);
    OreField<QLaurent> f(eng);
    Evaluator<QLaurent> ev(f);
    for (int i = 0; i < 40; ++i) {
      E e = random_element(rng, p);
      std::string s = format_element(e, p.generators());
      EXPECT_EQ(ev.element(s), e) << s;
    }
  }
}

TEST(Parser, FractionsAndNamedElements) {
  auto p = dq_cn(2);
  Engine<QLaurent> eng(p);
  OreField<QLaurent> f(eng);
  Evaluator<QLaurent> ev(f);
  EXPECT_EQ(ev.element("beta_1"), ev.element("1 + x1*d1"));
  auto r = ev.evaluate("beta2^-1*beta2");
  EXPECT_TRUE(f.equal(r, f.from(p.one())));
  EXPECT_EQ(ev.element("q^2*x1 - x1*q^2"), E());
}

TEST(Parser, Errors) {
  auto p = dq_cn(1);
  Engine<QLaurent> eng(p);
  OreField<QLaurent> f(eng);
  Evaluator<QLaurent> ev(f);
  EXPECT_THROW(ev.evaluate("x1 +"), SyntaxError);
  EXPECT_THROW(ev.evaluate("(x1"), SyntaxError);
  EXPECT_THROW(ev.evaluate("y7"), UnknownSymbol);
  EXPECT_THROW(ev.evaluate("x1^-1"), SyntaxError);
  EXPECT_TRUE(ev.evaluate("0*x1^-1").is_zero());
  try {
    ev.evaluate("x1 * * d1");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_GT(e.position(), 0u);
  }
}

TEST(Printer, Styles) {
  auto p = dq_cn(1);
  Engine<QLaurent> eng(p);
  E e = eng.normal_form({{1, 1}, {0, 1}});
  EXPECT_EQ(format_element(e, p.generators()), "q^2*x1*d1 + (q^2 - 1)");
  std::string u = format_element(e, p.generators(), PrintStyle::Unicode);
  EXPECT_NE(u.find("\xe2\x88\x82"), std::string::npos);
  std::string l = format_element(e, p.generators(), PrintStyle::Latex);
  EXPECT_NE(l.find("x_{1}"), std::string::npos);
}

TEST(Catalog, ParseAndEnumerate) {
  std::istringstream in(
      "# qweyl-catalog v1\n"
      "algebra = dq2\n"
      "[t]\n"
      "for = i in 1..N; n in 1..NMAX\n"
      "where = n != 2\n"
      "lhs = d{i}*x{i}^{n}\n"
      "rhs = q^{2*n}*x{i}^{n}*d{i} + (q^{2*n} - 1)*beta{i-1}*x{i}^{n-1}\n");
  Catalog c = parse_catalog(in, "inline");
  ASSERT_EQ(c.identities.size(), 1u);
  EXPECT_EQ(instances(c.identities[0], Bounds{4, 4}, 2).size(), 6u);
  auto rep = verify_catalog(c, Bounds{4, 4});
  EXPECT_TRUE(rep.all_pass());
  EXPECT_EQ(rep.results.size(), 6u);
}

TEST(Catalog, RejectsMalformedInput) {
  std::istringstream no_header("algebra = dq1\n");
  EXPECT_THROW(parse_catalog(no_header), SyntaxError);
  std::istringstream no_rhs("# qweyl-catalog v1\nalgebra = dq1\n[a]\nlhs = x1\n");
  EXPECT_THROW(parse_catalog(no_rhs), SyntaxError);
}

TEST(Catalog, WrongIdentityFails) {
  std::istringstream in("# qweyl-catalog v1\nalgebra = dq1\n[bad]\nlhs = d1*x1\nrhs = q^2*x1*d1 + 1\n");
  auto rep = verify_catalog(parse_catalog(in), Bounds{});
  ASSERT_EQ(rep.results.size(), 1u);
  EXPECT_FALSE(rep.results[0].pass);
  EXPECT_EQ(rep.results[0].witness, "(q^2 - 2)");
}

TEST(Catalog, ShippedCatalogsPassAndPrintedVariantsAreFlagged) {
  std::size_t printed = 0, printed_bad = 0;
  for (const auto& file : catalog_files()) {
    auto rep = verify_catalog(load_catalog(catalog_dir() + "/" + file), Bounds{});
    EXPECT_TRUE(rep.all_pass()) << file;
    EXPECT_FALSE(rep.results.empty()) << file;
    for (const auto& r : rep.results)
      if (r.has_printed) {
        ++printed;
        if (!r.printed_pass) ++printed_bad;
      }
  }
  EXPECT_GT(printed, 0u);
  EXPECT_GT(printed_bad, 0u);
}

TEST(Catalog, PrintedCoefficientAgreesOnlyAtFirstPower) {
  auto rep = verify_catalog(load_catalog(catalog_dir() + "/dq-gl2-cross.qcat"), Bounds{});
  int seen = 0;
  for (const auto& r : rep.results) {
    if (r.id != "p21n-x11") continue;
    ++seen;
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.printed_pass, r.binding == "n=1") << r.binding;
  }
  EXPECT_EQ(seen, 4);
}
