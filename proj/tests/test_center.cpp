#include <gtest/gtest.h>

#include "qweyl/center.hpp"
#include "qweyl/criteria.hpp"

using namespace qweyl;

namespace {

using EC = Element<CycNumber>;

// Gaussian binomial in t = q^2 from the product formula.
QLaurent gaussian(int n, int k) {
  QLaurent num = 1, den = 1;
  for (int j = 0; j < k; ++j) {
    num *= q_pow(2 * (n - j)) - 1;
    den *= q_pow(2 * (j + 1)) - 1;
  }
  return exact_divide(num, den);
}

}  // namespace

TEST(ZElement, GoldenStrings) {
  auto p3 = at_root(oq_gl2_plus(), 3);
  EXPECT_EQ(format_element(compute_z(3), p3.generators()), kZ3);
  auto p5 = at_root(oq_gl2_plus(), 5);
  EXPECT_EQ(format_element(compute_z(5), p5.generators()), kZ5);
}

// Multiplies back instead of dividing.
TEST(ZElement, SatisfiesTheDefiningIdentity) {
  for (int ell : {3, 5}) {
    auto p = at_root(oq_gl2_plus(), ell);
    Engine<CycNumber> eng(p);
    EC z = compute_z(ell);
    EC lhs = eng.power(*p.find_named("detq"), ell);
    EC rhs = eng.multiply(z, p.generator(3, ell)) - eng.multiply(p.generator(1, ell), p.generator(2, ell));
    EXPECT_EQ(lhs, rhs) << "l=" << ell;
    EXPECT_TRUE(is_central(eng, z).central);
  }
}

TEST(ZElement, UniqueAndNotJustAPower) {
  auto p = at_root(oq_gl2_plus(), 3);
  Engine<CycNumber> eng(p);
  // right multiplication by d^3 is injective on degree <= 3
  std::vector<EC> images;
  auto monos = monomials_up_to(p, 3);
  for (const auto& m : monos) images.push_back(eng.multiply(EC::monomial(m, p.scalar(1)), p.generator(3, 3)));
  EXPECT_EQ(span_rank(images), monos.size());
  EXPECT_FALSE(is_central(eng, p.generator(0, 3)).central);
  EXPECT_NE(compute_z(3), p.generator(0, 3));
}

TEST(ZElement, RejectsEvenLevels) { EXPECT_THROW(compute_z(4), BadLevel); }

TEST(ZElement, NotDivisibleIsReported) {
  auto p = oq_gl2_plus();
  Engine<QLaurent> eng(p);
  EXPECT_THROW(divide_right_by_generator(eng, p.generator(0), "d", 1), NotDivisible);
  EXPECT_EQ(divide_right_by_generator(eng, eng.multiply(p.generator(0), p.generator(3)), "d", 1), p.generator(0));
}

TEST(BetaPowers, FullSumHoldsAndShorterSumFails) {
  for (int ell : {3, 5})
    for (int N = 1; N <= 3; ++N)
      for (const auto& b : beta_power_identity(N, ell)) {
        EXPECT_TRUE(b.holds) << "N=" << N << " l=" << ell << " i=" << b.i;
        EXPECT_FALSE(b.shorter_sum_holds) << "N=" << N << " l=" << ell << " i=" << b.i;
      }
}

TEST(BetaPowers, GammaMatchesGaussianBinomials) {
  auto t = c_coefficient_table(7);
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)], q_pow(k * (k - 1)) * gaussian(n, k)) << n << "," << k;
}

TEST(BetaPowers, GammaVanishesStrictlyInsideAtTheLevel) {
  for (int ell : {3, 5, 7}) {
    auto t = c_coefficient_table(ell);
    for (int k = 0; k <= ell; ++k)
      EXPECT_EQ(specialize(t[static_cast<std::size_t>(ell)][static_cast<std::size_t>(k)], ell).is_zero(), k > 0 && k < ell);
  }
}

TEST(BetaPowers, ExpansionMatchesRecursion) {
  for (int N = 1; N <= 3; ++N)
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(c_coefficients(n, N).expansion_matches) << n << "," << N;
}

TEST(Gradings, DqHasRankNGradings) {
  for (int N = 1; N <= 3; ++N) {
    auto g = homogeneous_gradings(dq_cn(N));
    EXPECT_EQ(g.size(), static_cast<std::size_t>(N));
    for (const auto& w : g)
      for (int i = 0; i < N; ++i) EXPECT_EQ(w[static_cast<std::size_t>(i)], -w[static_cast<std::size_t>(N + i)]);
  }
}

TEST(Centralizer, Dq1AtThirdRootDegreeSix) {
  auto p = at_root(dq_cn(1), 3);
  Engine<CycNumber> eng(p);
  auto central = centralizer_basis(eng, 6);
  EXPECT_EQ(central.size(), 6u);
  for (const auto& c : central) EXPECT_TRUE(is_central(eng, c).central);
  auto products = products_up_to<CycNumber>(eng, {{p.generator(0, 3), 3}, {p.generator(1, 3), 3}}, 6);
  EXPECT_EQ(products.size(), 6u);
  EXPECT_TRUE(same_span(central, products));
  // the family 1, x^3, d^3, x^3 d^3 alone misses x^6 and d^6
  std::vector<EC> four = {p.one(), p.generator(0, 3), p.generator(1, 3), eng.multiply(p.generator(0, 3), p.generator(1, 3))};
  EXPECT_FALSE(same_span(central, four));
}

TEST(Centralizer, Dq2AtThirdRoot) {
  auto p = at_root(dq_cn(2), 3);
  Engine<CycNumber> eng(p);
  auto central = centralizer_basis(eng, 6);
  std::vector<std::pair<EC, int>> gens;
  for (int g = 0; g < 4; ++g) gens.emplace_back(p.generator(g, 3), 3);
  auto products = products_up_to(eng, gens, 6);
  EXPECT_TRUE(same_span(central, products));
  EXPECT_EQ(span_rank(central), 15u);
}

TEST(Centralizer, GenericQHasTrivialCentre) {
  auto p = at_value(dq_cn(1), Rational(2));
  Engine<Rational> eng(p);
  auto central = centralizer_basis(eng, 4);
  EXPECT_EQ(central.size(), 1u);
}

TEST(Centralizer, OqGl2AtThirdRoot) {
  auto p = at_root(oq_gl2_plus(), 3);
  Engine<CycNumber> eng(p);
  auto central = centralizer_basis(eng, 3);
  // 1, trq, detq, trq^2, trq*detq, trq^3, z, b^3, c^3, d^3 span the degree <= 3 centre
  Element<CycNumber> tr = *p.find_named("trq"), det = *p.find_named("detq");
  std::vector<EC> expected = {p.one(), tr, det, eng.power(tr, 2), eng.multiply(tr, det), eng.power(tr, 3),
                              compute_z(3), p.generator(1, 3), p.generator(2, 3), p.generator(3, 3)};
  for (const auto& e : expected) EXPECT_TRUE(is_central(eng, e).central) << format_element(e, p.generators());
  EXPECT_TRUE(same_span(central, expected));
}

TEST(VW, EmbeddedCopiesCommuteWithTheirOwnMatrix) {
  auto vw = compute_v_w(3);
  auto p = at_root(dq_gl2_plus(), 3);
  Engine<CycNumber> eng(p);
  for (int g = 0; g < 4; ++g) {
    EXPECT_TRUE(eng.commutator(vw.v, p.generator(g)).is_zero());
    EXPECT_TRUE(eng.commutator(vw.w, p.generator(4 + g)).is_zero());
  }
}
