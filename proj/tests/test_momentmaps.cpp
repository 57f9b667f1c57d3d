#include <gtest/gtest.h>

#include <random>

#include "qweyl/momentmaps.hpp"

using namespace qweyl;

namespace {

Element<QLaurent> random_word(std::mt19937_64& rng, const Presentation<QLaurent>& p, int length) {
  std::uniform_int_distribution<int> g(0, p.size() - 1), k(-2, 2);
  Engine<QLaurent> eng(p);
  std::vector<std::pair<int, int>> w;
  for (int i = 0; i < length; ++i) w.emplace_back(g(rng), 1);
  return eng.normal_form(w).scaled(q_pow(k(rng)));
}

Mat2 random_mat(std::mt19937_64& rng, bool invertible) {
  std::uniform_int_distribution<int> d(-4, 4);
  for (;;) {
    Mat2 m{d(rng), d(rng), d(rng), d(rng)};
    if (!invertible || m.det() != 0) return m;
  }
}

}  // namespace

TEST(Mu, IsAHomomorphism) {
  auto h = mu_q();
  EXPECT_TRUE(h.verified);
  EXPECT_EQ(h.checks.size(), 6u);
  EXPECT_TRUE(mu_det_is_beta2(h));
}

TEST(Mu, PrintedImagesFailExactlyThreeRelations) {
  auto h = mu_q(MuConvention::AsPrinted);
  EXPECT_FALSE(h.verified);
  std::vector<std::string> failing;
  for (const auto& c : h.checks)
    if (!c.vanishes) failing.push_back(c.relation.substr(0, 3));
  EXPECT_EQ(failing, (std::vector<std::string>{"b*a", "c*a", "c*b"}));
}

TEST(Mu, MultiplicativeOnRandomWords) {
  auto h = mu_q();
  auto src = oq_gl2_plus();
  Engine<QLaurent> eng(src);
  OreField<QLaurent> f = h.field();
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    auto u = random_word(rng, src, 1 + i % 3), v = random_word(rng, src, 1 + (i / 3) % 3);
    EXPECT_TRUE(f.equal(h(eng.multiply(u, v)), f.multiply(h(u), h(v))));
  }
}

TEST(Mu, HomomorphismAtNumericQ) {
  Rational q(3, 2);
  auto h = mu_q_into(at_value(oq_gl2_plus(), q), at_value(dq_cn(2), q));
  EXPECT_TRUE(h.verified);
  auto bad = mu_q_into(at_value(oq_gl2_plus(), q), at_value(dq_cn(2), q), MuConvention::AsPrinted);
  EXPECT_FALSE(bad.verified);
  // at q = 1 both conventions agree and are homomorphisms
  auto one = mu_q_into(at_value(oq_gl2_plus(), 1), at_value(dq_cn(2), 1), MuConvention::AsPrinted);
  EXPECT_TRUE(one.verified);
}

TEST(Mu, FrobeniusImages) {
  auto r = mu_q_frobenius(3);
  ASSERT_EQ(r.entries.size(), 5u);
  for (const auto& e : r.entries) EXPECT_TRUE(e.match) << e.name << ": " << e.image << " vs " << e.expected;
}

TEST(Mu, DiagramCommutes) {
  auto d = diagram_check_mu(3, 10, 3);
  for (const auto& e : d.entries) EXPECT_TRUE(e.match) << e.name << ": " << e.image;
  EXPECT_EQ(d.samples, 10);
  EXPECT_EQ(d.sample_failures, 0);
  EXPECT_TRUE(d.inequations_match);
}

TEST(Classical, MuHasRankOnePerturbationDeterminant) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int i = 0; i < 20; ++i) {
    Rational a = d(rng), b = d(rng), xi = d(rng), zeta = d(rng);
    EXPECT_EQ(classical_mu(a, b, xi, zeta).det(), 1 + a * xi + b * zeta);
  }
}

TEST(Classical, PhiIsConjugationEquivariant) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 10; ++i) {
    Mat2 A = random_mat(rng, true), B = random_mat(rng, true), g = random_mat(rng, true);
    Mat2 gi = g.inverse();
    EXPECT_EQ(classical_phi(g * A * gi, g * B * gi), g * classical_phi(A, B) * gi);
    EXPECT_EQ(classical_phi(A, B).det(), 1);
  }
  EXPECT_THROW(Mat2({1, 2, 2, 4}).inverse(), SingularInput);
}

TEST(Inverse, DegreeOneAnsatzIsTwoSided) {
  auto p = dq_gl2_plus();
  Engine<QLaurent> eng(p);
  OreField<QLaurent> f(eng);
  auto X = symbol_matrix(p, kX);
  auto inv = matrix_inverse_q(eng, X, "detqX");
  auto c = check_inverse(f, X, inv);
  EXPECT_TRUE(c.right);
  EXPECT_TRUE(c.left);
  // transposed adjugate is not an inverse
  auto wrong = inv;
  std::swap(wrong[0][1], wrong[1][0]);
  EXPECT_FALSE(check_inverse(f, X, wrong).two_sided());
  // entry (0,0) is x22 detqX^-1
  EXPECT_EQ(format_fraction(inv[0][0], p), "(x22)*detqX^-1");
}

TEST(Inverse, OqGl2Matrix) {
  auto p = oq_gl2_plus();
  Engine<QLaurent> eng(p);
  OreField<QLaurent> f(eng);
  auto L = symbol_matrix(p, kL);
  EXPECT_TRUE(check_inverse(f, L, matrix_inverse_q(eng, L, "detq")).two_sided());
}

TEST(Phi, IsAHomomorphismWithScalarDeterminant) {
  auto m = phi_q();
  EXPECT_TRUE(m.x_check.two_sided());
  EXPECT_TRUE(m.d_check.two_sided());
  EXPECT_TRUE(m.hom.verified);
  EXPECT_EQ(m.hom.checks.size(), 6u);
  auto k = det_image_qpower(m);
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(*k, 8);
}

TEST(Phi, ReducesToTheClassicalMapAtQEqualsOne) {
  auto m = phi_q_into(at_value(oq_gl2_plus(), 1), at_value(dq_gl2_plus(), 1));
  EXPECT_TRUE(m.hom.verified);
  OreField<Rational> f = m.hom.field();
  EXPECT_TRUE(f.equal(m.det_image, f.from(Element<Rational>::scalar(1))));
}

TEST(Phi, FrobeniusAtThirdRoot) {
  auto r = phi_frobenius_check(3, 1, 5);
  EXPECT_TRUE(r.det_identity);
  for (const auto& e : r.entries) EXPECT_TRUE(e.match) << e.name;
  EXPECT_EQ(r.samples, 1);
  EXPECT_TRUE(r.sample_failures.empty());
  EXPECT_THROW(phi_frobenius_check(5, 1), ResourceBound);
}
