#include <gtest/gtest.h>

#include <random>

#include "qweyl/poisson.hpp"

using namespace qweyl;

namespace {

CommPoly random_poly(std::mt19937_64& rng, int N) {
  std::size_t n = static_cast<std::size_t>(2 * N);
  std::uniform_int_distribution<int> e(0, 2), c(-3, 3), pick(0, 1);
  CommPoly p(n);
  for (int t = 0; t < 3; ++t) {
    CommPoly::Exponent ex(n, 0);
    for (auto& x : ex)
      if (pick(rng)) x = e(rng);
    p += CommPoly::monomial(ex, c(rng));
  }
  return p;
}

// sum_{u,v} pi^{uv} d_u f d_v g
CommPoly leibniz_bracket(const PolyBivector& b, const CommPoly& f, const CommPoly& g) {
  CommPoly s(b.dim());
  for (std::size_t u = 0; u < b.dim(); ++u)
    for (std::size_t v = 0; v < b.dim(); ++v)
      if (!b.pi[u][v].is_zero()) s += b.pi[u][v] * f.derivative(u) * g.derivative(v);
  return s;
}

}  // namespace

TEST(Semiclassical, BracketIsTheBiderivationOfItsBivector) {
  std::mt19937_64 rng(51);
  for (int N = 1; N <= 3; ++N) {
    auto b = semiclassical_bivector(N);
    EXPECT_TRUE(b.antisymmetric());
    Engine<QLaurent> eng(dq_cn(N));
    for (int i = 0; i < 15; ++i) {
      CommPoly f = random_poly(rng, N), g = random_poly(rng, N);
      EXPECT_EQ(semiclassical_bracket(eng, f, g, N), leibniz_bracket(b, f, g)) << "N=" << N;
    }
  }
}

TEST(Semiclassical, CoordinateBracketsForOneVariable) {
  auto b = semiclassical_bivector(1);
  auto names = phase_space_names(1);
  EXPECT_EQ(b.pi[0][1].to_string(names), "-2*y1*z1 - 2");
}

TEST(Semiclassical, JacobiHolds) {
  for (int N = 1; N <= 3; ++N) {
    auto r = jacobi_check(semiclassical_bivector(N));
    EXPECT_TRUE(r.holds()) << "N=" << N;
    std::size_t n = static_cast<std::size_t>(2 * N);
    EXPECT_EQ(r.triples, n * (n - 1) * (n - 2) / 6);
  }
}

TEST(PrintedBivector, SignsDifferOnMixedPairs) {
  for (int N = 1; N <= 3; ++N) {
    auto c = compare_with_pi(N);
    EXPECT_TRUE(c.absolute_values_match()) << "N=" << N;
    auto names = phase_space_names(N);
    for (const auto& row : c.rows) {
      bool mixed = row.pair.find('y') != std::string::npos && row.pair.find('z') != std::string::npos;
      EXPECT_EQ(row.sign, mixed ? -1 : 1) << row.pair;
    }
  }
}

TEST(PrintedBivector, FailsJacobi) {
  EXPECT_TRUE(jacobi_check(pi_bivector(1)).holds());
  EXPECT_EQ(jacobi_check(pi_bivector(2)).failures.size(), 4u);
  EXPECT_EQ(jacobi_check(pi_bivector(3)).failures.size(), 12u);
}

TEST(Jacobi, NegativeControl) {
  PolyBivector b(2);
  std::size_t n = b.dim();
  b.set(0, 1, CommPoly::variable(n, 2));
  b.set(2, 3, CommPoly::variable(n, 0));
  EXPECT_FALSE(jacobi_check(b).holds());
  PolyBivector c(1);
  c.set(0, 1, CommPoly::variable(2, 0) * CommPoly::variable(2, 1));
  EXPECT_TRUE(jacobi_check(c).holds());
}

TEST(Degeneracy, OneVariableDeterminant) {
  auto det = degeneracy_determinant(semiclassical_bivector(1));
  EXPECT_EQ(det, locus_product(1).pow(2).scaled(4));
}

TEST(Degeneracy, LocusMatchesTheProductOfFactors) {
  for (int N = 1; N <= 2; ++N) {
    EXPECT_TRUE(same_vanishing_locus(degeneracy_determinant(semiclassical_bivector(N)), locus_product(N))) << N;
    EXPECT_TRUE(same_vanishing_locus(degeneracy_determinant(pi_bivector(N)), locus_product(N))) << N;
  }
}

TEST(Degeneracy, LocusComparisonRejectsDifferentSets) {
  CommPoly f = locus_factor(2, 1), g = locus_factor(2, 2);
  EXPECT_FALSE(same_vanishing_locus(f, g));
  EXPECT_TRUE(same_vanishing_locus(f.pow(3), f));
  EXPECT_FALSE(same_vanishing_locus(f, f + CommPoly::constant(4, 1)));
}
