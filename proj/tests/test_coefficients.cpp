#include <gtest/gtest.h>

#include <random>

#include "qweyl/coefficients.hpp"
#include "qweyl/errors.hpp"

using namespace qweyl;

namespace {

QLaurent random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(-4, 4), coef(-5, 5), len(0, 4);
  std::map<int, Rational> t;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    Rational c(coef(rng), 1 + (coef(rng) + 5) % 3);
    c.canonicalize();
    t[deg(rng)] += c;
  }
  return QLaurent::from_terms(t);
}

// a + b w with w^2 = -1 - w
struct Eisenstein {
  Rational a, b;
  friend Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) { return {x.a + y.a, x.b + y.b}; }
  friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  friend bool operator==(const Eisenstein& x, const Eisenstein& y) { return x.a == y.a && x.b == y.b; }
};

Eisenstein oracle_value(const QLaurent& l) {
  Eisenstein w{0, 1}, w2{-1, -1};
  Eisenstein out{0, 0};
  for (const auto& [k, c] : l.terms()) {
    int r = ((k % 3) + 3) % 3;
    Eisenstein p = r == 0 ? Eisenstein{1, 0} : r == 1 ? w : w2;
    out = out + Eisenstein{c, 0} * p;
  }
  return out;
}

Eisenstein as_eisenstein(const CycNumber& c) {
  const auto& r = c.residue();
  return {r.size() > 0 ? r[0] : Rational(0), r.size() > 1 ? r[1] : Rational(0)};
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(to_string(parse_rational("-2/4")), "-1/2");
}

TEST(QPoly, DivmodAndGcd) {
  QPoly a(std::vector<Rational>{-1, 0, 1});  // q^2 - 1
  QPoly b(std::vector<Rational>{-1, 1});     // q - 1
  auto [quo, rem] = divmod(a, b);
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(quo, QPoly(std::vector<Rational>{1, 1}));
  EXPECT_EQ(gcd(a, QPoly(std::vector<Rational>{1, 2, 1})).monic(), QPoly(std::vector<Rational>{1, 1}));
}

TEST(QLaurent, RingAxiomsAtRandom) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    QLaurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(QLaurent, EvaluationIsAHomomorphism) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    QLaurent a = random_laurent(rng), b = random_laurent(rng);
    for (Rational q : {Rational(2), Rational(-3, 2), Rational(1, 5)}) {
      EXPECT_EQ((a * b).evaluate(q), a.evaluate(q) * b.evaluate(q));
      EXPECT_EQ((a + b).evaluate(q), a.evaluate(q) + b.evaluate(q));
    }
  }
}

TEST(QLaurent, ExactDivide) {
  QLaurent qm1 = q_pow(1) - 1;
  QLaurent f = q_pow(4) - q_pow(-2);
  QLaurent g = exact_divide(f, qm1);
  EXPECT_EQ(g * qm1, f);
  EXPECT_THROW(exact_divide(q_pow(2) + 1, qm1), NotDivisible);
}

TEST(QLaurent, Format) {
  EXPECT_EQ(format_coefficient(q_pow(2) - 1), "(q^2 - 1)");
  EXPECT_EQ(format_coefficient(QLaurent(3)), "3");
  EXPECT_EQ(format_coefficient(q_pow(-1)), "q^-1");
}

TEST(RatFunc, FieldOperations) {
  RatFunc a(q_pow(1) - 1), b(q_pow(2) + 1);
  RatFunc x = a / b;
  EXPECT_EQ(x * b, a);
  EXPECT_EQ(x + x - x, x);
  EXPECT_EQ(inverse(a) * a, RatFunc(1));
  auto back = (a * b).to_laurent();
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, (q_pow(1) - 1) * (q_pow(2) + 1));
  EXPECT_FALSE(x.to_laurent().has_value());
}

TEST(CycNumber, QPowerOrder) {
  for (int ell : {3, 5, 7}) {
    EXPECT_EQ(CycNumber::q_power(ell, ell), CycNumber(ell, Rational(1)));
    EXPECT_FALSE(CycNumber::q_power(ell, 1) == CycNumber(ell, Rational(1)));
    // 1 + q + ... + q^{l-1} = 0
    CycNumber s(ell, Rational(0));
    for (int k = 0; k < ell; ++k) s += CycNumber::q_power(ell, k);
    EXPECT_TRUE(s.is_zero());
  }
}

TEST(CycNumber, EvenLevelIsRejected) { EXPECT_THROW(check_level(4), BadLevel); }

TEST(CycNumber, MatchesEisensteinOracle) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    QLaurent a = random_laurent(rng), b = random_laurent(rng);
    CycNumber x = specialize(a, 3), y = specialize(b, 3);
    EXPECT_EQ(as_eisenstein(x), oracle_value(a));
    EXPECT_EQ(as_eisenstein(x * y), oracle_value(a) * oracle_value(b));
    EXPECT_EQ(as_eisenstein(x + y), oracle_value(a) + oracle_value(b));
  }
}

TEST(CycNumber, Inverse) {
  std::mt19937_64 rng(10);
  for (int ell : {3, 5}) {
    for (int i = 0; i < 50; ++i) {
      CycNumber x = specialize(random_laurent(rng), ell);
      if (x.is_zero()) continue;
      EXPECT_EQ(x * x.inverse(), CycNumber(ell, Rational(1)));
    }
  }
}

TEST(CycNumber, QuantumIntegersVanish) {
  // [l]_{q^2} = (q^{2l} - 1)/(q^2 - 1) vanishes at a primitive l-th root; [k] for 0<k<l does not
  for (int ell : {3, 5}) {
    for (int k = 1; k <= ell; ++k) {
      QLaurent s;
      for (int j = 0; j < k; ++j) s += q_pow(2 * j);
      EXPECT_EQ(specialize(s, ell).is_zero(), k == ell) << "l=" << ell << " k=" << k;
    }
  }
}
