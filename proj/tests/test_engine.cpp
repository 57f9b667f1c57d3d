#include <gtest/gtest.h>

#include <random>

#include "qweyl/action.hpp"
#include "qweyl/algebras.hpp"
#include "qweyl/engine.hpp"
#include "qweyl/ore.hpp"

using namespace qweyl;

namespace {

template <class C>
Element<C> random_element(std::mt19937_64& rng, const Presentation<C>& p, int max_exp = 2, int terms = 3) {
  std::uniform_int_distribution<int> e(0, max_exp), c(-3, 3), k(-2, 2);
  Accumulator<C> acc;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int g = 0; g < p.size(); ++g)
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) m.set(g, e(rng));
    acc.add(m, p.scalar(q_pow(k(rng)) * QLaurent(c(rng))));
  }
  return acc.to_element();
}

// Polynomials in x1..xN over the same coefficients, in the plane's PBW order.
template <class C>
Element<C> random_plane(std::mt19937_64& rng, const Presentation<C>& plane) {
  return random_element(rng, plane, 3, 4);
}

}  // namespace

TEST(Engine, GeneratorRelationsOfDq1) {
  Engine<QLaurent> eng(dq_cn(1));
  // d1 x1 = q^2 x1 d1 + (q^2 - 1)
  Element<QLaurent> lhs = eng.normal_form({{1, 1}, {0, 1}});
  Monomial xd = Monomial::generator(0);
  xd.set(1, 1);
  Element<QLaurent> rhs = Element<QLaurent>::scalar(q_pow(2) - 1) + Element<QLaurent>::monomial(xd, q_pow(2));
  EXPECT_EQ(lhs, rhs);
}

TEST(Engine, AssociativityOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (auto p : {dq_cn(2), dq_cn(3), oq_gl2_plus(), dq_gl2_plus()}) {
    Engine<QLaurent> eng(p);
    int rounds = p.size() > 6 ? 8 : 25;
    for (int i = 0; i < rounds; ++i) {
      auto a = random_element(rng, p), b = random_element(rng, p), c = random_element(rng, p);
      EXPECT_EQ(eng.multiply(eng.multiply(a, b), c), eng.multiply(a, eng.multiply(b, c))) << p.name();
    }
  }
}

TEST(Engine, PowerMatchesRepeatedProduct) {
  std::mt19937_64 rng(12);
  auto p = oq_gl2_plus();
  Engine<QLaurent> eng(p);
  auto a = random_element(rng, p, 1, 2);
  Element<QLaurent> r = eng.one();
  for (int k = 0; k < 4; ++k) r = eng.multiply(r, a);
  EXPECT_EQ(eng.power(a, 4), r);
}

TEST(Engine, SpecializationCommutesWithMultiplication) {
  std::mt19937_64 rng(13);
  auto p = dq_cn(2);
  Engine<QLaurent> generic(p);
  auto pr = at_root(p, 3);
  Engine<CycNumber> root(pr);
  auto pv = at_value(p, Rational(3, 2));
  Engine<Rational> numeric(pv);
  auto to_root = [](const Element<QLaurent>& e) {
    return e.map_coefficients([](const QLaurent& c) { return specialize(c, 3); });
  };
  auto to_value = [](const Element<QLaurent>& e) {
    return e.map_coefficients([](const QLaurent& c) { return c.evaluate(Rational(3, 2)); });
  };
  for (int i = 0; i < 20; ++i) {
    auto a = random_element(rng, p), b = random_element(rng, p);
    auto ab = generic.multiply(a, b);
    EXPECT_EQ(root.multiply(to_root(a), to_root(b)), to_root(ab));
    EXPECT_EQ(numeric.multiply(to_value(a), to_value(b)), to_value(ab));
  }
}

// The product of D_q(C^N) must act on O_q(C^N) as composition of operators.
TEST(Engine, ProductsActAsCompositionOnThePlane) {
  std::mt19937_64 rng(14);
  for (int N : {1, 2, 3}) {
    auto dq = dq_cn(N);
    auto plane = oq_cn(N);
    Engine<QLaurent> eng(dq);
    PlaneAction<QLaurent> act(dq, plane);
    for (int i = 0; i < 20; ++i) {
      auto a = random_element(rng, dq), b = random_element(rng, dq);
      auto f = random_plane(rng, plane);
      EXPECT_EQ(act.act(eng.multiply(a, b), f), act.act(a, act.act(b, f))) << "N=" << N;
    }
  }
}

TEST(Engine, PrintedDifferenceQuotientIsNotARepresentation) {
  auto dq = dq_cn(1);
  auto plane = oq_cn(1);
  Engine<QLaurent> eng(dq);
  PlaneAction<QLaurent> act(dq, plane, ActionConvention::AsPrinted);
  // d1 (x1 . 1) against (q^2 x1 d1 + q^2 - 1) . 1
  Element<QLaurent> lhs = act.act_generator(1, act.act_generator(0, plane.one()));
  Element<QLaurent> rhs = act.act(eng.normal_form({{1, 1}, {0, 1}}), plane.one());
  EXPECT_NE(lhs, rhs);
  PlaneAction<QLaurent> good(dq, plane);
  EXPECT_EQ(good.act_generator(1, good.act_generator(0, plane.one())), good.act(eng.normal_form({{1, 1}, {0, 1}}), plane.one()));
}

TEST(Confluence, StandardSystemsAreConfluent) {
  for (auto p : {dq_cn(1), dq_cn(2), dq_cn(3), dq_cn(4), oq_cn(3), oq_gl2_plus(), dq_gl2_plus()})
    EXPECT_TRUE(check_confluence(p).empty()) << p.name();
}

TEST(Confluence, TruncatedBetaIsDetected) {
  auto ov = check_confluence(dq_cn(2, true));
  ASSERT_FALSE(ov.empty());
  EXPECT_FALSE(ov.front().difference.is_zero());
}

TEST(Commuters, BetaWeightsAreVerified) {
  auto p = dq_cn(2);
  ASSERT_EQ(p.commuters().size(), 2u);
  EXPECT_EQ(p.commuters()[0].name, "beta1");
  Engine<QLaurent> eng(p);
  std::mt19937_64 rng(15);
  for (const auto& s : p.commuters()) {
    for (int i = 0; i < 10; ++i) {
      Element<QLaurent> m = eng.reduce(Element<QLaurent>::monomial(random_element(rng, p).leading().first, 1));
      Monomial lead = m.leading().first;
      EXPECT_EQ(eng.multiply(s.element, m), eng.multiply(m, s.element).scaled(q_pow(s.exponent(lead)))) << s.name;
    }
  }
  auto bad = dq_cn(2);
  EXPECT_THROW(register_commuter(bad, "x1", bad.generator(0), {0, 0, 0, 0}), PresentationError);
}

TEST(Ore, RightFractionsCancel) {
  std::mt19937_64 rng(16);
  auto p = dq_cn(2);
  Engine<QLaurent> eng(p);
  OreField<QLaurent> f(eng);
  for (int i = 0; i < 10; ++i) {
    auto a = f.from(random_element(rng, p));
    auto inv = f.inverse_of("beta2", 2);
    auto s2 = f.from(eng.power(*p.find_named("beta2"), 2));
    EXPECT_TRUE(f.equal(f.multiply(f.multiply(a, inv), s2), a));
    EXPECT_TRUE(f.equal(f.multiply(s2, f.multiply(inv, a)), a));
  }
  EXPECT_THROW(f.inverse_of("nope"), UnregisteredDenominator);
}

TEST(Ore, FractionArithmeticIsAssociative) {
  std::mt19937_64 rng(17);
  auto p = dq_cn(2);
  Engine<QLaurent> eng(p);
  OreField<QLaurent> f(eng);
  auto frac = [&] {
    auto e = f.from(random_element(rng, p, 1, 2));
    return f.multiply(e, f.inverse_of(std::uniform_int_distribution<int>(0, 1)(rng) ? "beta1" : "beta2"));
  };
  for (int i = 0; i < 10; ++i) {
    auto a = frac(), b = frac(), c = frac();
    EXPECT_TRUE(f.equal(f.multiply(f.multiply(a, b), c), f.multiply(a, f.multiply(b, c))));
    EXPECT_TRUE(f.equal(f.multiply(a, f.add(b, c)), f.add(f.multiply(a, b), f.multiply(a, c))));
  }
}

TEST(Ore, GeneratorDenominatorNormalizes) {
  auto p = oq_gl2_plus();
  Engine<QLaurent> eng(p);
  OreField<QLaurent> f(eng);
  auto bd = f.from(eng.multiply(p.generator(1), p.generator(3)));
  auto r = f.normalize(f.multiply(bd, f.inverse_of("d")));
  EXPECT_TRUE(r.is_polynomial());
  EXPECT_EQ(r.numerator(), p.generator(1));
}
