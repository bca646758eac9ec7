#include "fatpoint/monomial_ideal.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

namespace {

using fatpoint::ExponentVector;
using fatpoint::MonomialIdeal;

MonomialIdeal ideal(std::size_t n, std::vector<ExponentVector> v) { return fatpoint::minimalize(n, std::move(v)); }

// x0x1, x0x2, x1x2
MonomialIdeal triangle() { return ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}); }

void expect_antichain(const MonomialIdeal& I) {
  const auto g = I.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i > 0) { EXPECT_LT(g[i - 1], g[i]); }
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j) { EXPECT_FALSE(fatpoint::divides(g[i], g[j])) << g[i].to_string() << " | " << g[j].to_string(); }
  }
}

TEST(ExponentVector, DividesExamples) {
  EXPECT_TRUE(fatpoint::divides({1, 1, 0}, {2, 1, 0}));
  EXPECT_TRUE(fatpoint::divides({0, 0, 0}, {3, 0, 7}));
  EXPECT_FALSE(fatpoint::divides({1, 0, 1}, {0, 2, 2}));
}

TEST(ExponentVector, AlphabetMismatchThrows) {
  EXPECT_THROW(fatpoint::divides({1, 0}, {1, 0, 0}), fatpoint::AlphabetMismatch);
  EXPECT_THROW((void)(ExponentVector{1, 0} + ExponentVector{1}), fatpoint::AlphabetMismatch);
}

TEST(ExponentVector, ArithmeticAndText) {
  const ExponentVector a{2, 0, 1}, b{1, 3, 0};
  EXPECT_EQ(a + b, (ExponentVector{3, 3, 1}));
  EXPECT_EQ(fatpoint::lcm(a, b), (ExponentVector{2, 3, 1}));
  EXPECT_EQ((ExponentVector{3, 3, 1}) - b, a);
  EXPECT_THROW((void)(a - b), fatpoint::NotAMember);
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_EQ(a.to_string(), "(2,0,1)");
  EXPECT_EQ(ExponentVector::variable(3, 1, 4), (ExponentVector{0, 4, 0}));
  EXPECT_LT(b, a);
}

TEST(Minimalize, Examples) {
  EXPECT_EQ(ideal(3, {{1, 1, 0}, {2, 1, 0}}), ideal(3, {{1, 1, 0}}));
  EXPECT_EQ(ideal(3, {}).size(), 0u);
  EXPECT_TRUE(ideal(3, {}).is_zero());
  const auto I = ideal(3, {{0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  ASSERT_EQ(I.size(), 2u);
  EXPECT_EQ(I.generators()[0], (ExponentVector{0, 0, 1}));
  EXPECT_EQ(I.generators()[1], (ExponentVector{1, 1, 0}));
}

TEST(Minimalize, DuplicatesAndUnit) {
  EXPECT_EQ(ideal(2, {{1, 2}, {1, 2}, {1, 2}}).size(), 1u);
  const auto u = ideal(2, {{0, 0}, {3, 1}});
  EXPECT_TRUE(u.is_unit());
  EXPECT_EQ(u, MonomialIdeal::unit(2));
  EXPECT_THROW(ideal(2, {{1, 0}, {1, 0, 0}}), fatpoint::AlphabetMismatch);
}

TEST(Minimalize, IdempotentAntichainAndMembershipProperty) {
  auto g = oracle::rng("minimalize");
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 3;
    auto raw = oracle::random_set(g, n, 1 + trial % 7, 4);
    const auto I = fatpoint::minimalize(n, raw);
    expect_antichain(I);
    EXPECT_EQ(fatpoint::minimalize(n, std::vector<ExponentVector>(I.generators().begin(), I.generators().end())), I);
    std::vector<oracle::Mono> raw_m;
    for (const auto& v : raw) raw_m.push_back(oracle::mono(v));
    for (const auto& m : oracle::monomials_upto(n, 8))
      ASSERT_EQ(fatpoint::member(oracle::vec(m), I), oracle::member(m, raw_m))
          << "seed " << oracle::seed() << " trial " << trial;
  }
}

TEST(Member, Examples) {
  const auto I = triangle();
  EXPECT_TRUE(fatpoint::member({1, 1, 1}, I));
  EXPECT_FALSE(fatpoint::member({1, 1, 1}, fatpoint::power(I, 2)));
  EXPECT_TRUE(fatpoint::member({0, 0, 0}, MonomialIdeal::unit(3)));
  EXPECT_TRUE(fatpoint::member({5, 0, 2}, MonomialIdeal::unit(3)));
  EXPECT_FALSE(fatpoint::member({5, 0, 2}, MonomialIdeal::zero(3)));
  EXPECT_THROW(fatpoint::member({1, 1}, I), fatpoint::AlphabetMismatch);
}

TEST(Product, Examples) {
  const auto I = triangle();
  EXPECT_EQ(fatpoint::product(I, MonomialIdeal::unit(3)), I);
  EXPECT_TRUE(fatpoint::product(I, MonomialIdeal::zero(3)).is_zero());
  const auto J = ideal(3, {{1, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(fatpoint::power(J, 2), ideal(3, {{2, 2, 0}, {1, 1, 1}, {0, 0, 2}}));
  EXPECT_THROW(fatpoint::product(I, MonomialIdeal::unit(2)), fatpoint::AlphabetMismatch);
  const MonomialIdeal factors[] = {J, J, I};
  EXPECT_EQ(fatpoint::product(factors, 3), fatpoint::product(fatpoint::power(J, 2), I));
}

TEST(Power, Examples) {
  const auto I = triangle();
  EXPECT_EQ(fatpoint::power(I, 1), I);
  EXPECT_EQ(fatpoint::power(I, 0), MonomialIdeal::unit(3));
  const auto I2 = fatpoint::power(I, 2);
  EXPECT_EQ(I2.size(), 6u);
  for (const auto& g : I2.generators()) EXPECT_EQ(g.degree(), 4u);
  const auto ps = fatpoint::powers_upto(I, 4);
  ASSERT_EQ(ps.size(), 5u);
  for (unsigned r = 0; r <= 4; ++r) EXPECT_EQ(ps[r], fatpoint::power(I, r));
}

TEST(Intersect, Examples) {
  const auto I = triangle();
  EXPECT_EQ(fatpoint::intersect(I, MonomialIdeal::unit(3)), I);
  EXPECT_EQ(fatpoint::intersect(I, I), I);
  const auto a = ideal(3, {{0, 1, 0}, {0, 0, 1}}), b = ideal(3, {{1, 0, 0}, {0, 0, 1}});
  EXPECT_EQ(fatpoint::intersect(a, b), ideal(3, {{0, 0, 1}, {1, 1, 0}}));
  EXPECT_TRUE(fatpoint::intersect(I, MonomialIdeal::zero(3)).is_zero());
}

TEST(Contains, Examples) {
  const auto I = triangle();
  EXPECT_TRUE(fatpoint::contains(I, fatpoint::power(I, 2)));
  EXPECT_TRUE(fatpoint::contains(I, MonomialIdeal::zero(3)));
  EXPECT_FALSE(fatpoint::contains(MonomialIdeal::zero(3), I));
  // (x0x1x2) together with the squares of the triangle generators.
  const auto sym2 = ideal(3, {{1, 1, 1}, {2, 2, 0}, {2, 0, 2}, {0, 2, 2}});
  EXPECT_FALSE(fatpoint::contains(fatpoint::power(I, 2), sym2));
  const auto w = fatpoint::first_nonmember(fatpoint::power(I, 2), sym2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (ExponentVector{1, 1, 1}));
  EXPECT_FALSE(fatpoint::first_nonmember(I, sym2).has_value());
}

TEST(Alpha, Examples) {
  EXPECT_EQ(fatpoint::alpha(MonomialIdeal::unit(3)), 0u);
  EXPECT_EQ(fatpoint::alpha(triangle()), 2u);
  EXPECT_FALSE(fatpoint::alpha(MonomialIdeal::zero(3)).has_value());
  EXPECT_EQ(fatpoint::alpha(ideal(3, {{0, 0, 5}, {1, 1, 0}})), 2u);
}

TEST(IdealArithmetic, AgreesWithBruteForceOracle) {
  auto g = oracle::rng("arithmetic");
  const unsigned D = 10;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto I = fatpoint::minimalize(n, oracle::random_set(g, n, 1 + trial % 4, 3));
    const auto J = fatpoint::minimalize(n, oracle::random_set(g, n, 1 + trial % 3, 3));
    const auto gi = oracle::gens(I), gj = oracle::gens(J);
    const auto P = fatpoint::product(I, J), X = fatpoint::intersect(I, J);
    const unsigned r = 2 + trial % 2;
    const auto R = fatpoint::power(I, r);
    for (const auto& G : {P, X, R}) expect_antichain(G);
    for (const auto& m : oracle::monomials_upto(n, D)) {
      const auto v = oracle::vec(m);
      ASSERT_EQ(fatpoint::member(v, P), oracle::product_member(m, gi, gj)) << "seed " << oracle::seed();
      ASSERT_EQ(fatpoint::member(v, X), oracle::member(m, gi) && oracle::member(m, gj)) << "seed " << oracle::seed();
      ASSERT_EQ(fatpoint::member(v, R), oracle::power_member(m, gi, r)) << "seed " << oracle::seed();
    }
  }
}

TEST(IdealArithmetic, AlphaIsAdditiveOnProducts) {
  auto g = oracle::rng("alpha");
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto I = fatpoint::minimalize(n, oracle::random_set(g, n, 1 + trial % 5, 5));
    const auto J = fatpoint::minimalize(n, oracle::random_set(g, n, 1 + trial % 4, 5));
    EXPECT_EQ(*fatpoint::alpha(fatpoint::product(I, J)), *fatpoint::alpha(I) + *fatpoint::alpha(J));
  }
}

TEST(IdealArithmetic, MutualContainmentIffEqualGenerators) {
  auto g = oracle::rng("mutual");
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto I = fatpoint::minimalize(n, oracle::random_set(g, n, 1 + trial % 3, 2));
    const auto J = trial % 4 == 0 ? I : fatpoint::minimalize(n, oracle::random_set(g, n, 1 + trial % 3, 2));
    const bool mutual = fatpoint::contains(I, J) && fatpoint::contains(J, I);
    EXPECT_EQ(mutual, I == J);
    const auto gi = oracle::gens(I), gj = oracle::gens(J);
    bool same_members = true;
    for (const auto& m : oracle::monomials_upto(n, 6)) same_members = same_members && oracle::member(m, gi) == oracle::member(m, gj);
    EXPECT_EQ(mutual, same_members);
  }
}

TEST(IdealArithmetic, JsonRoundTrip) {
  const auto I = triangle();
  const auto j = fatpoint::to_json(I);
  EXPECT_EQ(j.dump(), "[[0,1,1],[1,0,1],[1,1,0]]");
  EXPECT_EQ(fatpoint::ideal_from_json(j, 3), I);
  EXPECT_EQ(fatpoint::ideal_from_json(fatpoint::to_json(MonomialIdeal::zero(4)), 4), MonomialIdeal::zero(4));
}

}  // namespace
