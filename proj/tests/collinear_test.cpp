#include "fatpoint/binary_forms.hpp"
#include "fatpoint/collinear.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

namespace {

using fatpoint::GeneralizedMonomial;
using fatpoint::LinePoint;
using fatpoint::LineScheme;
using fatpoint::Rational;

GeneralizedMonomial gm(std::vector<unsigned> forms, std::vector<unsigned> xs) { return {forms, xs}; }

std::set<std::string> names(const std::vector<GeneralizedMonomial>& gs) {
  std::set<std::string> out;
  for (const auto& g : gs) out.insert(g.to_string());
  return out;
}

TEST(LineScheme, ValidationAndOrdering) {
  EXPECT_THROW(LineScheme(1, {{1, 0}}, {1}), fatpoint::PreconditionViolation);
  EXPECT_THROW(LineScheme(2, {{0, 0}}, {1}), fatpoint::PreconditionViolation);
  EXPECT_THROW(LineScheme(2, {{1, 2}, {2, 4}}, {1, 1}), fatpoint::PreconditionViolation);
  EXPECT_THROW(LineScheme(2, {{1, 2}}, {1, 1}), fatpoint::PreconditionViolation);
  const LineScheme z(3, {{1, 0}, {0, 1}, {1, 1}}, {3, 1, 2});
  EXPECT_EQ(z.num_points(), 3u);
  EXPECT_EQ(z.alphabet_size(), 5u);
  EXPECT_EQ(z.multiplicity(0), 0u);
  EXPECT_EQ(z.multiplicity(1), 1u);
  EXPECT_EQ(z.multiplicity(3), 3u);
  EXPECT_EQ(z.point(1).d, Rational(1));
  EXPECT_EQ(z.point(3).d, Rational(0));
  EXPECT_EQ(z.max_multiplicity(), 3u);
}

TEST(GeneralizedMonomial, Accessors) {
  const auto g = gm({1, 0, 2}, {3, 1});
  EXPECT_EQ(g.n_forms(), 3u);
  EXPECT_EQ(g.n_x(), 2u);
  EXPECT_EQ(g.form_exponent(3), 2u);
  EXPECT_EQ(g.x_exponent(2), 3u);
  EXPECT_EQ(g.x_exponent(3), 1u);
  EXPECT_EQ(g.x_degree(), 4u);
  EXPECT_EQ(g.degree(), 7u);
  EXPECT_EQ(g.to_string(), "G1*G3^2*x2^3*x3");
  EXPECT_EQ(gm({0, 0}, {0}).to_string(), "1");
  EXPECT_EQ(fatpoint::to_json(g).dump(), R"({"G":[1,0,2],"x":[3,1]})");
}

TEST(CanonicalGenerators, Examples) {
  EXPECT_EQ(names(fatpoint::canonical_generators(LineScheme::standard(2, {1, 1}), 1)),
            (std::set<std::string>{"G1*G2", "x2"}));
  EXPECT_EQ(names(fatpoint::canonical_generators(LineScheme::standard(2, {1, 2}), 1)),
            (std::set<std::string>{"G1*G2^2", "G2*x2", "x2^2"}));
  for (unsigned n = 2; n <= 4; ++n) {
    const auto gens = fatpoint::canonical_generators(LineScheme::standard(n, {3}), 1);
    // Degree-3 monomials in G1, x2..xN.
    std::size_t expected = 1;
    for (unsigned i = 1; i <= 3; ++i) expected = expected * (n + i - 1) / i;
    EXPECT_EQ(gens.size(), expected);
    for (const auto& g : gens) EXPECT_EQ(g.degree(), 3u);
  }
  EXPECT_THROW(fatpoint::canonical_generators(LineScheme::standard(2, {1}), 0), fatpoint::PreconditionViolation);
}

TEST(CanonicalGenerators, AntichainProperty) {
  for (unsigned n = 2; n <= 4; ++n)
    for (const auto& mults : std::vector<std::vector<unsigned>>{{1, 2, 3}, {0, 2, 2}, {3, 3}, {1, 1, 1, 1}})
      for (unsigned m = 1; m <= 3; ++m) {
        const auto gens = fatpoint::canonical_generators(LineScheme::standard(n, mults), m);
        for (std::size_t i = 0; i < gens.size(); ++i) {
          if (i) { EXPECT_LT(gens[i - 1], gens[i]); }
          for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j) { EXPECT_FALSE(fatpoint::divides(gens[i].exps(), gens[j].exps())); }
        }
      }
}

TEST(GmMember, Examples) {
  const auto z = LineScheme::standard(2, {1, 1});
  EXPECT_TRUE(fatpoint::gm_member(gm({1, 1}, {0}), z, 1));
  EXPECT_TRUE(fatpoint::gm_member(gm({0, 0}, {1}), z, 1));
  EXPECT_FALSE(fatpoint::gm_member(gm({1, 0}, {0}), z, 1));
  EXPECT_THROW(fatpoint::gm_member(gm({1}, {0}), z, 1), fatpoint::AlphabetMismatch);
  EXPECT_THROW(fatpoint::gm_member(gm({1, 1}, {0, 0}), z, 1), fatpoint::AlphabetMismatch);
}

TEST(GmMember, MatchesGeneratorDivisibility) {
  for (unsigned n = 2; n <= 3; ++n)
    for (const auto& mults : std::vector<std::vector<unsigned>>{{1, 2}, {0, 1, 3}, {2, 2, 2}})
      for (unsigned m = 1; m <= 2; ++m) {
        const auto z = LineScheme::standard(n, mults);
        const auto gens = fatpoint::canonical_generators(z, m);
        std::vector<oracle::Mono> raw;
        for (const auto& g : gens) raw.push_back(oracle::mono(g.exps()));
        for (const auto& e : oracle::monomials_upto(z.alphabet_size(), 8)) {
          const GeneralizedMonomial g(z.num_points(), oracle::vec(e));
          EXPECT_EQ(fatpoint::gm_member(g, z, m), oracle::member(e, raw)) << g.to_string();
        }
      }
}

TEST(SplitFactorize, Examples) {
  const auto z = LineScheme::standard(2, {1, 2});
  const auto a = fatpoint::split_factorize(gm({1, 2}, {0}), z, 1);
  ASSERT_EQ(a.factors.size(), 2u);
  EXPECT_EQ(a.factors[0], gm({1, 1}, {0}));
  EXPECT_EQ(a.factors[1], gm({0, 1}, {0}));
  EXPECT_EQ(a.residual, gm({0, 0}, {0}));
  EXPECT_TRUE(fatpoint::certificate_valid(a, z));

  const auto b = fatpoint::split_factorize(gm({0, 0}, {2}), z, 1);
  EXPECT_EQ(b.factors[0], gm({0, 0}, {1}));
  EXPECT_EQ(b.factors[1], gm({0, 0}, {1}));

  const auto single = LineScheme::standard(3, {2});
  const auto g = gm({1}, {0, 3});
  const auto c = fatpoint::split_factorize(g, single, 1);
  ASSERT_EQ(c.factors.size(), 1u);
  GeneralizedMonomial whole(1, c.factors[0].exps() + c.residual.exps());
  EXPECT_EQ(whole, g);

  EXPECT_THROW(fatpoint::split_factorize(gm({1, 0}, {0}), z, 1), fatpoint::NotAMember);
  const auto j = fatpoint::to_json(a);
  EXPECT_EQ(j["factor_scheme_refs"][1]["first_point"], 2);
  EXPECT_EQ(j["factor_scheme_refs"][1]["multiplicity"], 1);
}

TEST(SplitFactorize, TamperedCertificateIsRejected) {
  const auto z = LineScheme::standard(2, {1, 2});
  auto cert = fatpoint::split_factorize(gm({1, 2}, {1}), z, 1);
  ASSERT_TRUE(fatpoint::certificate_valid(cert, z));
  auto bad = cert;
  bad.factors[0] = gm({0, 1}, {0});
  bad.residual = GeneralizedMonomial(2, cert.residual.exps() + fatpoint::ExponentVector{1, 0, 0});
  EXPECT_FALSE(fatpoint::certificate_valid(bad, z));
  bad = cert;
  bad.residual = gm({0, 0}, {5});
  EXPECT_FALSE(fatpoint::certificate_valid(bad, z));
}

TEST(LineSplitting, Examples) {
  EXPECT_TRUE(fatpoint::verify_line_splitting(LineScheme::standard(2, {1, 2}), 1));
  EXPECT_TRUE(fatpoint::verify_line_splitting(LineScheme::standard(2, {1, 1, 1}), 2));
  for (unsigned m = 1; m <= 3; ++m) EXPECT_TRUE(fatpoint::verify_line_splitting(LineScheme::standard(3, {2}), m));
}

TEST(CollinearPower, Examples) {
  EXPECT_TRUE(fatpoint::verify_theorem_collinear(LineScheme::standard(2, {1, 1}), 3));
  EXPECT_TRUE(fatpoint::verify_theorem_collinear(LineScheme::standard(2, {1, 2, 2}), 3));
  EXPECT_TRUE(fatpoint::verify_theorem_collinear(LineScheme::standard(4, {3}), 3));
  EXPECT_THROW(fatpoint::verify_theorem_collinear(LineScheme::standard(2, {1}), 0), fatpoint::PreconditionViolation);
}

TEST(CollinearPower, CertificateRouteAgreesWithGeneratorEquality) {
  for (unsigned n = 2; n <= 3; ++n)
    for (const auto& mults : std::vector<std::vector<unsigned>>{{1, 1}, {1, 2, 3}, {2, 3}})
      for (unsigned m = 1; m <= 3; ++m) {
        const auto z = LineScheme::standard(n, mults);
        const auto check = fatpoint::check_collinear_power(z, m);
        EXPECT_TRUE(check.verified);
        EXPECT_TRUE(fatpoint::certify_collinear_power(z, m));
      }
}

TEST(CrossModule, ExpandedGeneratorsAreMembers) {
  auto g = oracle::rng("collinear-cross");
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 2 + trial % 2;
    std::vector<LinePoint> pts;
    while (pts.size() < 3) {
      LinePoint p{Rational(num(g), den(g)), Rational(num(g), den(g))};
      bool ok = !(p.c == 0 && p.d == 0);
      for (const auto& q : pts) ok = ok && p.c * q.d != q.c * p.d;
      if (ok) pts.push_back(p);
    }
    const LineScheme z(n, pts, {1, 1, 2});
    for (const auto& gen : fatpoint::canonical_generators(z, 1)) {
      const auto f = fatpoint::expand(gen, z);
      EXPECT_TRUE(fatpoint::multi_point_membership(f, z, 1).member) << gen.to_string();
      for (std::size_t i = 0; i < gen.exps().size(); ++i) {
        if (gen.exps()[i] == 0) continue;
        auto e = gen.exps();
        e[i] -= 1;
        const GeneralizedMonomial smaller(z.num_points(), e);
        EXPECT_EQ(fatpoint::multi_point_membership(fatpoint::expand(smaller, z), z, 1).member,
                  fatpoint::gm_member(smaller, z, 1))
            << smaller.to_string() << " seed " << oracle::seed();
      }
    }
  }
}

}  // namespace
