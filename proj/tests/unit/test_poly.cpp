#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tdqe/error.hpp"
#include "tdqe/poly.hpp"

using namespace tdqe;

namespace {

const Var X{0}, Y{1}, Z{2};
Poly x() { return Poly::variable(X); }
Poly y() { return Poly::variable(Y); }
Poly z() { return Poly::variable(Z); }

}  // namespace

TEST(Monomial, DegreesAndDivision) {
  Monomial m({{Y, 2}, {X, 1}, {Y, 1}});
  EXPECT_EQ(m.degree(Y), 3u);
  EXPECT_EQ(m.total_degree(), 4u);
  EXPECT_TRUE(Monomial::of(Y, 2).divides(m));
  EXPECT_FALSE(Monomial::of(Z).divides(m));
  EXPECT_EQ(m / Monomial::of(Y, 3), Monomial::of(X));
  EXPECT_EQ(m.without(Y), Monomial::of(X));
  EXPECT_TRUE(Monomial().is_one());
}

TEST(Monomial, GrlexOrder) {
  EXPECT_GT(grlex_compare(Monomial::of(X, 2), Monomial::of(X) * Monomial::of(Y)), 0);
  EXPECT_GT(grlex_compare(Monomial::of(X) * Monomial::of(Y), Monomial::of(Y, 2)), 0);
  EXPECT_GT(grlex_compare(Monomial::of(Z, 3), Monomial::of(X, 2)), 0);
  EXPECT_EQ(grlex_compare(Monomial::of(X), Monomial::of(X)), 0);
}

TEST(Poly, CanonicalTermOrder) {
  Poly p = Poly(1) + y() + x() * x();
  ASSERT_EQ(p.num_terms(), 3u);
  EXPECT_EQ(p.leading().first, Monomial::of(X, 2));
  EXPECT_EQ(p.terms().back().first, Monomial());
  EXPECT_EQ(x() - x(), Poly());
  EXPECT_TRUE((x() - x()).is_zero());
}

TEST(Poly, ArithmeticIdentities) {
  Poly a = x() + y();
  Poly b = x() - y();
  EXPECT_EQ(a * b, x() * x() - y() * y());
  EXPECT_EQ(pow(a, 2), x() * x() + Rat(2) * x() * y() + y() * y());
  EXPECT_EQ(pow(a, 0), Poly(1));
  EXPECT_EQ(-a + a, Poly());
}

TEST(Poly, DegreesAndVars) {
  Poly p = Rat(5) * z() * pow(y(), 3) + Rat(10) * pow(y(), 4);
  EXPECT_EQ(p.degree(Y), 4u);
  EXPECT_EQ(p.degree(X), 0u);
  EXPECT_EQ(p.total_degree(), 4u);
  EXPECT_EQ(p.vars(), (std::vector<Var>{Y, Z}));
  EXPECT_FALSE(p.mentions(X));
  EXPECT_TRUE(Poly(7).is_constant());
  EXPECT_EQ(Poly(7).constant_value(), 7);
}

TEST(Poly, DerivativeAndSubstitute) {
  Poly p = pow(x(), 3) * y() + Rat(2) * x();
  EXPECT_EQ(p.derivative(X), Rat(3) * x() * x() * y() + Poly(2));
  EXPECT_EQ(p.derivative(Z), Poly());
  EXPECT_EQ(p.substitute(X, Rat(2)), Rat(8) * y() + Poly(4));
}

TEST(Poly, EvaluateMatchesTermwiseOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Poly p = gen::poly(rng, {X, Y, Z}, 3, 5);
    auto pt = gen::random_point(rng, {X, Y, Z});
    // Specializing every variable but X, then evaluating at X.
    auto c = oracle::specialize(p, X, pt);
    Rat v = 0, xp = 1;
    for (const auto& ci : c) {
      v += ci * xp;
      xp *= pt[X];
    }
    EXPECT_EQ(p.evaluate(pt), v);
  }
  EXPECT_THROW(x().evaluate({{Y, Rat(1)}}), MissingAssignment);
}

TEST(Poly, RationalContent) {
  Poly p = Rat(2, 3) * x() - Rat(4, 3) * y();
  EXPECT_EQ(rational_content(p), Rat(2, 3));
  EXPECT_EQ(rational_content(Poly()), 1);
  EXPECT_EQ(rational_content(Rat(-6) * x()), 6);
}

TEST(Poly, LinearConversion) {
  LinearAtom a({{X, Rat(1)}, {Y, Rat(2)}}, Rat(3), Relation::LE);
  EXPECT_EQ(Poly::from_linear(a), x() + Rat(2) * y() - Poly(3));
}
