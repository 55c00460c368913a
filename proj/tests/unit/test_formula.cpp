#include <gtest/gtest.h>

#include "tdqe/error.hpp"
#include "tdqe/formula.hpp"

using namespace tdqe;

namespace {

const Var X1{0}, X2{1}, X3{2};

LinearAtom atom(std::vector<LinearAtom::Term> t, long rhs, Relation rel) {
  return LinearAtom(std::move(t), Rat(rhs), rel);
}

const LinearAtom& as_atom(const NormalizedAtom& n) { return std::get<LinearAtom>(n); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rat("-7/2"), Rat(-7, 2));
  EXPECT_EQ(parse_rat("6/4"), Rat(3, 2));
  EXPECT_EQ(to_string(Rat(-3, 4)), "-3/4");
  EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rat("abc"), std::invalid_argument);
  EXPECT_TRUE(is_integer(parse_rat("4/2")));
  EXPECT_FALSE(is_integer(parse_rat("3/2")));
}

TEST(VarTable, InternIsStable) {
  VarTable t;
  Var a = t.intern("a");
  Var b = t.intern("b");
  EXPECT_EQ(t.intern("a"), a);
  EXPECT_LT(a, b);
  EXPECT_EQ(t.name(b), "b");
  EXPECT_FALSE(t.find("c"));
  EXPECT_THROW(VarTable({"x", "x"}), std::invalid_argument);
  EXPECT_EQ(VarTable::numbered(3).names(), (std::vector<std::string>{"x1", "x2", "x3"}));
}

TEST(LinearAtom, ConstructorMergesAndDropsZeros) {
  LinearAtom a({{X2, Rat(1)}, {X1, Rat(2)}, {X2, Rat(-1)}}, Rat(0), Relation::LE);
  ASSERT_EQ(a.num_vars(), 1u);
  EXPECT_EQ(a.coeff(X1), 2);
  EXPECT_EQ(a.coeff(X2), 0);
  EXPECT_FALSE(a.mentions(X2));
}

TEST(NormalizeAtom, BothWrittenFormsOfOneConstraintAgree) {
  auto a = normalize_atom(atom({{X1, Rat(-1)}, {X2, Rat(1)}, {X3, Rat(-2)}}, 5, Relation::LE));
  auto b = normalize_atom(atom({{X1, Rat(1)}, {X2, Rat(-1)}, {X3, Rat(2)}}, -5, Relation::GE));
  EXPECT_EQ(as_atom(a), as_atom(b));
  EXPECT_EQ(as_atom(a).rel(), Relation::LE);
}

TEST(NormalizeAtom, ConstantsResolve) {
  // 0 >= 1 is false, 0 >= -1 is true.
  EXPECT_EQ(std::get<ConstVerdict>(normalize_atom(atom({}, 1, Relation::GE))), ConstVerdict::TriviallyFalse);
  EXPECT_EQ(std::get<ConstVerdict>(normalize_atom(atom({}, -1, Relation::GE))), ConstVerdict::TriviallyTrue);
  EXPECT_EQ(std::get<ConstVerdict>(normalize_atom(atom({}, 0, Relation::LT))), ConstVerdict::TriviallyFalse);
  EXPECT_EQ(std::get<ConstVerdict>(normalize_atom(atom({}, 0, Relation::EQ))), ConstVerdict::TriviallyTrue);
}

TEST(NormalizeAtom, ClearsDenominatorsAndGcd) {
  auto n = as_atom(normalize_atom(LinearAtom({{X1, Rat(2, 3)}, {X2, Rat(-4, 3)}}, Rat(0), Relation::LE)));
  EXPECT_EQ(n, atom({{X1, Rat(1)}, {X2, Rat(-2)}}, 0, Relation::LE));
}

TEST(NormalizeAtom, ScalingNeverFlipsInequalities) {
  auto n = as_atom(normalize_atom(atom({{X1, Rat(-4)}, {X2, Rat(6)}}, 8, Relation::LT)));
  EXPECT_EQ(n, atom({{X1, Rat(-2)}, {X2, Rat(3)}}, 4, Relation::LT));
}

TEST(NormalizeAtom, EqualitiesGetPositiveLeadingCoefficient) {
  auto a = as_atom(normalize_atom(atom({{X1, Rat(-2)}, {X2, Rat(4)}}, 6, Relation::EQ)));
  EXPECT_EQ(a, atom({{X1, Rat(1)}, {X2, Rat(-2)}}, -3, Relation::EQ));
}

TEST(NormalizeAtom, IsIdempotent) {
  auto a = atom({{X1, Rat(3)}, {X3, Rat(-9)}}, 12, Relation::GT);
  auto once = as_atom(normalize_atom(a));
  EXPECT_EQ(as_atom(normalize_atom(once)), once);
}

TEST(EvalAtom, Examples) {
  auto a = atom({{X1, Rat(1)}, {X2, Rat(-4)}}, 0, Relation::LE);
  EXPECT_TRUE(eval_atom(a, {{X1, Rat(1)}, {X2, Rat(1)}}));
  auto b = atom({{X3, Rat(1)}}, -1, Relation::LE);
  EXPECT_TRUE(eval_atom(b, {{X3, Rat(-1)}}));
  EXPECT_FALSE(eval_atom(b, {{X3, Rat(0)}}));
  auto eq = atom({{X1, Rat(2)}, {X2, Rat(3)}}, 7, Relation::EQ);
  EXPECT_TRUE(eval_atom(eq, {{X1, Rat(1, 2)}, {X2, Rat(2)}}));
  EXPECT_THROW(eval_atom(a, {{X1, Rat(1)}}), MissingAssignment);
}

TEST(EvalAtom, NormalizationPreservesTruth) {
  auto a = atom({{X1, Rat(-3)}, {X2, Rat(6)}}, 9, Relation::GT);
  auto n = as_atom(normalize_atom(a));
  for (long x = -4; x <= 4; ++x)
    for (long y = -4; y <= 4; ++y) {
      Assignment p{{X1, Rat(x)}, {X2, Rat(y)}};
      EXPECT_EQ(eval_atom(a, p), eval_atom(n, p));
    }
}

TEST(AtomVars, Examples) {
  EXPECT_EQ(atom_vars(atom({{X1, Rat(1)}, {X2, Rat(2)}, {X3, Rat(3)}}, 20, Relation::LE)),
            (std::vector<Var>{X1, X2, X3}));
  EXPECT_TRUE(atom_vars(atom({}, 1, Relation::LE)).empty());
  Poly p = Rat(8) * Poly::variable(X1) * Poly::variable(X2) + Rat(6) * Poly::variable(X1) +
           Rat(5) * Poly::variable(X3) + Poly(5);
  EXPECT_EQ(atom_vars(PolyAtom{p, Relation::GE}), (std::vector<Var>{X1, X2, X3}));
}

TEST(Combine, AddsScaledAtom) {
  auto a = atom({{X1, Rat(1)}, {X2, Rat(2)}}, 3, Relation::LE);
  auto b = atom({{X1, Rat(-1)}, {X3, Rat(1)}}, 1, Relation::LE);
  auto c = combine(a, Rat(1), b, Relation::LE);
  EXPECT_EQ(c, atom({{X2, Rat(2)}, {X3, Rat(1)}}, 4, Relation::LE));
}

TEST(PolyAtoms, NormalizeAndConvert) {
  Poly p = Rat(-2) * Poly::variable(X1) + Poly(4);
  auto n = std::get<PolyAtom>(normalize_atom(PolyAtom{p, Relation::GE}));
  EXPECT_EQ(n.rel, Relation::LE);
  EXPECT_EQ(n.poly, Poly::variable(X1) - Poly(2));
  auto lin = to_linear(n);
  EXPECT_EQ(lin, atom({{X1, Rat(1)}}, 2, Relation::LE));
  EXPECT_EQ(to_poly(lin), n);
  EXPECT_THROW(to_linear(PolyAtom{Poly::variable(X1) * Poly::variable(X2), Relation::LE}), MixedModeError);
}

TEST(QuantFormula, FreeVariablesAndInvariants) {
  VarTable t = VarTable::numbered(3);
  QuantFormula f(t, {X1}, {atom({{X1, Rat(1)}, {X3, Rat(1)}}, 0, Relation::LE)});
  EXPECT_EQ(f.free(), (std::vector<Var>{X3}));
  EXPECT_TRUE(f.is_quantified(X1));
  EXPECT_EQ(f.mode(), FormulaMode::Linear);
  EXPECT_THROW(QuantFormula(t, {X1, X1}, std::vector<LinearAtom>{}), ValidationError);
  EXPECT_THROW(QuantFormula(t, {Var{7}}, std::vector<LinearAtom>{}), ValidationError);
  EXPECT_THROW(QuantFormula(t, {X1}, {atom({{Var{9}, Rat(1)}}, 0, Relation::LE)}), ValidationError);
}

TEST(QuantFormula, PolynomialModeViews) {
  VarTable t = VarTable::numbered(2);
  QuantFormula f(t, {X1, X2}, {PolyAtom{Poly::variable(X1) + Poly::variable(X2), Relation::LE}});
  EXPECT_EQ(f.mode(), FormulaMode::Polynomial);
  EXPECT_EQ(f.linear_atoms().size(), 1u);
  QuantFormula g(t, {X1}, {PolyAtom{pow(Poly::variable(X1), 2), Relation::LE}});
  EXPECT_THROW(g.linear_atoms(), MixedModeError);
  EXPECT_EQ(g.poly_atoms().size(), 1u);
}
