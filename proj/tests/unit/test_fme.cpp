#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tdqe/error.hpp"
#include "tdqe/fme.hpp"
#include "tdqe/parser.hpp"

using namespace tdqe;

namespace {

const Var X1{0}, X2{1}, X3{2};

LinearAtom atom(std::vector<LinearAtom::Term> t, long rhs, Relation rel) {
  return LinearAtom(std::move(t), Rat(rhs), rel);
}

// The three atoms of the running example that mention x1 in the worked
// elimination step.
std::vector<LinearAtom> x1_atoms() {
  return {atom({{X1, Rat(1)}, {X2, Rat(2)}, {X3, Rat(3)}}, 20, Relation::LE),
          atom({{X1, Rat(1)}, {X2, Rat(-1)}, {X3, Rat(2)}}, -5, Relation::GE),
          atom({{X1, Rat(1)}, {X2, Rat(-4)}}, 0, Relation::LE)};
}

QuantFormula running_example() { return parse_formula(slurp(data_path("running_example.qf"))); }

std::vector<Var> vars_of(const QuantFormula& f, std::initializer_list<const char*> names) {
  std::vector<Var> out;
  for (const char* n : names) out.push_back(f.vars().find(n).value());
  return out;
}

bool holds_at(const ConstraintSet& c, const Assignment& p) {
  if (c.is_false()) return false;
  return oracle::satisfies_all(c.atoms(), p);
}

}  // namespace

TEST(ConstraintSet, CanonicalDedupAndVerdicts) {
  ConstraintSet c({atom({{X1, Rat(2)}}, 4, Relation::LE), atom({{X1, Rat(1)}}, 2, Relation::LE),
                   atom({}, -1, Relation::GE)},
                  CountPolicy::Canonical);
  EXPECT_EQ(c.size(), 1u);
  EXPECT_FALSE(c.is_false());
  c.insert({atom({}, -1, Relation::LE)});
  EXPECT_TRUE(c.is_false());
  EXPECT_EQ(c.size(), 0u);
  EXPECT_FALSE(c.empty());
}

TEST(ConstraintSet, RawKeepsEverything) {
  ConstraintSet c({atom({{X1, Rat(2)}}, 4, Relation::LE), atom({{X1, Rat(1)}}, 2, Relation::LE),
                   atom({}, -1, Relation::GE)},
                  CountPolicy::Raw);
  EXPECT_EQ(c.size(), 3u);
  EXPECT_FALSE(c.is_false());
  c.insert({atom({}, -1, Relation::LE)});
  EXPECT_TRUE(c.is_false());
  EXPECT_EQ(c.size(), 4u);
}

TEST(Bounds, WorkedStep) {
  ConstraintSet c(x1_atoms(), CountPolicy::Canonical);
  auto b = bounds(c, X1);
  ASSERT_EQ(b.upper.size(), 2u);
  ASSERT_EQ(b.lower.size(), 1u);
  EXPECT_TRUE(b.eqs.empty());
  EXPECT_TRUE(b.rest.empty());
  // x1 >= -5 + x2 - 2 x3
  EXPECT_EQ(b.lower[0].constant, -5);
  EXPECT_EQ(b.lower[0].coeffs, (std::vector<LinearAtom::Term>{{X2, Rat(1)}, {X3, Rat(-2)}}));
  std::set<std::pair<Rat, std::vector<LinearAtom::Term>>> uppers;
  for (const auto& u : b.upper) {
    EXPECT_FALSE(u.strict);
    uppers.insert({u.constant, u.coeffs});
  }
  EXPECT_TRUE(uppers.count({Rat(20), {{X2, Rat(-2)}, {X3, Rat(-3)}}}));
  EXPECT_TRUE(uppers.count({Rat(0), {{X2, Rat(4)}}}));
}

TEST(Bounds, AbsentVariableAndEqualities) {
  ConstraintSet c({atom({{X2, Rat(1)}}, 1, Relation::LE)}, CountPolicy::Canonical);
  auto b = bounds(c, X1);
  EXPECT_EQ(b.rest.size(), 1u);
  EXPECT_TRUE(b.lower.empty() && b.upper.empty() && b.eqs.empty());

  ConstraintSet d({atom({{X1, Rat(2)}, {X2, Rat(-1)}}, 0, Relation::EQ), atom({{X1, Rat(1)}}, 1, Relation::LT)},
                  CountPolicy::Canonical);
  auto e = bounds(d, X1);
  EXPECT_EQ(e.eqs.size(), 1u);
  ASSERT_EQ(e.upper.size(), 1u);
  EXPECT_TRUE(e.upper[0].strict);
  EXPECT_EQ(e.upper[0].constant, 1);
}

TEST(FmeStep, WorkedStep) {
  ConstraintSet c(x1_atoms(), CountPolicy::Canonical);
  auto out = fme_step(c, X1);
  // -5 + x2 - 2x3 <= 20 - 2x2 - 3x3 and -5 + x2 - 2x3 <= 4x2.
  ConstraintSet expected({atom({{X2, Rat(3)}, {X3, Rat(1)}}, 25, Relation::LE),
                          atom({{X2, Rat(-3)}, {X3, Rat(-2)}}, 5, Relation::LE)},
                         CountPolicy::Canonical);
  EXPECT_EQ(out, expected);
}

TEST(FmeStep, TrivialAndContradictory) {
  ConstraintSet box({atom({{X1, Rat(1)}}, 0, Relation::GE), atom({{X1, Rat(1)}}, 1, Relation::LE)},
                    CountPolicy::Canonical);
  auto out = fme_step(box, X1);
  EXPECT_TRUE(out.empty());
  EXPECT_FALSE(out.is_false());

  ConstraintSet clash({atom({{X1, Rat(1)}, {X2, Rat(-1)}}, 0, Relation::LT),
                       atom({{X1, Rat(1)}, {X2, Rat(-1)}}, 0, Relation::GT)},
                      CountPolicy::Canonical);
  EXPECT_TRUE(fme_step(clash, X1).is_false());
}

TEST(FmeStep, EqualitySubstitution) {
  // x1 = x2 + 1, x1 <= 3, x1 >= x3  ->  x2 <= 2, x2 + 1 >= x3
  ConstraintSet c({atom({{X1, Rat(1)}, {X2, Rat(-1)}}, 1, Relation::EQ), atom({{X1, Rat(1)}}, 3, Relation::LE),
                   atom({{X1, Rat(1)}, {X3, Rat(-1)}}, 0, Relation::GE)},
                  CountPolicy::Canonical);
  auto out = fme_step(c, X1);
  ConstraintSet expected({atom({{X2, Rat(1)}}, 2, Relation::LE), atom({{X2, Rat(-1)}, {X3, Rat(1)}}, 1, Relation::LE)},
                         CountPolicy::Canonical);
  EXPECT_EQ(out, expected);
}

TEST(FmeStep, RawCountMatchesStep) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 50; ++i) {
    auto f = gen::lra_formula(rng, {4, 2, 10, 3, 0.1, 0.2});
    ConstraintSet c(f.linear_atoms(), CountPolicy::Raw);
    Var x = f.quantified()[i % 4];
    EXPECT_EQ(fme_step(c, x).size(), fme_step_raw_count(c, x));
  }
}

TEST(FmeStep, CapIsCheckedBeforeBuilding) {
  ConstraintSet c(x1_atoms(), CountPolicy::Canonical);
  EXPECT_FALSE(fme_step_capped(c, X1, 1).has_value());
  EXPECT_TRUE(fme_step_capped(c, X1, 2).has_value());
}

TEST(FmeStep, AgreesWithIntervalOracle) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 100; ++i) {
    auto f = gen::lra_formula(rng, {1, 3, 6, 4, 0.15, 0.3});
    auto atoms = f.linear_atoms();
    Var x = f.quantified()[0];
    for (auto policy : {CountPolicy::Canonical, CountPolicy::Raw}) {
      auto out = fme_step(ConstraintSet(atoms, policy), x);
      for (int k = 0; k < 10; ++k) {
        auto p = gen::random_point(rng, f.free());
        EXPECT_EQ(holds_at(out, p), oracle::exists_x(atoms, x, p));
      }
    }
  }
}

TEST(FmeOrder, EmptyOrderLeavesSetUnchanged) {
  ConstraintSet c(x1_atoms(), CountPolicy::Canonical);
  auto r = fme_order(c, {});
  EXPECT_EQ(r.set, c);
  EXPECT_TRUE(r.trace.per_step_counts.empty());
  EXPECT_EQ(r.trace.final_count, 3u);
}

TEST(FmeOrder, RunningExampleRawCounts) {
  auto f = running_example();
  ConstraintSet c(f.linear_atoms(), CountPolicy::Raw);
  FmeOptions raw{CountPolicy::Raw, std::nullopt};
  EXPECT_EQ(fme_order(c, vars_of(f, {"x1", "x4", "x3", "x2", "x5"}), raw).trace.final_count, 3684u);
  EXPECT_EQ(fme_order(c, vars_of(f, {"x1", "x3", "x4", "x5", "x2"}), raw).trace.final_count, 1680u);
}

TEST(FmeOrder, RunningExampleIsInfeasibleUnderCanonicalCounting) {
  // -5 x3 <= -2 and x3 <= -1 contradict each other.
  auto f = running_example();
  auto r = fme_order(ConstraintSet(f.linear_atoms(), CountPolicy::Canonical), vars_of(f, {"x3"}));
  EXPECT_EQ(r.trace.verdict, Verdict::False);
  EXPECT_EQ(r.trace.false_step, 1u);
  EXPECT_EQ(r.trace.final_count, 0u);
}

TEST(FmeOrder, CapStopsTheRun) {
  auto f = running_example();
  FmeOptions opts{CountPolicy::Raw, 100};
  auto r = fme_order(ConstraintSet(f.linear_atoms(), CountPolicy::Raw), vars_of(f, {"x1", "x4", "x3", "x2", "x5"}),
                     opts);
  EXPECT_EQ(r.trace.verdict, Verdict::CapExceeded);
  EXPECT_LT(r.trace.order.size(), 5u);
}

TEST(FmeOrder, TraceFields) {
  auto f = parse_formula("exists x y; free z; x + y <= z; x >= 0; y >= 0; y <= 5");
  auto r = fme_order(ConstraintSet(f.linear_atoms(), CountPolicy::Canonical), f.quantified());
  EXPECT_EQ(r.trace.per_step_counts.size(), 2u);
  EXPECT_EQ(r.trace.initial, 4u);
  EXPECT_GE(r.trace.peak, r.trace.final_count);
  EXPECT_EQ(r.trace.verdict, Verdict::Open);
  EXPECT_EQ(r.trace.per_step_counts.back(), r.trace.final_count);
}

TEST(FmeDp, SingleVertexMatchesOneStep) {
  auto f = parse_formula("exists x; free a b; x <= a; x >= b; x <= 2*a + b");
  Graph g = build_primal(f);
  auto nice = nicify(TreeDecomp{{g.vertices()}, {}, 0});
  auto dp = fme_dp(f, nice);
  EXPECT_EQ(dp.set, fme_step(ConstraintSet(f.linear_atoms(), CountPolicy::Canonical), f.quantified()[0]));
}

TEST(FmeDp, RejectsForeignDecomposition) {
  auto f = parse_formula("exists x y; x + y <= 1");
  TreeDecomp t{{{f.quantified()[0]}, {f.quantified()[1]}}, {{0, 1}}, 0};
  EXPECT_THROW(fme_dp(f, nicify(t)), InvalidDecomposition);
}

TEST(FmeDp, PreservesTruthOnRandomInstances) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 20; ++i) {
    auto f = gen::lra_formula(rng, {5, 2, 10, 3, 0.1, 0.2});
    Graph g = build_primal(f);
    if (!is_connected(g)) continue;
    auto nice = nicify(heuristic_td(g, TdStrategy::MinFill));
    auto dp = fme_dp(f, nice);
    auto direct = fme_order(ConstraintSet(f.linear_atoms(), CountPolicy::Canonical), f.quantified());
    for (int k = 0; k < 20; ++k) {
      auto p = gen::random_point(rng, f.free());
      EXPECT_EQ(holds_at(dp.set, p), holds_at(direct.set, p));
    }
  }
}
