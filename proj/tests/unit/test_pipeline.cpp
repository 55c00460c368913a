#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tdqe/benchgen.hpp"
#include "tdqe/error.hpp"
#include "tdqe/pace_io.hpp"
#include "tdqe/parser.hpp"
#include "tdqe/pipeline.hpp"
#include "tdqe/stats.hpp"

using namespace tdqe;

namespace {

QuantFormula running_example() { return parse_formula(slurp(data_path("running_example.qf"))); }

PipelineOptions with(const std::string& strategy, CountPolicy policy = CountPolicy::Canonical) {
  PipelineOptions o;
  parse_strategy(strategy, o);
  o.policy = policy;
  return o;
}

}  // namespace

TEST(Strategy, Parsing) {
  PipelineOptions o;
  parse_strategy("random:7", o);
  EXPECT_EQ(o.strategy, Strategy::Random);
  EXPECT_EQ(o.random_trials, 7u);
  EXPECT_EQ(strategy_name(o), "random:7");
  parse_strategy("td-dp", o);
  EXPECT_EQ(o.strategy, Strategy::TDDynamic);
  EXPECT_THROW(parse_strategy("chaos", o), ConfigError);
  EXPECT_THROW(parse_strategy("random:0", o), ConfigError);
  EXPECT_THROW(parse_strategy("random:x", o), ConfigError);
}

TEST(Decompose, HandlesDisconnectedGraphs) {
  Graph g;
  g.add_edge(Var{0}, Var{1});
  g.add_edge(Var{2}, Var{3});
  g.add_vertex(Var{4});
  auto t = decompose(g, TdStrategy::MinFill);
  EXPECT_FALSE(validate_td(g, t));
  EXPECT_EQ(width(t), 1u);
}

TEST(RunFme, StrategiesAgreeOnTruth) {
  std::mt19937_64 rng(91);
  for (int i = 0; i < 15; ++i) {
    auto f = gen::lra_formula(rng, {5, 2, 10, 3, 0.1, 0.2});
    std::vector<FmeOutcome> outs;
    for (const char* s : {"td", "td-dp", "greedy", "natural", "random:3"}) outs.push_back(run_fme(f, with(s)));
    for (int k = 0; k < 20; ++k) {
      auto p = gen::random_point(rng, f.free());
      bool ref = !outs[0].set.is_false() && oracle::satisfies_all(outs[0].set.atoms(), p);
      for (const auto& o : outs) EXPECT_EQ(!o.set.is_false() && oracle::satisfies_all(o.set.atoms(), p), ref);
    }
  }
}

TEST(RunFme, RunningExampleStats) {
  auto f = running_example();
  auto out = run_fme(f, with("td", CountPolicy::Raw));
  const auto& s = out.stats;
  EXPECT_EQ(s.mode, "fme");
  EXPECT_EQ(s.strategy, "td");
  EXPECT_EQ(s.policy, "raw");
  EXPECT_EQ(s.order.size(), 8u);
  EXPECT_EQ(s.per_step_counts.size(), s.order.size());
  EXPECT_GE(s.peak, s.final_count);
  EXPECT_EQ(s.initial, 20u);
  EXPECT_EQ(s.td_width, 2u);
  EXPECT_TRUE(s.td_height.has_value());
}

TEST(RunFme, ImportedDecompositionAndGivenOrder) {
  auto f = running_example();
  PipelineOptions o = with("td");
  o.td = read_td(slurp(data_path("running_example.td")));
  auto out = run_fme(f, o);
  EXPECT_EQ(out.stats.td_width, 2u);
  PipelineOptions bad = o;
  bad.td->bags.pop_back();
  bad.td->edges.pop_back();
  EXPECT_THROW(run_fme(f, bad), ValidationError);
  PipelineOptions given;
  given.strategy = Strategy::Given;
  given.order = f.quantified();
  EXPECT_EQ(run_fme(f, given).stats.order.size(), 8u);
}

TEST(RunFme, RejectsNonlinear) {
  auto f = parse_formula(slurp(data_path("nra7.qf")));
  EXPECT_THROW(run_fme(f, with("td")), MixedModeError);
}

TEST(RunFme, RandomTrialsHitTheCap) {
  auto f = running_example();
  PipelineOptions o = with("random:5", CountPolicy::Raw);
  o.atom_cap = 50;
  o.seed = 3;
  auto out = run_fme(f, o);
  EXPECT_EQ(out.stats.trials, 5u);
  EXPECT_EQ(out.stats.trials_capped, 5u);
  EXPECT_EQ(out.stats.verdict, "cap-exceeded");
}

// Small enough to project completely.
const char* kSmallNra = R"(exists x y z; free w;
  x^2 + y^2 - 1 <= 0
  x*y - z >= 0
  z^2 - w < 0)";

TEST(RunCad, StrategiesProduceRecords) {
  auto f = parse_formula(kSmallNra);
  for (const char* s : {"td", "td-dp", "brown", "natural", "random:2"}) {
    auto out = run_cad(f, with(s));
    EXPECT_EQ(out.stats.mode, "cad");
    EXPECT_EQ(out.stats.order.size(), 3u);
    for (const auto& p : out.set.polys()) EXPECT_EQ(p.vars(), (std::vector<Var>{f.vars().find("w").value()}));
    EXPECT_TRUE(out.stats.max_combined_degree.has_value());
  }
  EXPECT_THROW(run_cad(f, with("greedy")), ConfigError);
}

TEST(RunCad, TdAndDynamicProgramAgree) {
  auto f = parse_formula(kSmallNra);
  EXPECT_EQ(run_cad(f, with("td-walk")).set, run_cad(f, with("td-dp")).set);
}

TEST(Stats, EmptyFormulaGivesZeroRecord) {
  auto f = parse_formula("exists x;");
  auto out = run_fme(f, with("natural"));
  EXPECT_EQ(out.stats.initial, 0u);
  EXPECT_EQ(out.stats.peak, 0u);
  EXPECT_EQ(out.stats.final_count, 0u);
  EXPECT_EQ(out.stats.verdict, "true");
}

TEST(Stats, FalseRunRecordsStep) {
  auto f = parse_formula("exists x y; x < y; x > y + 1; y <= 5");
  auto out = run_fme(f, with("natural"));
  EXPECT_EQ(out.stats.verdict, "false");
  EXPECT_EQ(out.stats.false_step, 1u);
}

TEST(Stats, JsonIsDeterministic) {
  auto f = running_example();
  auto a = to_json_stable(run_fme(f, with("greedy", CountPolicy::Raw)).stats);
  auto b = to_json_stable(run_fme(f, with("greedy", CountPolicy::Raw)).stats);
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_FALSE(a.contains("elapsed_ms"));
  auto out = run_fme(f, with("greedy", CountPolicy::Raw));
  auto full = to_json(out.stats);
  EXPECT_TRUE(full.contains("elapsed_ms"));
  EXPECT_EQ(full["final"].get<std::size_t>(), out.stats.final_count);
  for (const char* key : {"instance", "mode", "strategy", "order", "per_step_counts", "peak", "final", "verdict"})
    EXPECT_TRUE(full.contains(key)) << key;
}

TEST(PlannedOrder, MatchesStrategies) {
  auto f = running_example();
  auto td = planned_order(f, with("td"));
  EXPECT_EQ(td.provenance, Provenance::FromTD);
  EXPECT_TRUE(is_peo(build_primal(f), td.vars));
  EXPECT_EQ(planned_order(f, with("natural")).vars, f.quantified());
  auto walk = planned_order(f, with("td-walk"));
  EXPECT_TRUE(is_peo(build_primal(f), walk.vars));
  EXPECT_EQ(run_fme(f, with("td", CountPolicy::Raw)).stats.order, run_fme(f, with("td", CountPolicy::Raw)).stats.order);
}
