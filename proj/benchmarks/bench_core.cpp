#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "tdqe/benchgen.hpp"
#include "tdqe/cad.hpp"
#include "tdqe/fme.hpp"
#include "tdqe/ordering.hpp"
#include "tdqe/parser.hpp"
#include "tdqe/pipeline.hpp"
#include "tdqe/polyalg.hpp"
#include "tdqe/tree_decomp.hpp"

using namespace tdqe;

namespace {

std::string running_example_text() {
  std::ifstream in(std::string(TDQE_BENCH_DATA_DIR) + "/running_example.qf");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QuantFormula generated(std::size_t k, std::size_t n, std::uint64_t seed) {
  GenConfig cfg;
  cfg.k = k;
  cfg.n_vars = n;
  cfg.n_elim = n / 2;
  cfg.n_atoms = 5 * n;
  cfg.seed = seed;
  return gen_formula(gen_ktree(cfg), cfg);
}

Graph ktree_graph(std::size_t k, std::size_t n) {
  GenConfig cfg;
  cfg.k = k;
  cfg.n_vars = n;
  cfg.seed = 7;
  return gen_ktree(cfg).graph;
}

}  // namespace

static void BM_Parse(benchmark::State& state) {
  std::string text = running_example_text();
  for (auto _ : state) benchmark::DoNotOptimize(parse_formula(text));
}
BENCHMARK(BM_Parse);

static void BM_FmeStep(benchmark::State& state) {
  auto f = parse_formula(running_example_text());
  ConstraintSet c(f.linear_atoms(), CountPolicy::Canonical);
  Var x = f.quantified()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(fme_step(c, x));
}
BENCHMARK(BM_FmeStep)->DenseRange(0, 7);

static void BM_GreedyRunningExample(benchmark::State& state) {
  auto f = parse_formula(running_example_text());
  ConstraintSet c(f.linear_atoms(), CountPolicy::Raw);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_eliminate(c, f.quantified(), {CountPolicy::Raw, std::nullopt}));
}
BENCHMARK(BM_GreedyRunningExample)->Unit(benchmark::kMillisecond);

static void BM_RunFmeGenerated(benchmark::State& state) {
  auto f = generated(2, static_cast<std::size_t>(state.range(0)), 3);
  PipelineOptions o;
  o.policy = CountPolicy::Raw;
  o.atom_cap = 10'000'000;
  for (auto _ : state) benchmark::DoNotOptimize(run_fme(f, o));
}
BENCHMARK(BM_RunFmeGenerated)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_HeuristicTd(benchmark::State& state) {
  Graph g = ktree_graph(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(heuristic_td(g, TdStrategy::MinFill));
}
BENCHMARK(BM_HeuristicTd)->Arg(20)->Arg(40)->Arg(80);

static void BM_Nicify(benchmark::State& state) {
  Graph g = ktree_graph(3, static_cast<std::size_t>(state.range(0)));
  TreeDecomp t = heuristic_td(g, TdStrategy::MinFill);
  for (auto _ : state) benchmark::DoNotOptimize(nicify(t));
}
BENCHMARK(BM_Nicify)->Arg(20)->Arg(40)->Arg(80);

static void BM_Resultant(benchmark::State& state) {
  auto f = parse_formula("exists x y z; 3*x^3*y - 2*x^2*z + x*y*z - 5*y + 1 >= 0; x^3 - 4*x*y^2 + 2*z^2*x + 7 >= 0");
  auto polys = poly_set_of(f).polys();
  Var x = f.vars().find("x").value();
  for (auto _ : state) benchmark::DoNotOptimize(resultant(polys[0], polys[1], x));
}
BENCHMARK(BM_Resultant);

static void BM_Discriminant(benchmark::State& state) {
  auto f = parse_formula("exists x y; x^4 - 3*x^2*y + 2*x*y^2 - y^3 + 1 >= 0");
  Poly p = poly_set_of(f).polys()[0];
  Var x = f.vars().find("x").value();
  for (auto _ : state) benchmark::DoNotOptimize(discriminant(p, x));
}
BENCHMARK(BM_Discriminant);

static void BM_McCallumProjection(benchmark::State& state) {
  auto f = parse_formula(
      "exists x y z; x^2 + y^2 + z^2 - 1 <= 0; x*y - z >= 0; x^2*z - y + 2 >= 0; y*z - x^2 + 1 > 0");
  PolySet p = poly_set_of(f);
  Var x = f.vars().find("x").value();
  for (auto _ : state) benchmark::DoNotOptimize(mccallum_proj(p, x));
}
BENCHMARK(BM_McCallumProjection)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
