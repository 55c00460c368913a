#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdqe/cad.hpp"
#include "tdqe/fme.hpp"
#include "tdqe/formula.hpp"
#include "tdqe/ordering.hpp"
#include "tdqe/stats.hpp"
#include "tdqe/tree_decomp.hpp"

namespace tdqe {

// TD eliminates along the decomposition and breaks ties among the allowed
// orders with the greedy count (linear) or the Brown ranking (polynomial);
// TDWalk takes the plain reversed breadth-first walk.
enum class Strategy { TD, TDWalk, TDDynamic, Greedy, Random, Natural, Brown, Given };

struct PipelineOptions {
  Strategy strategy = Strategy::TD;
  std::size_t random_trials = 5;
  std::uint64_t seed = 0;
  CountPolicy policy = CountPolicy::Canonical;
  std::optional<std::size_t> atom_cap;
  TdStrategy td_strategy = TdStrategy::MinFill;
  // Imported decomposition of the primal graph (TD strategies).
  std::optional<TreeDecomp> td;
  // Strategy::Given.
  std::vector<Var> order;
};

// Accepts td, td-walk, td-dp, greedy, random, random:N, natural, brown. Throws
// ConfigError.
void parse_strategy(const std::string& text, PipelineOptions& options);
std::string strategy_name(const PipelineOptions& options);

// Heuristic decomposition of every component, linked into one tree.
TreeDecomp decompose(const Graph& g, TdStrategy strategy, std::uint64_t seed = 0);

struct FmeOutcome {
  ConstraintSet set;
  StatsRecord stats;
};

// Eliminates the quantified block of a linear formula. Components of the
// primal graph are independent, so every strategy works on disconnected
// inputs. Throws MixedModeError for polynomial atoms.
FmeOutcome run_fme(const QuantFormula& f, const PipelineOptions& options);

struct CadOutcome {
  PolySet set;
  StatsRecord stats;
};

// Projects away the quantified block with the McCallum operator.
CadOutcome run_cad(const QuantFormula& f, const PipelineOptions& options);

// Elimination order a non-simulating strategy would use.
ElimOrder planned_order(const QuantFormula& f, const PipelineOptions& options);

}  // namespace tdqe
