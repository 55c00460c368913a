#include "tdqe/pipeline.hpp"

#include <algorithm>
#include <limits>

#include "tdqe/error.hpp"
#include "tdqe/graph.hpp"

namespace tdqe {

void parse_strategy(const std::string& text, PipelineOptions& options) {
  if (text == "td") {
    options.strategy = Strategy::TD;
  } else if (text == "td-walk") {
    options.strategy = Strategy::TDWalk;
  } else if (text == "td-dp") {
    options.strategy = Strategy::TDDynamic;
  } else if (text == "greedy") {
    options.strategy = Strategy::Greedy;
  } else if (text == "natural") {
    options.strategy = Strategy::Natural;
  } else if (text == "brown") {
    options.strategy = Strategy::Brown;
  } else if (text == "random" || text.rfind("random:", 0) == 0) {
    options.strategy = Strategy::Random;
    if (text.size() > 7) {
      try {
        std::size_t used = 0;
        long n = std::stol(text.substr(7), &used);
        if (used != text.size() - 7 || n < 1) throw std::invalid_argument("count");
        options.random_trials = static_cast<std::size_t>(n);
      } catch (const std::exception&) {
        throw ConfigError("bad trial count in '" + text + "'");
      }
    }
  } else {
    throw ConfigError("unknown strategy '" + text + "'");
  }
}

std::string strategy_name(const PipelineOptions& options) {
  switch (options.strategy) {
    case Strategy::TD: return "td";
    case Strategy::TDWalk: return "td-walk";
    case Strategy::TDDynamic: return "td-dp";
    case Strategy::Greedy: return "greedy";
    case Strategy::Random: return "random:" + std::to_string(options.random_trials);
    case Strategy::Natural: return "natural";
    case Strategy::Brown: return "brown";
    case Strategy::Given: return "given";
  }
  return "unknown";
}

TreeDecomp decompose(const Graph& g, TdStrategy strategy, std::uint64_t seed) {
  TreeDecomp out;
  for (const Graph& comp : connected_components(g)) {
    TreeDecomp t = heuristic_td(comp, strategy, seed);
    BagId offset = out.bags.size();
    if (offset > 0) out.edges.emplace_back(out.root, offset + t.root);
    for (auto& bag : t.bags) out.bags.push_back(std::move(bag));
    for (const auto& [a, b] : t.edges) out.edges.emplace_back(offset + a, offset + b);
  }
  return out;
}

namespace {

NiceTreeDecomp nice_for(const PipelineOptions& options, const Graph& g) {
  TreeDecomp td = options.td ? *options.td : decompose(g, options.td_strategy, options.seed);
  if (auto violation = validate_td(g, td)) {
    throw InvalidDecomposition(to_string(violation->condition) + ": " + violation->detail);
  }
  return nicify(td);
}

void add_td_shape(StatsRecord& s, const NiceTreeDecomp& nice) {
  s.td_width = width(nice);
  s.td_height = height(nice);
}

}  // namespace

ElimOrder planned_order(const QuantFormula& f, const PipelineOptions& options) {
  switch (options.strategy) {
    case Strategy::TD: {
      NiceTreeDecomp nice = nice_for(options, build_primal(f));
      if (f.mode() == FormulaMode::Linear) {
        ConstraintSet c(f.linear_atoms(), options.policy);
        return td_greedy_eliminate(c, f.quantified(), nice, {options.policy, std::nullopt}).order;
      }
      return td_brown_order(poly_set_of(f), f.quantified(), nice);
    }
    case Strategy::TDWalk:
    case Strategy::TDDynamic: {
      Graph g = build_primal(f);
      return order_from_td(nice_for(options, g));
    }
    case Strategy::Natural: return ElimOrder{f.quantified(), Provenance::Natural, 0, 0};
    case Strategy::Given: return ElimOrder{options.order, Provenance::Natural, 0, 0};
    case Strategy::Brown: return brown_order(poly_set_of(f), f.quantified());
    case Strategy::Random: return random_orders(f.quantified(), options.random_trials, options.seed).front();
    case Strategy::Greedy: {
      ConstraintSet c(f.linear_atoms(), options.policy);
      return greedy_order(c, f.quantified());
    }
  }
  throw ConfigError("unknown strategy");
}

FmeOutcome run_fme(const QuantFormula& f, const PipelineOptions& options) {
  const VarTable& vars = f.vars();
  std::vector<LinearAtom> atoms = f.linear_atoms();
  ConstraintSet initial(atoms, options.policy);
  FmeOptions fo{options.policy, options.atom_cap};
  FmeOutcome out{ConstraintSet(options.policy), {}};

  switch (options.strategy) {
    case Strategy::TDDynamic: {
      Graph g = build_primal(f);
      NiceTreeDecomp nice = nice_for(options, g);
      FmeResult r = fme_dp(f, nice, fo);
      out.set = std::move(r.set);
      out.stats = fme_stats(r.trace, vars, options.policy);
      add_td_shape(out.stats, nice);
      break;
    }
    case Strategy::Greedy: {
      GreedyResult r = greedy_eliminate(initial, f.quantified(), fo);
      out.set = std::move(r.run.set);
      out.stats = fme_stats(r.run.trace, vars, options.policy);
      break;
    }
    case Strategy::TD: {
      NiceTreeDecomp nice = nice_for(options, build_primal(f));
      GreedyResult r = td_greedy_eliminate(initial, f.quantified(), nice, fo);
      out.set = std::move(r.run.set);
      out.stats = fme_stats(r.run.trace, vars, options.policy);
      add_td_shape(out.stats, nice);
      break;
    }
    case Strategy::Random: {
      auto orders = random_orders(f.quantified(), options.random_trials, options.seed);
      std::optional<FmeResult> best;
      std::size_t capped = 0;
      for (const auto& o : orders) {
        FmeResult r = fme_order(initial, o.vars, fo);
        bool r_capped = r.trace.verdict == Verdict::CapExceeded;
        if (r_capped) ++capped;
        bool better = !best || (best->trace.verdict == Verdict::CapExceeded && !r_capped) ||
                      (r_capped == (best->trace.verdict == Verdict::CapExceeded) &&
                       r.trace.final_count < best->trace.final_count);
        if (better) best = std::move(r);
      }
      out.set = std::move(best->set);
      out.stats = fme_stats(best->trace, vars, options.policy);
      out.stats.trials = orders.size();
      out.stats.trials_capped = capped;
      break;
    }
    default: {
      ElimOrder order = planned_order(f, options);
      FmeResult r = fme_order(initial, order.vars, fo);
      out.set = std::move(r.set);
      out.stats = fme_stats(r.trace, vars, options.policy);
      if (options.strategy == Strategy::TDWalk) {
        Graph g = build_primal(f);
        add_td_shape(out.stats, nice_for(options, g));
      }
      break;
    }
  }
  out.stats.strategy = strategy_name(options);
  return out;
}

CadOutcome run_cad(const QuantFormula& f, const PipelineOptions& options) {
  const VarTable& vars = f.vars();
  PolySet initial = poly_set_of(f);
  CadOutcome out;
  switch (options.strategy) {
    case Strategy::TDDynamic: {
      Graph g = build_primal(f);
      NiceTreeDecomp nice = nice_for(options, g);
      CadResult r = cad_dp(f, nice);
      out.set = std::move(r.set);
      out.stats = cad_stats(r.trace, vars);
      add_td_shape(out.stats, nice);
      break;
    }
    case Strategy::Greedy:
      throw ConfigError("the greedy strategy simulates FME steps and is only available for linear formulas");
    case Strategy::Random: {
      auto orders = random_orders(f.quantified(), options.random_trials, options.seed);
      std::optional<CadResult> best;
      for (const auto& o : orders) {
        CadResult r = project_order(initial, o.vars);
        if (!best || r.trace.final_count < best->trace.final_count) best = std::move(r);
      }
      out.set = std::move(best->set);
      out.stats = cad_stats(best->trace, vars);
      out.stats.trials = orders.size();
      out.stats.trials_capped = 0;
      break;
    }
    default: {
      ElimOrder order = planned_order(f, options);
      CadResult r = project_order(initial, order.vars);
      out.set = std::move(r.set);
      out.stats = cad_stats(r.trace, vars);
      if (options.strategy == Strategy::TD || options.strategy == Strategy::TDWalk) {
        Graph g = build_primal(f);
        add_td_shape(out.stats, nice_for(options, g));
      }
      break;
    }
  }
  out.stats.strategy = strategy_name(options);
  return out;
}

}  // namespace tdqe
