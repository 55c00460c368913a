#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdqe/cad.hpp"
#include "tdqe/fme.hpp"
#include "tdqe/graph.hpp"
#include "tdqe/tree_decomp.hpp"

namespace tdqe {

enum class Provenance { FromTD, Greedy, Random, Brown, Natural };
std::string to_string(Provenance p);

struct ElimOrder {
  std::vector<Var> vars;
  Provenance provenance = Provenance::Natural;
  // Random orders only.
  std::uint64_t seed = 0;
  std::size_t trial = 0;
};

// Top-down breadth-first walk recording, per bag, the variables its parent
// lacks (the root contributes all of its own); the walk is then reversed.
ElimOrder order_from_td(const NiceTreeDecomp& t, const ChildOrder& children = default_child_order);
// Plain decompositions are walked from t.root with children sorted by bag
// contents. Throws InvalidDecomposition if t is not a tree.
ElimOrder order_from_td(const TreeDecomp& t);

// Later neighbours of every vertex form a clique.
bool is_peo(const Graph& g, const std::vector<Var>& order);

struct GreedyResult {
  ElimOrder order;
  // Elimination along the chosen order, reusing the simulated steps.
  FmeResult run;
};

// Repeatedly eliminates the variable whose step leaves the fewest atoms
// under options.policy (ties to the lowest index). With the raw policy the
// candidate counts are computed without building the sets.
GreedyResult greedy_eliminate(const ConstraintSet& c, const std::vector<Var>& vars, const FmeOptions& options = {});
ElimOrder greedy_order(const ConstraintSet& c, const std::vector<Var>& vars);

// Anchor of v: the topmost node containing v, moved down through forget
// nodes to the full bag. before[v] lists the variables anchored strictly
// below the anchor of v. Every order that eliminates before[v] ahead of v
// keeps the later neighbours of v inside the anchor bag, so it is a perfect
// elimination order of the filled graph; the reversed breadth-first walk is
// one of them.
std::map<Var, std::vector<Var>> td_precedence(const NiceTreeDecomp& t);

// Greedy choice restricted to the orders allowed by td_precedence(t).
GreedyResult td_greedy_eliminate(const ConstraintSet& c, const std::vector<Var>& vars, const NiceTreeDecomp& t,
                                 const FmeOptions& options = {});

// n_trials seeded uniform permutations.
std::vector<ElimOrder> random_orders(const std::vector<Var>& vars, std::size_t n_trials, std::uint64_t seed);

// Static ranking: lowest maximum degree over the polynomials, then lowest
// maximum total degree of a term containing the variable, then fewest terms
// containing it, then index.
ElimOrder brown_order(const PolySet& p, const std::vector<Var>& vars);

// Brown ranking restricted to the orders allowed by td_precedence(t).
ElimOrder td_brown_order(const PolySet& p, const std::vector<Var>& vars, const NiceTreeDecomp& t);

}  // namespace tdqe
