#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tdqe/formula.hpp"
#include "tdqe/graph.hpp"
#include "tdqe/tree_decomp.hpp"

namespace tdqe {

struct GenConfig {
  std::size_t k = 2;
  std::size_t n_vars = 15;
  std::uint32_t max_deg = 1;
  double include_prob = 0.1;
  long coeff_min = -10;
  long coeff_max = 10;
  std::uint64_t seed = 1;
  // Defaults: one atom per bag, every variable quantified.
  std::optional<std::size_t> n_atoms;
  std::optional<std::size_t> n_elim;
  // Defaults: <= for linear instances, >= 0 for polynomial ones.
  std::optional<Relation> rel;
};

// Throws ConfigError.
void validate(const GenConfig& cfg);

nlohmann::json to_json(const GenConfig& cfg);
GenConfig gen_config_from_json(const nlohmann::json& j);

// Vertex i of the k-tree is Var{i}, i.e. variables are numbered in
// attachment order.
struct KTree {
  Graph graph;
  // The (k+1)-cliques; bag i > 0 was created by attaching vertex k + i.
  std::vector<std::vector<Var>> bags;
  // bag_parent[i] is the bag that vertex k + i was attached into.
  std::vector<std::optional<std::size_t>> bag_parent;
};

// Starts from the clique {0..k}; every further vertex picks a uniform bag,
// drops one of its vertices uniformly and joins the remaining k.
KTree gen_ktree(const GenConfig& cfg);

// The decomposition formed by the k-tree bags.
TreeDecomp ktree_decomposition(const KTree& kt);

// Atoms are spread round-robin over the bags. Each atom uses monomials over
// its bag of total degree <= max_deg: one random monomial of degree exactly
// max_deg plus each other monomial with probability include_prob. A bag's
// atoms are redrawn until they mention every variable of the bag.
QuantFormula gen_formula(const KTree& kt, const GenConfig& cfg);

struct GenReport {
  bool primal_in_ktree = true;
  bool attachment_width_is_k = true;
  bool quantified_all_occur = true;
  std::vector<std::string> problems;

  bool ok() const { return primal_in_ktree && attachment_width_is_k && quantified_all_occur; }
};

GenReport gen_properties_check(const QuantFormula& f, const KTree& kt, const GenConfig& cfg);

}  // namespace tdqe
