#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "tdqe/formula.hpp"
#include "tdqe/var.hpp"

namespace tdqe {

// Simple undirected graph over variables.
class Graph {
 public:
  Graph() = default;

  void add_vertex(Var v);
  // Adds both endpoints; self-loops are ignored.
  void add_edge(Var u, Var v);
  // Adds every vertex of `vs` and makes them pairwise adjacent.
  void add_clique(const std::vector<Var>& vs);

  bool has_vertex(Var v) const { return adj_.count(v) != 0; }
  bool has_edge(Var u, Var v) const;
  const std::set<Var>& neighbors(Var v) const;
  std::size_t degree(Var v) const { return neighbors(v).size(); }

  // Ascending.
  std::vector<Var> vertices() const;
  // Pairs (u, v) with u < v, ascending.
  std::vector<std::pair<Var, Var>> edges() const;
  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const;

  Graph induced(const std::vector<Var>& vs) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::map<Var, std::set<Var>> adj_;
};

// Vertices are the quantified variables; two are adjacent when some atom
// mentions both. Free variables never appear.
Graph build_primal(const QuantFormula& f);

// Graph over all variables of the given atoms.
Graph build_primal(const std::vector<LinearAtom>& atoms);

// Components ordered by their smallest vertex.
std::vector<Graph> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace tdqe
