#pragma once

// Reference implementations used to check the library. None of them call
// into the algorithms they check: determinants use plain rational Gaussian
// elimination or permutation expansion, polynomials are specialized term by
// term, and feasibility in one variable is decided by interval reasoning.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tdqe/graph.hpp"
#include "tdqe/linear_atom.hpp"
#include "tdqe/poly.hpp"
#include "tdqe/tree_decomp.hpp"

namespace oracle {

using tdqe::Assignment;
using tdqe::Rat;
using tdqe::Var;

using Matrix = std::vector<std::vector<Rat>>;

Rat det_gauss(Matrix m);
// Sum over all permutations; only for n <= 7.
Rat det_leibniz(const Matrix& m);

// Ascending coefficients of p in x after substituting `others` for every
// other variable. Trailing zeros are trimmed.
std::vector<Rat> specialize(const tdqe::Poly& p, Var x, const Assignment& others);

// Determinant of the Sylvester matrix of two univariate polynomials given by
// ascending coefficients. Both must have nonzero leading coefficient and
// positive degree.
Rat sylvester_resultant(const std::vector<Rat>& f, const std::vector<Rat>& g);

// sum coeffs * point  rel  rhs, without the library's evaluator.
bool satisfies(const tdqe::LinearAtom& a, const Assignment& point);
bool satisfies_all(const std::vector<tdqe::LinearAtom>& atoms, const Assignment& point);

// Whether some real x satisfies every atom once the other variables are
// fixed by `point`: equalities pin x, the largest lower bound must stay below
// the smallest upper bound, strict when either end is strict.
bool exists_x(const std::vector<tdqe::LinearAtom>& atoms, Var x, const Assignment& point);

// Graph whose edges are the pairs sharing a bag.
tdqe::Graph bag_graph(const tdqe::TreeDecomp& t);

// Brute force over all orders; for graphs up to 8 vertices.
std::size_t brute_treewidth(const tdqe::Graph& g);

}  // namespace oracle

namespace gen {

using Rng = std::mt19937_64;

tdqe::Rat small_rat(Rng& rng, long range = 5);
tdqe::Assignment random_point(Rng& rng, const std::vector<tdqe::Var>& vars, long range = 6);

// Connected random graph on n vertices: a random spanning tree plus each
// other edge with probability p.
tdqe::Graph connected_graph(Rng& rng, std::size_t n, double p);

struct LraShape {
  std::size_t quantified = 4;
  std::size_t free = 2;
  std::size_t atoms = 10;
  // Variables per atom are drawn from a sliding window of this width, which
  // keeps the primal graph sparse.
  std::size_t window = 3;
  double eq_prob = 0.1;
  double strict_prob = 0.2;
};

// Quantified variables come first in the table (x1..), free ones follow
// (y1..).
tdqe::QuantFormula lra_formula(Rng& rng, const LraShape& shape);

struct NraShape {
  std::size_t vars = 4;
  std::size_t atoms = 4;
  std::uint32_t max_deg = 2;
  std::size_t window = 3;
  std::size_t free = 0;
};

tdqe::QuantFormula nra_formula(Rng& rng, const NraShape& shape);

// Random nonconstant polynomial in `vars`. Degrees are bounded per variable,
// or in total when `total` is set.
tdqe::Poly poly(Rng& rng, const std::vector<tdqe::Var>& vars, std::uint32_t max_deg, std::size_t terms,
                bool total = false);

}  // namespace gen

std::string data_path(const std::string& name);
std::string slurp(const std::string& path);
