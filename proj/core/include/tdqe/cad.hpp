#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdqe/formula.hpp"
#include "tdqe/poly.hpp"
#include "tdqe/tree_decomp.hpp"

namespace tdqe {

// Set of canonical non-constant polynomials (primitive, integer, positive
// leading coefficient), kept sorted.
class PolySet {
 public:
  PolySet() = default;
  explicit PolySet(const std::vector<Poly>& polys);

  // Canonicalizes p; constants are dropped.
  void insert(const Poly& p);
  void merge(const PolySet& other);

  const std::vector<Poly>& polys() const { return polys_; }
  std::size_t size() const { return polys_.size(); }
  bool empty() const { return polys_.empty(); }
  bool contains(const Poly& p) const;
  std::vector<Var> vars() const;

  friend bool operator==(const PolySet&, const PolySet&) = default;

 private:
  std::vector<Poly> polys_;
};

// max over variables of the degree of the product of `polys`. Throws
// ValidationError for an empty set.
std::size_t combined_degree(const std::vector<Poly>& polys);
std::size_t combined_degree(const PolySet& p);

// Per-variable degree of the product.
std::map<Var, std::size_t> product_degrees(const std::vector<Poly>& polys);

// McCallum projection with a square-free, pairwise coprime basis in place of
// an irreducible one: contents of the members mentioning x, plus
// coefficients, discriminants and pairwise resultants of the basis. Members
// free of x pass through unchanged.
PolySet mccallum_proj(const PolySet& p, Var x);

// [P, Proj(P, order[0]), Proj(Proj(P, order[0]), order[1]), ...]
std::vector<PolySet> projection_sequence(const PolySet& p, const std::vector<Var>& order);

struct CadTrace {
  std::vector<Var> order;
  std::vector<std::size_t> per_step_counts;
  std::vector<std::size_t> per_step_combined_degree;
  std::size_t initial = 0;
  std::size_t peak = 0;
  std::size_t final_count = 0;
  std::size_t max_combined_degree = 0;
  // Highest degree of each variable over the final set.
  std::map<Var, std::size_t> final_degrees;
  double elapsed_ms = 0;
};

struct CadResult {
  PolySet set;
  CadTrace trace;
};

// The polynomials of the atoms of f.
PolySet poly_set_of(const QuantFormula& f);

CadResult project_order(const PolySet& p, const std::vector<Var>& order);

// Dynamic program over a nice decomposition of the primal graph of f; the
// forget step applies mccallum_proj. Throws InvalidDecomposition.
CadResult cad_dp(const QuantFormula& f, const NiceTreeDecomp& t, const ChildOrder& children = default_child_order);

struct MdCertificate {
  std::vector<std::vector<Poly>> groups;
  std::size_t d = 0;
  std::size_t m = 0;
  // Exhaustive search (optimal d) or heuristic assignment.
  bool exhaustive = false;
};

// Partition into at most max_groups groups with small maximum combined
// degree: optimal by branch and bound when |P| <= 15, otherwise a greedy
// assignment improved by single moves. Returns nullopt only when the
// exhaustive search proves that no partition meets `d_bound`.
std::optional<MdCertificate> md_certificate(const PolySet& p, std::size_t max_groups,
                                            std::optional<std::size_t> d_bound = std::nullopt);

}  // namespace tdqe
