#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tdqe/formula.hpp"
#include "tdqe/linear_atom.hpp"
#include "tdqe/tree_decomp.hpp"

namespace tdqe {

// Canonical: atoms are normalized and deduplicated, trivially true atoms
// vanish and a trivially false one turns the whole set into FALSE.
// Raw: atoms are scaled but never merged; constant atoms are kept as
// ordinary members and nothing collapses.
enum class CountPolicy { Canonical, Raw };
std::string to_string(CountPolicy p);

class ConstraintSet {
 public:
  explicit ConstraintSet(CountPolicy policy = CountPolicy::Canonical) : policy_(policy) {}
  ConstraintSet(const std::vector<LinearAtom>& atoms, CountPolicy policy);

  static ConstraintSet falsum(CountPolicy policy);

  CountPolicy policy() const { return policy_; }
  // Canonical policy: the set is FALSE. Raw policy: some constant member is
  // false.
  bool is_false() const;
  // Canonical atoms are sorted; raw atoms keep insertion order.
  const std::vector<LinearAtom>& atoms() const { return atoms_; }
  // Number of atoms; a FALSE canonical set counts as 0.
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty() && !falsum_; }

  // Adds atoms that still need normalization.
  void insert(const std::vector<LinearAtom>& atoms);
  // Adds atoms already in the normal form of this policy.
  void add_normalized(std::vector<LinearAtom> atoms);
  void merge(const ConstraintSet& other);

  std::vector<Var> vars() const;

  friend bool operator==(const ConstraintSet& a, const ConstraintSet& b);

 private:
  void set_false();

  CountPolicy policy_;
  bool falsum_ = false;
  std::vector<LinearAtom> atoms_;
};

// x rel constant + sum(coeffs), with rel one of <, <= for upper bounds and
// >, >= for lower bounds.
struct Bound {
  std::vector<LinearAtom::Term> coeffs;
  Rat constant;
  bool strict = false;
  LinearAtom atom;
};

struct BoundSplit {
  std::vector<Bound> lower;
  std::vector<Bound> upper;
  std::vector<LinearAtom> eqs;
  std::vector<LinearAtom> rest;
};

BoundSplit bounds(const ConstraintSet& c, Var x);

// Atom count fme_step would produce before deduplication and constant
// resolution.
std::size_t fme_step_raw_count(const ConstraintSet& c, Var x);

// One elimination step. Uses an equality mentioning x when there is one
// (fewest variables, then atom order); otherwise pairs every lower with
// every upper bound, strict when either bound is strict, and keeps the atoms
// free of x.
ConstraintSet fme_step(const ConstraintSet& c, Var x);

// As fme_step, but gives up (nullopt) when the pre-deduplication count
// exceeds `cap`.
std::optional<ConstraintSet> fme_step_capped(const ConstraintSet& c, Var x, std::size_t cap);

enum class Verdict { Open, True, False, CapExceeded };
std::string to_string(Verdict v);

struct FmeTrace {
  std::vector<Var> order;
  std::vector<std::size_t> per_step_counts;
  std::size_t initial = 0;
  std::size_t peak = 0;
  std::size_t final_count = 0;
  double elapsed_ms = 0;
  Verdict verdict = Verdict::True;
  // Number of completed steps when the set first became false (0: before
  // any step).
  std::optional<std::size_t> false_step;
};

struct FmeResult {
  ConstraintSet set;
  FmeTrace trace;
};

struct FmeOptions {
  CountPolicy policy = CountPolicy::Canonical;
  // Abort when a step would produce more atoms than this.
  std::optional<std::size_t> atom_cap;
};

FmeResult fme_order(const ConstraintSet& c, const std::vector<Var>& order, const FmeOptions& options = {});

// Dynamic program over a nice decomposition of the primal graph of f.
// Throws InvalidDecomposition when t does not decompose that graph.
FmeResult fme_dp(const QuantFormula& f, const NiceTreeDecomp& t, const FmeOptions& options = {},
                 const ChildOrder& children = default_child_order);

}  // namespace tdqe
