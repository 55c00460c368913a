#pragma once

#include <map>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "tdqe/rational.hpp"
#include "tdqe/relation.hpp"
#include "tdqe/var.hpp"

namespace tdqe {

using Assignment = std::map<Var, Rat>;

// sum_i coeffs[i].second * coeffs[i].first  rel  rhs
//
// Coefficients are kept sorted by variable with no zero entries. An atom with
// no coefficients is a constant atom; normalize_atom turns those into a
// ConstVerdict, and only the raw counting policy of the FME engine keeps them.
class LinearAtom {
 public:
  using Term = std::pair<Var, Rat>;

  LinearAtom() = default;
  LinearAtom(std::vector<Term> coeffs, Rat rhs, Relation rel);

  const std::vector<Term>& coeffs() const { return coeffs_; }
  const Rat& rhs() const { return rhs_; }
  Relation rel() const { return rel_; }

  // Zero when v does not occur.
  Rat coeff(Var v) const;
  bool mentions(Var v) const;
  bool is_constant() const { return coeffs_.empty(); }
  std::size_t num_vars() const { return coeffs_.size(); }

  friend bool operator==(const LinearAtom& a, const LinearAtom& b);
  friend bool operator<(const LinearAtom& a, const LinearAtom& b);

 private:
  std::vector<Term> coeffs_;
  Rat rhs_;
  Relation rel_ = Relation::LE;
};

using NormalizedAtom = std::variant<LinearAtom, ConstVerdict>;

// Canonical form: relation in {LT, LE, EQ} (GT/GE flipped by negating both
// sides), integer coefficients with gcd 1 obtained by a positive scaling, and
// for equalities a positive coefficient on the lowest-index variable.
// Constant atoms resolve to a verdict.
NormalizedAtom normalize_atom(const LinearAtom& a);

// Same scaling as normalize_atom, but constant atoms are returned as atoms
// instead of verdicts.
LinearAtom canonical_or_constant(const LinearAtom& a);

// Verdict of a constant atom. Precondition: a.is_constant().
ConstVerdict constant_verdict(const LinearAtom& a);

// Exact evaluation; throws MissingAssignment if a variable is unassigned.
bool eval_atom(const LinearAtom& a, const Assignment& point);

std::vector<Var> atom_vars(const LinearAtom& a);

// a + factor * b, relation taken from `rel`.
LinearAtom combine(const LinearAtom& a, const Rat& factor, const LinearAtom& b, Relation rel);

}  // namespace tdqe
