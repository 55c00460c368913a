#pragma once

#include <variant>
#include <vector>

#include "tdqe/linear_atom.hpp"
#include "tdqe/poly.hpp"
#include "tdqe/var.hpp"

namespace tdqe {

// poly rel 0
struct PolyAtom {
  Poly poly;
  Relation rel = Relation::LE;

  friend bool operator==(const PolyAtom&, const PolyAtom&) = default;
};

// Canonical polynomial atom: relation in {LT, LE, EQ} and a positively scaled
// primitive integer polynomial; equalities also get a positive leading
// coefficient. Constant atoms resolve to a verdict.
std::variant<PolyAtom, ConstVerdict> normalize_atom(const PolyAtom& a);
bool eval_atom(const PolyAtom& a, const Assignment& point);
std::vector<Var> atom_vars(const PolyAtom& a);

// Degree <= 1 atoms convert exactly; anything else throws MixedModeError.
LinearAtom to_linear(const PolyAtom& a);
PolyAtom to_poly(const LinearAtom& a);

enum class FormulaMode { Linear, Polynomial };

// exists quantified . /\ atoms
//
// The variable table owns names for both quantified and free variables;
// free() is derived from the atoms.
class QuantFormula {
 public:
  using Atoms = std::variant<std::vector<LinearAtom>, std::vector<PolyAtom>>;

  QuantFormula() : atoms_(std::vector<LinearAtom>{}) {}
  QuantFormula(VarTable vars, std::vector<Var> quantified, std::vector<LinearAtom> atoms);
  QuantFormula(VarTable vars, std::vector<Var> quantified, std::vector<PolyAtom> atoms);

  const VarTable& vars() const { return vars_; }
  const std::vector<Var>& quantified() const { return quantified_; }
  std::vector<Var> free() const;
  bool is_quantified(Var v) const;

  FormulaMode mode() const;
  std::size_t num_atoms() const;

  // Linear view; throws MixedModeError for nonlinear atoms.
  std::vector<LinearAtom> linear_atoms() const;
  // Polynomial view; always available.
  std::vector<PolyAtom> poly_atoms() const;

  // Variables occurring in atom i.
  std::vector<Var> atom_vars(std::size_t i) const;

 private:
  void check_invariants() const;

  VarTable vars_;
  std::vector<Var> quantified_;
  Atoms atoms_;
};

}  // namespace tdqe
