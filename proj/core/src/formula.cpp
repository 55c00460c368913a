#include "tdqe/formula.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tdqe/error.hpp"

namespace tdqe {

std::variant<PolyAtom, ConstVerdict> normalize_atom(const PolyAtom& a) {
  Poly p = a.poly;
  Relation rel = a.rel;
  if (rel == Relation::GT || rel == Relation::GE) {
    p = -p;
    rel = negated(rel);
  }
  if (p.is_constant()) {
    return holds(rel, p.constant_value()) ? ConstVerdict::TriviallyTrue : ConstVerdict::TriviallyFalse;
  }
  Rat scale = 1 / rational_content(p);
  if (rel == Relation::EQ && p.leading().second < 0) scale = -scale;
  p *= scale;
  return PolyAtom{std::move(p), rel};
}

bool eval_atom(const PolyAtom& a, const Assignment& point) { return holds(a.rel, a.poly.evaluate(point)); }

std::vector<Var> atom_vars(const PolyAtom& a) { return a.poly.vars(); }

LinearAtom to_linear(const PolyAtom& a) {
  if (a.poly.total_degree() > 1) throw MixedModeError("atom of degree " + std::to_string(a.poly.total_degree()) + " is not linear");
  std::vector<LinearAtom::Term> coeffs;
  Rat rhs = 0;
  for (const auto& [m, c] : a.poly.terms()) {
    if (m.is_one()) {
      rhs = -c;
    } else {
      coeffs.emplace_back(m.powers().front().first, c);
    }
  }
  return LinearAtom(std::move(coeffs), std::move(rhs), a.rel);
}

PolyAtom to_poly(const LinearAtom& a) { return PolyAtom{Poly::from_linear(a), a.rel()}; }

QuantFormula::QuantFormula(VarTable vars, std::vector<Var> quantified, std::vector<LinearAtom> atoms)
    : vars_(std::move(vars)), quantified_(std::move(quantified)), atoms_(std::move(atoms)) {
  check_invariants();
}

QuantFormula::QuantFormula(VarTable vars, std::vector<Var> quantified, std::vector<PolyAtom> atoms)
    : vars_(std::move(vars)), quantified_(std::move(quantified)), atoms_(std::move(atoms)) {
  check_invariants();
}

void QuantFormula::check_invariants() const {
  std::set<Var> seen;
  for (Var v : quantified_) {
    if (v.index >= vars_.size()) throw ValidationError("quantified variable #" + std::to_string(v.index) + " is not in the variable table");
    if (!seen.insert(v).second) throw ValidationError("variable " + vars_.name(v) + " is quantified twice");
  }
  for (std::size_t i = 0; i < num_atoms(); ++i) {
    for (Var v : atom_vars(i)) {
      if (v.index >= vars_.size()) throw ValidationError("atom " + std::to_string(i) + " uses an unknown variable");
    }
  }
}

std::vector<Var> QuantFormula::free() const {
  std::set<Var> out;
  for (std::size_t i = 0; i < num_atoms(); ++i) {
    for (Var v : atom_vars(i)) {
      if (!is_quantified(v)) out.insert(v);
    }
  }
  return {out.begin(), out.end()};
}

bool QuantFormula::is_quantified(Var v) const {
  return std::find(quantified_.begin(), quantified_.end(), v) != quantified_.end();
}

FormulaMode QuantFormula::mode() const {
  return std::holds_alternative<std::vector<LinearAtom>>(atoms_) ? FormulaMode::Linear : FormulaMode::Polynomial;
}

std::size_t QuantFormula::num_atoms() const {
  return std::visit([](const auto& v) { return v.size(); }, atoms_);
}

std::vector<LinearAtom> QuantFormula::linear_atoms() const {
  if (const auto* lin = std::get_if<std::vector<LinearAtom>>(&atoms_)) return *lin;
  std::vector<LinearAtom> out;
  for (const auto& a : std::get<std::vector<PolyAtom>>(atoms_)) out.push_back(to_linear(a));
  return out;
}

std::vector<PolyAtom> QuantFormula::poly_atoms() const {
  if (const auto* poly = std::get_if<std::vector<PolyAtom>>(&atoms_)) return *poly;
  std::vector<PolyAtom> out;
  for (const auto& a : std::get<std::vector<LinearAtom>>(atoms_)) out.push_back(to_poly(a));
  return out;
}

std::vector<Var> QuantFormula::atom_vars(std::size_t i) const {
  if (const auto* lin = std::get_if<std::vector<LinearAtom>>(&atoms_)) return tdqe::atom_vars(lin->at(i));
  return tdqe::atom_vars(std::get<std::vector<PolyAtom>>(atoms_).at(i));
}

}  // namespace tdqe
