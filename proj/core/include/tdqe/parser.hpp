#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tdqe/formula.hpp"

namespace tdqe {

// Native formula format:
//
//   # comment
//   exists x1 x2 x3;
//   free y;                      (optional, fixes the order of free names)
//   x1 + 2*x2 + 3*x3 <= 20
//   8 x1 x2 + 6x1 - y^2 >= 0; x3 < 1/2
//
// Atoms are separated by newlines or ';'. Both sides of a relation are
// polynomial expressions built from integers, decimals, variables, + - * / ^
// and parentheses; '/' only divides by a number and juxtaposition
// multiplies. Relations: < > = <= >= (also == and the Unicode forms).
// Variables are interned in order of first appearance, header first. A
// document whose atoms all have degree <= 1 is linear.
//
// Throws ParseError with 1-based line and column.
QuantFormula parse_formula(std::string_view text);

std::string format_poly(const Poly& p, const VarTable& vars);
std::string format_atom(const LinearAtom& a, const VarTable& vars);
std::string format_atom(const PolyAtom& a, const VarTable& vars);

// Header plus one atom per line; parse_formula reads it back.
std::string format_formula(const QuantFormula& f);

// One atom per line; "false" for a contradiction and "true" for no atoms.
std::string format_atoms(const std::vector<LinearAtom>& atoms, const VarTable& vars, bool is_false = false);
std::string format_polys(const std::vector<Poly>& polys, const VarTable& vars);

}  // namespace tdqe
