#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tdqe/poly.hpp"

namespace tdqe {

std::uint32_t deg(const Poly& f, Var x);

// Coefficient of x^k, a polynomial free of x.
Poly coeff_of(const Poly& f, Var x, std::uint32_t k);

// Nonzero coefficients of f as a univariate polynomial in x, by descending
// degree.
std::vector<Poly> coeffs(const Poly& f, Var x);

// Coefficient of the highest power of x.
Poly leading_coeff(const Poly& f, Var x);

// Primitive integer form with a positive leading coefficient; zero stays zero.
Poly canonical(const Poly& f);

// Exact quotient f / g if g divides f, otherwise nullopt.
std::optional<Poly> exact_divide(const Poly& f, const Poly& g);

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g in x.
// Precondition: deg(g, x) >= 1.
Poly prem(const Poly& f, const Poly& g, Var x);

// Greatest common divisor over Q in canonical form; x is tried first as the
// main variable. gcd(0, 0) = 0.
Poly poly_gcd(const Poly& f, const Poly& g, Var x);

struct ContentPrimitive {
  Poly content;
  Poly primitive;
};

// content * primitive == f, with primitive an integer polynomial whose
// coefficients in x have no common factor and whose leading coefficient in x
// has a positive leading term. Throws ZeroPolynomial for f = 0.
ContentPrimitive content_primitive(const Poly& f, Var x);

// Square-free, pairwise coprime polynomials of positive degree in x whose
// product equals the product of the primitive parts of P up to a constant.
// Elements are canonical and sorted. Inputs of degree 0 in x are ignored.
std::vector<Poly> squarefree_basis(const std::vector<Poly>& P, Var x);

// (s + r) x (s + r) Sylvester matrix of f (degree s) and g (degree r) in x.
std::vector<std::vector<Poly>> sylvester_matrix(const Poly& f, const Poly& g, Var x);

// Fraction-free determinant of a square matrix.
Poly bareiss_determinant(std::vector<std::vector<Poly>> m);

// Throws DegreeTooLow when either input has degree 0 in x.
Poly resultant(const Poly& f, const Poly& g, Var x);

// ((-1)^(s(s-1)/2) / a_s) * Res(f, df/dx, x). Throws DegreeTooLow when
// deg(f, x) < 2.
Poly discriminant(const Poly& f, Var x);

}  // namespace tdqe
