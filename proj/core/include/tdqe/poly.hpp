#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tdqe/linear_atom.hpp"
#include "tdqe/rational.hpp"
#include "tdqe/var.hpp"

namespace tdqe {

// Power product with positive exponents, sorted by variable.
class Monomial {
 public:
  using Power = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Power> powers);
  static Monomial of(Var v, std::uint32_t exponent = 1);

  const std::vector<Power>& powers() const { return powers_; }
  std::uint32_t degree(Var v) const;
  std::uint32_t total_degree() const { return total_; }
  bool is_one() const { return powers_.empty(); }
  bool divides(const Monomial& other) const;

  // Same monomial with v removed.
  Monomial without(Var v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Precondition: b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.powers_ == b.powers_; }

 private:
  std::vector<Power> powers_;
  std::uint32_t total_ = 0;
};

// Graded lexicographic comparison: total degree first, then exponents of
// variables in increasing index order (a larger exponent on a lower index
// wins). Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial over Q. Terms are kept in strictly
// decreasing graded-lex order with no zero coefficients, so structural
// equality is polynomial equality.
class Poly {
 public:
  using Term = std::pair<Monomial, Rat>;

  Poly() = default;
  Poly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Rat(constant)) {}  // NOLINT(google-explicit-constructor)
  Poly(Monomial m, Rat coeff);

  static Poly variable(Var v);
  // Merges duplicates and drops zeros; input order is irrelevant.
  static Poly from_terms(std::vector<Term> terms);
  static Poly from_linear(const LinearAtom& a);  // lhs - rhs

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (0 for the zero polynomial).
  Rat constant_value() const;

  // Leading term in graded-lex order. Precondition: !is_zero().
  const Term& leading() const { return terms_.front(); }

  std::uint32_t degree(Var v) const;
  std::uint32_t total_degree() const;
  bool mentions(Var v) const;
  std::vector<Var> vars() const;

  Poly derivative(Var v) const;
  Poly substitute(Var v, const Rat& value) const;
  // Throws MissingAssignment if a variable of the polynomial is unassigned.
  Rat evaluate(const Assignment& point) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b);
  // Total order used for canonical sets: graded-lex on terms, then
  // coefficients.
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  std::vector<Term> terms_;
};

Poly pow(const Poly& base, std::uint32_t exponent);

// Positive rational c such that p / c has integer coefficients with gcd 1.
// Returns 1 for the zero polynomial.
Rat rational_content(const Poly& p);

}  // namespace tdqe
