#include "tdqe/polyalg.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "tdqe/error.hpp"

namespace tdqe {

std::uint32_t deg(const Poly& f, Var x) { return f.degree(x); }

Poly coeff_of(const Poly& f, Var x, std::uint32_t k) {
  std::vector<Poly::Term> out;
  for (const auto& [m, c] : f.terms()) {
    if (m.degree(x) == k) out.emplace_back(m.without(x), c);
  }
  return Poly::from_terms(std::move(out));
}

std::vector<Poly> coeffs(const Poly& f, Var x) {
  std::map<std::uint32_t, std::vector<Poly::Term>, std::greater<>> by_degree;
  for (const auto& [m, c] : f.terms()) by_degree[m.degree(x)].emplace_back(m.without(x), c);
  std::vector<Poly> out;
  for (auto& [d, terms] : by_degree) {
    Poly c = Poly::from_terms(std::move(terms));
    if (!c.is_zero()) out.push_back(std::move(c));
  }
  return out;
}

Poly leading_coeff(const Poly& f, Var x) { return coeff_of(f, x, f.degree(x)); }

Poly canonical(const Poly& f) {
  if (f.is_zero()) return f;
  Rat scale = 1 / rational_content(f);
  if (f.leading().second < 0) scale = -scale;
  return f * scale;
}

std::optional<Poly> exact_divide(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  if (g.is_constant()) return f * Rat(1 / g.constant_value());
  const auto& [lm, lc] = g.leading();
  std::vector<Poly::Term> quotient;
  Poly r = f;
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    if (!lm.divides(rm)) return std::nullopt;
    Poly t(rm / lm, Rat(rc / lc));
    quotient.push_back(t.leading());
    r -= t * g;
  }
  return Poly::from_terms(std::move(quotient));
}

Poly prem(const Poly& f, const Poly& g, Var x) {
  std::uint32_t m = g.degree(x);
  if (m == 0) throw DegreeTooLow("pseudo-remainder by a polynomial free of the main variable");
  Poly lg = leading_coeff(g, x);
  Poly r = f;
  std::uint32_t d = r.degree(x);
  int e = d >= m ? static_cast<int>(d - m + 1) : 0;
  while (!r.is_zero() && (d = r.degree(x)) >= m) {
    Poly lr = leading_coeff(r, x);
    Poly shift(Monomial::of(x, d - m), Rat(1));
    r = lg * r - lr * shift * g;
    --e;
  }
  for (; e > 0; --e) r *= lg;
  return r;
}

namespace {

Var main_var(const Poly& f, const Poly& g, std::optional<Var> preferred) {
  if (preferred && (f.mentions(*preferred) || g.mentions(*preferred))) return *preferred;
  auto vf = f.vars();
  auto vg = g.vars();
  if (vf.empty()) return vg.front();
  if (vg.empty()) return vf.front();
  return std::min(vf.front(), vg.front());
}

Poly divide_or_throw(const Poly& f, const Poly& g) {
  auto q = exact_divide(f, g);
  if (!q) throw InexactDivision("expected exact polynomial division");
  return std::move(*q);
}

Poly gcd_rec(const Poly& f, const Poly& g, std::optional<Var> preferred);

// gcd of the coefficients of f in x.
Poly content_in(const Poly& f, Var x) {
  Poly c;
  for (const auto& k : coeffs(f, x)) {
    c = gcd_rec(c, k, std::nullopt);
    if (c.is_constant()) return Poly(1);
  }
  return c;
}

Poly gcd_rec(const Poly& f, const Poly& g, std::optional<Var> preferred) {
  if (f.is_zero()) return canonical(g);
  if (g.is_zero()) return canonical(f);
  if (f.is_constant() || g.is_constant()) return Poly(1);
  Var x = main_var(f, g, preferred);
  if (!f.mentions(x)) return gcd_rec(f, content_in(g, x), std::nullopt);
  if (!g.mentions(x)) return gcd_rec(content_in(f, x), g, std::nullopt);

  Poly cf = content_in(f, x);
  Poly cg = content_in(g, x);
  Poly c = gcd_rec(cf, cg, std::nullopt);
  Poly a = divide_or_throw(f, cf);
  Poly b = divide_or_throw(g, cg);
  if (a.degree(x) < b.degree(x)) std::swap(a, b);
  while (b.degree(x) > 0) {
    Poly r = prem(a, b, x);
    a = std::move(b);
    if (r.is_zero()) {
      b = Poly();
      break;
    }
    b = canonical(divide_or_throw(r, content_in(r, x)));
  }
  Poly primitive_gcd = b.is_zero() ? canonical(divide_or_throw(a, content_in(a, x))) : Poly(1);
  return canonical(c * primitive_gcd);
}

}  // namespace

Poly poly_gcd(const Poly& f, const Poly& g, Var x) { return gcd_rec(f, g, x); }

ContentPrimitive content_primitive(const Poly& f, Var x) {
  if (f.is_zero()) throw ZeroPolynomial("content of the zero polynomial");
  Poly g = content_in(f, x);
  Poly rest = divide_or_throw(f, g);
  Rat c = rational_content(rest);
  if (leading_coeff(rest, x).leading().second < 0) c = -c;
  return {g * c, rest * Rat(1 / c)};
}

namespace {

Poly primitive_in(const Poly& f, Var x) { return canonical(divide_or_throw(f, content_in(f, x))); }

Poly squarefree_part(const Poly& f, Var x) {
  Poly g = poly_gcd(f, f.derivative(x), x);
  if (g.degree(x) == 0) return f;
  return canonical(divide_or_throw(f, g));
}

}  // namespace

std::vector<Poly> squarefree_basis(const std::vector<Poly>& P, Var x) {
  std::vector<Poly> basis;
  for (const auto& p : P) {
    if (p.degree(x) == 0) continue;
    Poly a = squarefree_part(primitive_in(p, x), x);
    for (std::size_t i = 0; i < basis.size() && a.degree(x) > 0;) {
      Poly g = poly_gcd(a, basis[i], x);
      if (g.degree(x) == 0) {
        ++i;
        continue;
      }
      Poly rest = canonical(divide_or_throw(basis[i], g));
      a = canonical(divide_or_throw(a, g));
      basis[i] = g;
      ++i;
      if (rest.degree(x) > 0) basis.insert(basis.begin() + static_cast<std::ptrdiff_t>(i++), std::move(rest));
    }
    if (a.degree(x) > 0) basis.push_back(std::move(a));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<std::vector<Poly>> sylvester_matrix(const Poly& f, const Poly& g, Var x) {
  std::uint32_t s = f.degree(x);
  std::uint32_t r = g.degree(x);
  std::size_t n = s + r;
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::uint32_t row = 0; row < r; ++row) {
    for (std::uint32_t k = 0; k <= s; ++k) m[row][row + k] = coeff_of(f, x, s - k);
  }
  for (std::uint32_t row = 0; row < s; ++row) {
    for (std::uint32_t k = 0; k <= r; ++k) m[r + row][row + k] = coeff_of(g, x, r - k);
  }
  return m;
}

Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
  std::size_t n = m.size();
  if (n == 0) return Poly(1);
  bool negate = false;
  Poly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Poly();
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = divide_or_throw(num, prev);
      }
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

Poly resultant(const Poly& f, const Poly& g, Var x) {
  if (f.degree(x) == 0 || g.degree(x) == 0) throw DegreeTooLow("resultant needs both inputs to contain the variable");
  return bareiss_determinant(sylvester_matrix(f, g, x));
}

Poly discriminant(const Poly& f, Var x) {
  std::uint32_t s = f.degree(x);
  if (s < 2) throw DegreeTooLow("discriminant needs degree at least 2, got " + std::to_string(s));
  Poly res = resultant(f, f.derivative(x), x);
  Poly d = divide_or_throw(res, leading_coeff(f, x));
  std::uint64_t half = static_cast<std::uint64_t>(s) * (s - 1) / 2;
  return half % 2 == 1 ? -d : d;
}

}  // namespace tdqe
