#include "tdqe/poly.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tdqe/error.hpp"

namespace tdqe {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Power> powers) {
  std::sort(powers.begin(), powers.end());
  for (const auto& p : powers) {
    if (!powers_.empty() && powers_.back().first == p.first) {
      powers_.back().second += p.second;
    } else if (p.second > 0) {
      powers_.push_back(p);
    }
  }
  std::erase_if(powers_, [](const Power& p) { return p.second == 0; });
  for (const auto& p : powers_) total_ += p.second;
}

Monomial Monomial::of(Var v, std::uint32_t exponent) { return Monomial({{v, exponent}}); }

std::uint32_t Monomial::degree(Var v) const {
  for (const auto& [var, e] : powers_) {
    if (var == v) return e;
    if (v < var) break;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.powers_.begin();
  for (const auto& [v, e] : powers_) {
    while (it != other.powers_.end() && it->first < v) ++it;
    if (it == other.powers_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::without(Var v) const {
  Monomial m;
  for (const auto& p : powers_) {
    if (p.first != v) {
      m.powers_.push_back(p);
      m.total_ += p.second;
    }
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.powers_.reserve(a.powers_.size() + b.powers_.size());
  auto ia = a.powers_.begin();
  auto ib = b.powers_.begin();
  while (ia != a.powers_.end() || ib != b.powers_.end()) {
    if (ib == b.powers_.end() || (ia != a.powers_.end() && ia->first < ib->first)) {
      m.powers_.push_back(*ia++);
    } else if (ia == a.powers_.end() || ib->first < ia->first) {
      m.powers_.push_back(*ib++);
    } else {
      m.powers_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  m.total_ = a.total_ + b.total_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto ib = b.powers_.begin();
  for (const auto& [v, e] : a.powers_) {
    std::uint32_t sub = 0;
    if (ib != b.powers_.end() && ib->first == v) {
      sub = ib->second;
      ++ib;
    }
    if (e > sub) m.powers_.emplace_back(v, e - sub);
  }
  m.total_ = a.total_ - b.total_;
  return m;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree() ? -1 : 1;
  auto ia = a.powers().begin();
  auto ib = b.powers().begin();
  while (ia != a.powers().end() && ib != b.powers().end()) {
    if (ia->first != ib->first) return ia->first < ib->first ? 1 : -1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
  if (ia != a.powers().end()) return 1;
  if (ib != b.powers().end()) return -1;
  return 0;
}

namespace {

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

}  // namespace

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rat& constant) {
  if (constant != 0) terms_.emplace_back(Monomial(), constant);
}

Poly::Poly(Monomial m, Rat coeff) {
  if (coeff != 0) terms_.emplace_back(std::move(m), std::move(coeff));
}

Poly Poly::variable(Var v) { return Poly(Monomial::of(v), Rat(1)); }

Poly Poly::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Rat, GrlexGreater> acc;
  for (auto& [m, c] : terms) acc[m] += c;
  Poly p;
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.emplace_back(m, std::move(c));
  }
  return p;
}

Poly Poly::from_linear(const LinearAtom& a) {
  std::vector<Term> terms;
  for (const auto& [v, c] : a.coeffs()) terms.emplace_back(Monomial::of(v), c);
  terms.emplace_back(Monomial(), -a.rhs());
  return from_terms(std::move(terms));
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

Rat Poly::constant_value() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return 0;
}

std::uint32_t Poly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree(v));
  return d;
}

std::uint32_t Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.total_degree(); }

bool Poly::mentions(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.first.degree(v) > 0; });
}

std::vector<Var> Poly::vars() const {
  std::vector<Var> out;
  for (const auto& t : terms_) {
    for (const auto& p : t.first.powers()) out.push_back(p.first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Poly Poly::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = m.degree(v);
    if (e == 0) continue;
    std::vector<Monomial::Power> powers;
    for (const auto& p : m.powers()) {
      if (p.first == v) {
        if (e > 1) powers.emplace_back(v, e - 1);
      } else {
        powers.push_back(p);
      }
    }
    out.emplace_back(Monomial(std::move(powers)), c * e);
  }
  return from_terms(std::move(out));
}

Poly Poly::substitute(Var v, const Rat& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = m.degree(v);
    if (e == 0) {
      out.emplace_back(m, c);
      continue;
    }
    Rat factor = 1;
    for (std::uint32_t i = 0; i < e; ++i) factor *= value;
    out.emplace_back(m.without(v), c * factor);
  }
  return from_terms(std::move(out));
}

Rat Poly::evaluate(const Assignment& point) const {
  Rat sum = 0;
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (const auto& [v, e] : m.powers()) {
      auto it = point.find(v);
      if (it == point.end()) throw MissingAssignment("no value for variable #" + std::to_string(v.index));
      for (std::uint32_t i = 0; i < e; ++i) term *= it->second;
    }
    sum += term;
  }
  return sum;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {

std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, int sign) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    int cmp = ia == a.end() ? -1 : ib == b.end() ? 1 : grlex_compare(ia->first, ib->first);
    if (cmp > 0) {
      out.push_back(*ia++);
    } else if (cmp < 0) {
      out.emplace_back(ib->first, sign > 0 ? ib->second : Rat(-ib->second));
      ++ib;
    } else {
      Rat c = sign > 0 ? Rat(ia->second + ib->second) : Rat(ia->second - ib->second);
      if (c != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) return b * a.terms_[0].second;
  if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) return a * b.terms_[0].second;
  std::map<Monomial, Rat, GrlexGreater> acc;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  }
  Poly p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.emplace_back(m, std::move(c));
  }
  return p;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second) return false;
  }
  return true;
}

bool operator<(const Poly& a, const Poly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int cmp = grlex_compare(a.terms_[i].first, b.terms_[i].first);
    if (cmp != 0) return cmp < 0;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].second != b.terms_[i].second) return a.terms_[i].second < b.terms_[i].second;
  }
  return false;
}

Poly pow(const Poly& base, std::uint32_t exponent) {
  Poly result(Rat(1));
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

Rat rational_content(const Poly& p) {
  if (p.is_zero()) return 1;
  Int num_gcd = 0;
  Int den_lcm = 1;
  for (const auto& t : p.terms()) {
    num_gcd = gcd(num_gcd, Int(t.second.get_num()));
    den_lcm = lcm(den_lcm, t.second.get_den());
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

}  // namespace tdqe
