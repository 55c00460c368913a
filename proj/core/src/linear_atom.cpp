#include "tdqe/linear_atom.hpp"

#include <algorithm>
#include <string>

#include "tdqe/error.hpp"

namespace tdqe {

Relation negated(Relation rel) {
  switch (rel) {
    case Relation::LT: return Relation::GT;
    case Relation::GT: return Relation::LT;
    case Relation::LE: return Relation::GE;
    case Relation::GE: return Relation::LE;
    case Relation::EQ: return Relation::EQ;
  }
  return rel;
}

bool is_strict(Relation rel) { return rel == Relation::LT || rel == Relation::GT; }

bool holds(Relation rel, const Rat& value) {
  int s = sgn(value);
  switch (rel) {
    case Relation::LT: return s < 0;
    case Relation::GT: return s > 0;
    case Relation::EQ: return s == 0;
    case Relation::LE: return s <= 0;
    case Relation::GE: return s >= 0;
  }
  return false;
}

std::string_view symbol(Relation rel) {
  switch (rel) {
    case Relation::LT: return "<";
    case Relation::GT: return ">";
    case Relation::EQ: return "=";
    case Relation::LE: return "<=";
    case Relation::GE: return ">=";
  }
  return "?";
}

LinearAtom::LinearAtom(std::vector<Term> coeffs, Rat rhs, Relation rel) : rhs_(std::move(rhs)), rel_(rel) {
  std::sort(coeffs.begin(), coeffs.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : coeffs) {
    if (!coeffs_.empty() && coeffs_.back().first == t.first) {
      coeffs_.back().second += t.second;
    } else {
      coeffs_.push_back(std::move(t));
    }
  }
  std::erase_if(coeffs_, [](const Term& t) { return t.second == 0; });
}

Rat LinearAtom::coeff(Var v) const {
  auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), v,
                             [](const Term& t, Var x) { return t.first < x; });
  if (it != coeffs_.end() && it->first == v) return it->second;
  return 0;
}

bool LinearAtom::mentions(Var v) const {
  auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), v,
                             [](const Term& t, Var x) { return t.first < x; });
  return it != coeffs_.end() && it->first == v;
}

bool operator==(const LinearAtom& a, const LinearAtom& b) {
  return a.rel_ == b.rel_ && a.rhs_ == b.rhs_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const LinearAtom& a, const LinearAtom& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].first != b.coeffs_[i].first) return a.coeffs_[i].first < b.coeffs_[i].first;
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].second != b.coeffs_[i].second) return a.coeffs_[i].second < b.coeffs_[i].second;
  }
  if (a.rhs_ != b.rhs_) return a.rhs_ < b.rhs_;
  return a.rel_ < b.rel_;
}

LinearAtom canonical_or_constant(const LinearAtom& a) {
  std::vector<LinearAtom::Term> coeffs = a.coeffs();
  Rat rhs = a.rhs();
  Relation rel = a.rel();
  if (rel == Relation::GT || rel == Relation::GE) {
    for (auto& t : coeffs) t.second = -t.second;
    rhs = -rhs;
    rel = negated(rel);
  }
  if (coeffs.empty()) return LinearAtom({}, rhs, rel);

  Int den_lcm = 1;
  for (const auto& t : coeffs) den_lcm = lcm(den_lcm, t.second.get_den());
  Int num_gcd = 0;
  for (const auto& t : coeffs) num_gcd = gcd(num_gcd, Int(t.second.get_num() * (den_lcm / t.second.get_den())));
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (rel == Relation::EQ && coeffs.front().second < 0) scale = -scale;
  for (auto& t : coeffs) t.second *= scale;
  rhs *= scale;
  return LinearAtom(std::move(coeffs), std::move(rhs), rel);
}

ConstVerdict constant_verdict(const LinearAtom& a) {
  // 0 rel rhs  <=>  -rhs rel 0
  return holds(a.rel(), Rat(-a.rhs())) ? ConstVerdict::TriviallyTrue : ConstVerdict::TriviallyFalse;
}

NormalizedAtom normalize_atom(const LinearAtom& a) {
  if (a.is_constant()) return constant_verdict(a);
  return canonical_or_constant(a);
}

bool eval_atom(const LinearAtom& a, const Assignment& point) {
  Rat lhs = 0;
  for (const auto& [v, c] : a.coeffs()) {
    auto it = point.find(v);
    if (it == point.end()) throw MissingAssignment("no value for variable #" + std::to_string(v.index));
    lhs += c * it->second;
  }
  return holds(a.rel(), Rat(lhs - a.rhs()));
}

std::vector<Var> atom_vars(const LinearAtom& a) {
  std::vector<Var> out;
  out.reserve(a.coeffs().size());
  for (const auto& t : a.coeffs()) out.push_back(t.first);
  return out;
}

LinearAtom combine(const LinearAtom& a, const Rat& factor, const LinearAtom& b, Relation rel) {
  std::vector<LinearAtom::Term> out;
  out.reserve(a.coeffs().size() + b.coeffs().size());
  auto ia = a.coeffs().begin();
  auto ib = b.coeffs().begin();
  while (ia != a.coeffs().end() || ib != b.coeffs().end()) {
    if (ib == b.coeffs().end() || (ia != a.coeffs().end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.coeffs().end() || ib->first < ia->first) {
      out.emplace_back(ib->first, factor * ib->second);
      ++ib;
    } else {
      Rat c = ia->second + factor * ib->second;
      if (c != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return LinearAtom(std::move(out), a.rhs() + factor * b.rhs(), rel);
}

}  // namespace tdqe
