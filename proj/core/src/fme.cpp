#include "tdqe/fme.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "tdqe/error.hpp"
#include "tdqe/graph.hpp"

namespace tdqe {

std::string to_string(CountPolicy p) { return p == CountPolicy::Canonical ? "canonical" : "raw"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Open: return "open";
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::CapExceeded: return "cap-exceeded";
  }
  return "unknown";
}

// ----------------------------------------------------------- ConstraintSet

ConstraintSet::ConstraintSet(const std::vector<LinearAtom>& atoms, CountPolicy policy) : policy_(policy) {
  insert(atoms);
}

ConstraintSet ConstraintSet::falsum(CountPolicy policy) {
  ConstraintSet c(policy);
  if (policy == CountPolicy::Canonical) {
    c.set_false();
  } else {
    c.atoms_.push_back(LinearAtom({}, Rat(-1), Relation::LE));
  }
  return c;
}

bool ConstraintSet::is_false() const {
  if (policy_ == CountPolicy::Canonical) return falsum_;
  return std::any_of(atoms_.begin(), atoms_.end(), [](const LinearAtom& a) {
    return a.is_constant() && constant_verdict(a) == ConstVerdict::TriviallyFalse;
  });
}

void ConstraintSet::set_false() {
  falsum_ = true;
  atoms_.clear();
}

void ConstraintSet::insert(const std::vector<LinearAtom>& atoms) {
  std::vector<LinearAtom> norm;
  norm.reserve(atoms.size());
  if (policy_ == CountPolicy::Raw) {
    for (const auto& a : atoms) norm.push_back(canonical_or_constant(a));
  } else {
    if (falsum_) return;
    for (const auto& a : atoms) {
      auto n = normalize_atom(a);
      if (auto* verdict = std::get_if<ConstVerdict>(&n)) {
        if (*verdict == ConstVerdict::TriviallyFalse) {
          set_false();
          return;
        }
        continue;
      }
      norm.push_back(std::move(std::get<LinearAtom>(n)));
    }
  }
  add_normalized(std::move(norm));
}

void ConstraintSet::add_normalized(std::vector<LinearAtom> atoms) {
  if (policy_ == CountPolicy::Raw) {
    if (atoms_.empty()) {
      atoms_ = std::move(atoms);
    } else {
      atoms_.insert(atoms_.end(), std::make_move_iterator(atoms.begin()), std::make_move_iterator(atoms.end()));
    }
    return;
  }
  if (falsum_) return;
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  if (atoms_.empty()) {
    atoms_ = std::move(atoms);
    return;
  }
  std::vector<LinearAtom> merged;
  merged.reserve(atoms_.size() + atoms.size());
  std::merge(std::make_move_iterator(atoms_.begin()), std::make_move_iterator(atoms_.end()),
             std::make_move_iterator(atoms.begin()), std::make_move_iterator(atoms.end()), std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  atoms_ = std::move(merged);
}

void ConstraintSet::merge(const ConstraintSet& other) {
  if (policy_ == CountPolicy::Canonical && other.policy_ == CountPolicy::Canonical && other.falsum_) {
    set_false();
    return;
  }
  if (other.policy_ == policy_) {
    add_normalized(other.atoms_);
  } else {
    insert(other.atoms_);
  }
}

std::vector<Var> ConstraintSet::vars() const {
  std::set<Var> vs;
  for (const auto& a : atoms_) {
    for (const auto& t : a.coeffs()) vs.insert(t.first);
  }
  return {vs.begin(), vs.end()};
}

bool operator==(const ConstraintSet& a, const ConstraintSet& b) {
  if (a.policy_ != b.policy_ || a.falsum_ != b.falsum_) return false;
  if (a.policy_ == CountPolicy::Canonical) return a.atoms_ == b.atoms_;
  auto x = a.atoms_;
  auto y = b.atoms_;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

// ------------------------------------------------------------------- steps

namespace {

struct Split {
  std::vector<const LinearAtom*> eqs;
  std::vector<const LinearAtom*> lower;
  std::vector<const LinearAtom*> upper;
  std::vector<const LinearAtom*> rest;
};

Split split(const ConstraintSet& c, Var x) {
  Split s;
  for (const auto& a : c.atoms()) {
    int sign = sgn(a.coeff(x));
    if (sign == 0) {
      s.rest.push_back(&a);
    } else if (a.rel() == Relation::EQ) {
      s.eqs.push_back(&a);
    } else if (sign > 0) {
      s.upper.push_back(&a);
    } else {
      s.lower.push_back(&a);
    }
  }
  return s;
}

std::size_t raw_count(const ConstraintSet& c, const Split& s) {
  if (!s.eqs.empty()) return c.size() - 1;
  return s.rest.size() + s.lower.size() * s.upper.size();
}

Bound make_bound(const LinearAtom& a, Var x) {
  Rat ax = a.coeff(x);
  Bound b;
  for (const auto& [v, c] : a.coeffs()) {
    if (v != x) b.coeffs.emplace_back(v, Rat(-c / ax));
  }
  b.constant = a.rhs() / ax;
  b.strict = is_strict(a.rel());
  b.atom = a;
  return b;
}

std::optional<ConstraintSet> step_impl(const ConstraintSet& c, Var x, std::optional<std::size_t> cap) {
  if (c.policy() == CountPolicy::Canonical && c.is_false()) return c;
  Split s = split(c, x);
  if (cap && raw_count(c, s) > *cap) return std::nullopt;

  std::vector<LinearAtom> rest;
  rest.reserve(s.rest.size());
  for (const auto* a : s.rest) rest.push_back(*a);
  std::vector<LinearAtom> fresh;

  if (!s.eqs.empty()) {
    const LinearAtom* pivot = *std::min_element(s.eqs.begin(), s.eqs.end(), [](const auto* a, const auto* b) {
      if (a->num_vars() != b->num_vars()) return a->num_vars() < b->num_vars();
      return *a < *b;
    });
    Rat px = pivot->coeff(x);
    for (const auto& a : c.atoms()) {
      if (&a == pivot) continue;
      Rat ax = a.coeff(x);
      if (ax == 0) continue;
      fresh.push_back(combine(a, Rat(-ax / px), *pivot, a.rel()));
    }
  } else {
    fresh.reserve(s.lower.size() * s.upper.size());
    for (const auto* u : s.upper) {
      Rat au = u->coeff(x);
      bool su = is_strict(u->rel());
      for (const auto* l : s.lower) {
        Rat factor = au / -l->coeff(x);
        Relation rel = su || is_strict(l->rel()) ? Relation::LT : Relation::LE;
        fresh.push_back(combine(*u, factor, *l, rel));
      }
    }
  }

  ConstraintSet out(c.policy());
  out.add_normalized(std::move(rest));
  out.insert(fresh);
  return out;
}

}  // namespace

BoundSplit bounds(const ConstraintSet& c, Var x) {
  Split s = split(c, x);
  BoundSplit out;
  for (const auto* a : s.lower) out.lower.push_back(make_bound(*a, x));
  for (const auto* a : s.upper) out.upper.push_back(make_bound(*a, x));
  for (const auto* a : s.eqs) out.eqs.push_back(*a);
  for (const auto* a : s.rest) out.rest.push_back(*a);
  return out;
}

std::size_t fme_step_raw_count(const ConstraintSet& c, Var x) { return raw_count(c, split(c, x)); }

ConstraintSet fme_step(const ConstraintSet& c, Var x) { return *step_impl(c, x, std::nullopt); }

std::optional<ConstraintSet> fme_step_capped(const ConstraintSet& c, Var x, std::size_t cap) {
  return step_impl(c, x, cap);
}

// -------------------------------------------------------------- elimination

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Verdict verdict_of(const ConstraintSet& c) {
  if (c.is_false()) return Verdict::False;
  return c.empty() ? Verdict::True : Verdict::Open;
}

}  // namespace

FmeResult fme_order(const ConstraintSet& c, const std::vector<Var>& order, const FmeOptions& options) {
  auto start = Clock::now();
  FmeResult r{c, {}};
  r.trace.initial = r.trace.peak = c.size();
  if (c.is_false()) r.trace.false_step = 0;
  bool capped = false;
  for (Var x : order) {
    auto next = step_impl(r.set, x, options.atom_cap);
    if (!next) {
      capped = true;
      break;
    }
    r.set = std::move(*next);
    r.trace.order.push_back(x);
    r.trace.per_step_counts.push_back(r.set.size());
    r.trace.peak = std::max(r.trace.peak, r.set.size());
    if (!r.trace.false_step && r.set.is_false()) r.trace.false_step = r.trace.order.size();
  }
  r.trace.final_count = r.set.size();
  r.trace.verdict = capped ? Verdict::CapExceeded : verdict_of(r.set);
  r.trace.elapsed_ms = ms_since(start);
  return r;
}

FmeResult fme_dp(const QuantFormula& f, const NiceTreeDecomp& t, const FmeOptions& options, const ChildOrder& children) {
  auto start = Clock::now();
  Graph g = build_primal(f);
  if (auto violation = validate_nice(g, t)) {
    throw InvalidDecomposition(to_string(violation->condition) + ": " + violation->detail);
  }
  const CountPolicy policy = options.policy;
  std::vector<LinearAtom> atoms = f.linear_atoms();
  std::vector<BagId> bfs = bfs_order(t, children);

  std::vector<std::vector<LinearAtom>> initial(t.size());
  std::vector<LinearAtom> passthrough;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    std::vector<Var> q;
    for (Var v : f.atom_vars(i)) {
      if (f.is_quantified(v)) q.push_back(v);
    }
    if (q.empty()) {
      passthrough.push_back(atoms[i]);
      continue;
    }
    auto home = std::find_if(bfs.begin(), bfs.end(), [&](BagId b) {
      const auto& bag = t.nodes[b].bag;
      return std::includes(bag.begin(), bag.end(), q.begin(), q.end());
    });
    if (home == bfs.end()) throw InvalidDecomposition("no bag holds all variables of an atom");
    initial[*home].push_back(atoms[i]);
  }

  FmeResult r{ConstraintSet(policy), {}};
  r.trace.initial = ConstraintSet(atoms, policy).size();
  r.trace.peak = r.trace.initial;
  std::vector<std::optional<ConstraintSet>> value(t.size());
  bool capped = false;
  for (auto it = bfs.rbegin(); it != bfs.rend() && !capped; ++it) {
    BagId b = *it;
    const NiceNode& node = t.nodes[b];
    ConstraintSet v(initial[b], policy);
    switch (node.kind) {
      case NodeKind::Leaf:
        break;
      case NodeKind::Introduce:
      case NodeKind::Join:
        for (BagId c : node.children) {
          v.merge(*value[c]);
          value[c].reset();
        }
        break;
      case NodeKind::Forget: {
        BagId c = node.children.front();
        auto stepped = step_impl(*value[c], *node.var, options.atom_cap);
        value[c].reset();
        if (!stepped) {
          capped = true;
          break;
        }
        r.trace.order.push_back(*node.var);
        r.trace.per_step_counts.push_back(stepped->size());
        v.merge(*stepped);
        if (!r.trace.false_step && v.is_false()) r.trace.false_step = r.trace.order.size();
        break;
      }
    }
    r.trace.peak = std::max(r.trace.peak, v.size());
    value[b] = std::move(v);
  }
  if (!capped) {
    r.set = std::move(*value[t.root]);
    r.set.insert(passthrough);
  }
  r.trace.final_count = r.set.size();
  r.trace.peak = std::max(r.trace.peak, r.trace.final_count);
  r.trace.verdict = capped ? Verdict::CapExceeded : verdict_of(r.set);
  r.trace.elapsed_ms = ms_since(start);
  return r;
}

}  // namespace tdqe
