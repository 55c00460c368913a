#include "tdqe/cad.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "tdqe/error.hpp"
#include "tdqe/graph.hpp"
#include "tdqe/polyalg.hpp"

namespace tdqe {

// ----------------------------------------------------------------- PolySet

PolySet::PolySet(const std::vector<Poly>& polys) {
  for (const auto& p : polys) {
    if (!p.is_constant()) polys_.push_back(canonical(p));
  }
  std::sort(polys_.begin(), polys_.end());
  polys_.erase(std::unique(polys_.begin(), polys_.end()), polys_.end());
}

void PolySet::insert(const Poly& p) {
  if (p.is_constant()) return;
  Poly c = canonical(p);
  auto it = std::lower_bound(polys_.begin(), polys_.end(), c);
  if (it == polys_.end() || !(*it == c)) polys_.insert(it, std::move(c));
}

void PolySet::merge(const PolySet& other) {
  std::vector<Poly> merged;
  merged.reserve(polys_.size() + other.polys_.size());
  std::merge(polys_.begin(), polys_.end(), other.polys_.begin(), other.polys_.end(), std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  polys_ = std::move(merged);
}

bool PolySet::contains(const Poly& p) const {
  Poly c = canonical(p);
  return std::binary_search(polys_.begin(), polys_.end(), c);
}

std::vector<Var> PolySet::vars() const {
  std::set<Var> vs;
  for (const auto& p : polys_) {
    for (Var v : p.vars()) vs.insert(v);
  }
  return {vs.begin(), vs.end()};
}

// ----------------------------------------------------------------- degrees

std::map<Var, std::size_t> product_degrees(const std::vector<Poly>& polys) {
  std::map<Var, std::size_t> deg;
  for (const auto& p : polys) {
    for (Var v : p.vars()) deg[v] += p.degree(v);
  }
  return deg;
}

std::size_t combined_degree(const std::vector<Poly>& polys) {
  if (polys.empty()) throw ValidationError("combined degree of an empty polynomial set");
  std::size_t d = 0;
  for (const auto& [v, k] : product_degrees(polys)) d = std::max(d, k);
  return d;
}

std::size_t combined_degree(const PolySet& p) { return combined_degree(p.polys()); }

// -------------------------------------------------------------- projection

PolySet mccallum_proj(const PolySet& p, Var x) {
  PolySet out;
  std::vector<Poly> primitives;
  for (const auto& f : p.polys()) {
    if (!f.mentions(x)) {
      out.insert(f);
      continue;
    }
    auto cp = content_primitive(f, x);
    out.insert(cp.content);
    primitives.push_back(std::move(cp.primitive));
  }
  std::vector<Poly> basis = squarefree_basis(primitives, x);
  for (const auto& b : basis) {
    for (const auto& c : coeffs(b, x)) out.insert(c);
    if (deg(b, x) >= 2) out.insert(discriminant(b, x));
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) out.insert(resultant(basis[i], basis[j], x));
  }
  return out;
}

std::vector<PolySet> projection_sequence(const PolySet& p, const std::vector<Var>& order) {
  std::vector<PolySet> seq{p};
  for (Var x : order) seq.push_back(mccallum_proj(seq.back(), x));
  return seq;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::size_t combined_or_zero(const PolySet& p) { return p.empty() ? 0 : combined_degree(p); }

void finish(CadResult& r, Clock::time_point start) {
  r.trace.final_count = r.set.size();
  r.trace.peak = std::max(r.trace.peak, r.trace.final_count);
  for (const auto& f : r.set.polys()) {
    for (Var v : f.vars()) r.trace.final_degrees[v] = std::max<std::size_t>(r.trace.final_degrees[v], f.degree(v));
  }
  r.trace.elapsed_ms = ms_since(start);
}

}  // namespace

PolySet poly_set_of(const QuantFormula& f) {
  std::vector<Poly> polys;
  for (const auto& a : f.poly_atoms()) polys.push_back(a.poly);
  return PolySet(polys);
}

CadResult project_order(const PolySet& p, const std::vector<Var>& order) {
  auto start = Clock::now();
  CadResult r{p, {}};
  r.trace.initial = r.trace.peak = p.size();
  r.trace.max_combined_degree = combined_or_zero(p);
  for (Var x : order) {
    r.set = mccallum_proj(r.set, x);
    std::size_t cd = combined_or_zero(r.set);
    r.trace.order.push_back(x);
    r.trace.per_step_counts.push_back(r.set.size());
    r.trace.per_step_combined_degree.push_back(cd);
    r.trace.peak = std::max(r.trace.peak, r.set.size());
    r.trace.max_combined_degree = std::max(r.trace.max_combined_degree, cd);
  }
  finish(r, start);
  return r;
}

CadResult cad_dp(const QuantFormula& f, const NiceTreeDecomp& t, const ChildOrder& children) {
  auto start = Clock::now();
  Graph g = build_primal(f);
  if (auto violation = validate_nice(g, t)) {
    throw InvalidDecomposition(to_string(violation->condition) + ": " + violation->detail);
  }
  std::vector<PolyAtom> atoms = f.poly_atoms();
  std::vector<BagId> bfs = bfs_order(t, children);

  std::vector<std::vector<Poly>> initial(t.size());
  std::vector<Poly> passthrough;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    std::vector<Var> q;
    for (Var v : f.atom_vars(i)) {
      if (f.is_quantified(v)) q.push_back(v);
    }
    if (q.empty()) {
      passthrough.push_back(atoms[i].poly);
      continue;
    }
    auto home = std::find_if(bfs.begin(), bfs.end(), [&](BagId b) {
      const auto& bag = t.nodes[b].bag;
      return std::includes(bag.begin(), bag.end(), q.begin(), q.end());
    });
    if (home == bfs.end()) throw InvalidDecomposition("no bag holds all variables of an atom");
    initial[*home].push_back(atoms[i].poly);
  }

  CadResult r;
  PolySet all = poly_set_of(f);
  r.trace.initial = r.trace.peak = all.size();
  r.trace.max_combined_degree = combined_or_zero(all);
  std::vector<std::optional<PolySet>> value(t.size());
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
    BagId b = *it;
    const NiceNode& node = t.nodes[b];
    PolySet v(initial[b]);
    if (node.kind == NodeKind::Forget) {
      BagId c = node.children.front();
      PolySet projected = mccallum_proj(*value[c], *node.var);
      value[c].reset();
      std::size_t cd = combined_or_zero(projected);
      r.trace.order.push_back(*node.var);
      r.trace.per_step_counts.push_back(projected.size());
      r.trace.per_step_combined_degree.push_back(cd);
      r.trace.max_combined_degree = std::max(r.trace.max_combined_degree, cd);
      v.merge(projected);
    } else {
      for (BagId c : node.children) {
        v.merge(*value[c]);
        value[c].reset();
      }
    }
    r.trace.peak = std::max(r.trace.peak, v.size());
    value[b] = std::move(v);
  }
  r.set = std::move(*value[t.root]);
  r.set.merge(PolySet(passthrough));
  finish(r, start);
  return r;
}

// ------------------------------------------------------------- (m,d) search

namespace {

struct DegreeTable {
  std::vector<Var> vars;
  // degrees[i][k]: degree of polynomial i in vars[k].
  std::vector<std::vector<std::size_t>> degrees;
};

DegreeTable degree_table(const std::vector<Poly>& polys) {
  DegreeTable t;
  std::set<Var> vs;
  for (const auto& p : polys) {
    for (Var v : p.vars()) vs.insert(v);
  }
  t.vars.assign(vs.begin(), vs.end());
  for (const auto& p : polys) {
    std::vector<std::size_t> row;
    for (Var v : t.vars) row.push_back(p.degree(v));
    t.degrees.push_back(std::move(row));
  }
  return t;
}

std::size_t vec_max(const std::vector<std::size_t>& v) { return v.empty() ? 0 : *std::max_element(v.begin(), v.end()); }

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const DegreeTable& table, std::size_t max_groups, std::optional<std::size_t> bound)
      : table_(table), max_groups_(max_groups) {
    best_d_ = bound ? *bound + 1 : std::numeric_limits<std::size_t>::max();
    order_.resize(table.degrees.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return vec_max(table.degrees[a]) > vec_max(table.degrees[b]);
    });
    assign_.assign(order_.size(), 0);
  }

  std::optional<std::vector<std::size_t>> run() {
    std::vector<std::vector<std::size_t>> load;
    recurse(0, load, 0);
    return best_;
  }

 private:
  void recurse(std::size_t i, std::vector<std::vector<std::size_t>>& load, std::size_t current) {
    if (current >= best_d_) return;
    if (i == order_.size()) {
      best_d_ = current;
      best_ = assign_;
      return;
    }
    const auto& row = table_.degrees[order_[i]];
    std::size_t groups = load.size();
    for (std::size_t g = 0; g <= groups && g < max_groups_; ++g) {
      if (g == groups) load.emplace_back(row.size(), 0);
      std::size_t worst = current;
      for (std::size_t k = 0; k < row.size(); ++k) {
        load[g][k] += row[k];
        worst = std::max(worst, load[g][k]);
      }
      assign_[order_[i]] = g;
      recurse(i + 1, load, worst);
      for (std::size_t k = 0; k < row.size(); ++k) load[g][k] -= row[k];
      if (g == groups) load.pop_back();
    }
  }

  const DegreeTable& table_;
  std::size_t max_groups_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> assign_;
  std::size_t best_d_;
  std::optional<std::vector<std::size_t>> best_;
};

std::vector<std::size_t> heuristic_partition(const DegreeTable& table, std::size_t max_groups) {
  std::size_t n = table.degrees.size();
  std::size_t width = table.vars.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    std::size_t ma = vec_max(table.degrees[a]);
    std::size_t mb = vec_max(table.degrees[b]);
    if (ma != mb) return ma > mb;
    return std::accumulate(table.degrees[a].begin(), table.degrees[a].end(), std::size_t{0}) >
           std::accumulate(table.degrees[b].begin(), table.degrees[b].end(), std::size_t{0});
  });
  std::vector<std::vector<std::size_t>> load(max_groups, std::vector<std::size_t>(width, 0));
  std::vector<std::size_t> assign(n, 0);
  for (std::size_t i : order) {
    std::size_t best_g = 0;
    std::pair<std::size_t, std::size_t> best_key{std::numeric_limits<std::size_t>::max(), 0};
    for (std::size_t g = 0; g < max_groups; ++g) {
      std::size_t peak = 0;
      std::size_t sum = 0;
      for (std::size_t k = 0; k < width; ++k) {
        peak = std::max(peak, load[g][k] + table.degrees[i][k]);
        sum += load[g][k];
      }
      std::pair<std::size_t, std::size_t> key{peak, sum};
      if (key < best_key) {
        best_key = key;
        best_g = g;
      }
    }
    assign[i] = best_g;
    for (std::size_t k = 0; k < width; ++k) load[best_g][k] += table.degrees[i][k];
  }

  // Objective: (largest group peak, sum of group peaks).
  auto objective = [&]() {
    std::size_t worst = 0;
    std::size_t total = 0;
    for (const auto& l : load) {
      worst = std::max(worst, vec_max(l));
      total += vec_max(l);
    }
    return std::make_pair(worst, total);
  };
  bool improved = true;
  while (improved) {
    improved = false;
    auto current = objective();
    for (std::size_t i = 0; i < n && !improved; ++i) {
      std::size_t from = assign[i];
      for (std::size_t g = 0; g < max_groups && !improved; ++g) {
        if (g == from) continue;
        for (std::size_t k = 0; k < width; ++k) {
          load[from][k] -= table.degrees[i][k];
          load[g][k] += table.degrees[i][k];
        }
        if (objective() < current) {
          assign[i] = g;
          improved = true;
        } else {
          for (std::size_t k = 0; k < width; ++k) {
            load[from][k] += table.degrees[i][k];
            load[g][k] -= table.degrees[i][k];
          }
        }
      }
    }
  }
  return assign;
}

}  // namespace

std::optional<MdCertificate> md_certificate(const PolySet& p, std::size_t max_groups, std::optional<std::size_t> d_bound) {
  if (max_groups == 0) throw ConfigError("md_certificate needs at least one group");
  MdCertificate cert;
  if (p.empty()) {
    cert.exhaustive = true;
    return cert;
  }
  const auto& polys = p.polys();
  DegreeTable table = degree_table(polys);
  std::vector<std::size_t> assign;
  if (polys.size() <= 15) {
    auto found = ExhaustiveSearch(table, max_groups, d_bound).run();
    if (!found) return std::nullopt;
    assign = std::move(*found);
    cert.exhaustive = true;
  } else {
    assign = heuristic_partition(table, max_groups);
  }
  std::vector<std::vector<Poly>> groups(max_groups);
  for (std::size_t i = 0; i < polys.size(); ++i) groups[assign[i]].push_back(polys[i]);
  for (auto& g : groups) {
    if (g.empty()) continue;
    cert.d = std::max(cert.d, combined_degree(g));
    cert.groups.push_back(std::move(g));
  }
  cert.m = cert.groups.size();
  return cert;
}

}  // namespace tdqe
