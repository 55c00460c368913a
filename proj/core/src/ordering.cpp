#include "tdqe/ordering.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "tdqe/error.hpp"

namespace tdqe {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::FromTD: return "td";
    case Provenance::Greedy: return "greedy";
    case Provenance::Random: return "random";
    case Provenance::Brown: return "brown";
    case Provenance::Natural: return "natural";
  }
  return "unknown";
}

namespace {

void append_new(std::vector<Var>& out, const std::vector<Var>& bag, const std::vector<Var>* parent) {
  for (Var v : bag) {
    if (!parent || !std::binary_search(parent->begin(), parent->end(), v)) out.push_back(v);
  }
}

}  // namespace

ElimOrder order_from_td(const NiceTreeDecomp& t, const ChildOrder& children) {
  ElimOrder o;
  o.provenance = Provenance::FromTD;
  for (BagId b : bfs_order(t, children)) {
    const auto& node = t.nodes[b];
    append_new(o.vars, node.bag, node.parent ? &t.nodes[*node.parent].bag : nullptr);
  }
  std::reverse(o.vars.begin(), o.vars.end());
  return o;
}

ElimOrder order_from_td(const TreeDecomp& t) {
  ElimOrder o;
  o.provenance = Provenance::FromTD;
  RootedTree rt = root_tree(t.size(), t.edges, t.root);
  if (t.size() == 0) return o;
  std::vector<BagId> queue{t.root};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    BagId b = queue[i];
    append_new(o.vars, t.bags[b], rt.parent[b] ? &t.bags[*rt.parent[b]] : nullptr);
    std::vector<BagId> kids = rt.children[b];
    std::sort(kids.begin(), kids.end(), [&](BagId x, BagId y) {
      if (t.bags[x] != t.bags[y]) return t.bags[x] < t.bags[y];
      return x < y;
    });
    queue.insert(queue.end(), kids.begin(), kids.end());
  }
  std::reverse(o.vars.begin(), o.vars.end());
  return o;
}

bool is_peo(const Graph& g, const std::vector<Var>& order) {
  std::map<Var, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<Var> later;
    for (Var w : g.neighbors(order[i])) {
      auto it = pos.find(w);
      if (it != pos.end() && it->second > i) later.push_back(w);
    }
    for (std::size_t a = 0; a < later.size(); ++a) {
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        if (!g.has_edge(later[a], later[b])) return false;
      }
    }
  }
  return true;
}

std::map<Var, std::vector<Var>> td_precedence(const NiceTreeDecomp& t) {
  std::map<Var, std::vector<Var>> out;
  if (t.nodes.empty()) return out;
  // anchor[v]: first node containing v on a walk from the root, moved down
  // through forget nodes. The forget chains of nicify order the variables of
  // one bag arbitrarily; anchoring at the full bag removes that order.
  std::map<Var, BagId> anchor;
  std::vector<BagId> order = bfs_order(t);
  for (BagId b : order) {
    for (Var v : t.nodes[b].bag) {
      if (anchor.count(v)) continue;
      BagId a = b;
      while (t.nodes[a].kind == NodeKind::Forget) a = t.nodes[a].children.front();
      anchor.emplace(v, a);
    }
  }
  std::vector<std::vector<Var>> below(t.nodes.size());
  for (const auto& [v, b] : anchor) below[b].push_back(v);
  // Children come after their parent in BFS order, so a reverse sweep
  // accumulates whole subtrees.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& node = t.nodes[*it];
    if (node.parent) {
      auto& up = below[*node.parent];
      up.insert(up.end(), below[*it].begin(), below[*it].end());
    }
  }
  for (const auto& [v, b] : anchor) {
    auto& before = out[v];
    for (Var u : below[b]) {
      if (anchor[u] != b) before.push_back(u);
    }
    std::sort(before.begin(), before.end());
  }
  return out;
}

namespace {

GreedyResult greedy_impl(const ConstraintSet& c, const std::vector<Var>& vars, const FmeOptions& options,
                         const std::map<Var, std::vector<Var>>* precedence) {
  auto start = std::chrono::steady_clock::now();
  GreedyResult g;
  g.order.provenance = Provenance::Greedy;
  ConstraintSet current = c;
  if (current.policy() != options.policy) {
    current = ConstraintSet(options.policy);
    current.merge(c);
  }
  FmeTrace& trace = g.run.trace;
  trace.initial = trace.peak = current.size();
  if (current.is_false()) trace.false_step = 0;

  std::vector<Var> remaining = vars;
  std::sort(remaining.begin(), remaining.end());
  // Number of variables that still have to go before each variable, and the
  // reverse relation.
  std::map<Var, std::size_t> pending;
  std::map<Var, std::vector<Var>> unlocks;
  if (precedence) {
    for (Var v : remaining) {
      auto it = precedence->find(v);
      if (it == precedence->end()) continue;
      for (Var u : it->second) {
        if (!std::binary_search(remaining.begin(), remaining.end(), u)) continue;
        ++pending[v];
        unlocks[u].push_back(v);
      }
    }
  }
  bool capped = false;
  while (!remaining.empty()) {
    std::optional<std::size_t> best_index;
    std::optional<ConstraintSet> best_set;
    std::size_t best_count = 0;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      Var x = remaining[i];
      if (pending[x] > 0) continue;
      if (options.policy == CountPolicy::Raw) {
        std::size_t count = fme_step_raw_count(current, x);
        if (!best_index || count < best_count) {
          best_count = count;
          best_index = i;
        }
        continue;
      }
      std::optional<ConstraintSet> next =
          options.atom_cap ? fme_step_capped(current, x, *options.atom_cap) : std::optional<ConstraintSet>(fme_step(current, x));
      if (!next) continue;
      if (!best_set || next->size() < best_count) {
        best_count = next->size();
        best_index = i;
        best_set = std::move(next);
      }
    }
    if (!best_index) {
      // Every available candidate hit the cap.
      capped = true;
      break;
    }
    Var chosen = remaining[*best_index];
    if (options.policy == CountPolicy::Raw) {
      if (options.atom_cap && best_count > *options.atom_cap) {
        capped = true;
        break;
      }
      best_set = fme_step(current, chosen);
    } else if (!best_set) {
      capped = true;
      break;
    }
    current = std::move(*best_set);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(*best_index));
    for (Var v : unlocks[chosen]) --pending[v];
    g.order.vars.push_back(chosen);
    trace.order.push_back(chosen);
    trace.per_step_counts.push_back(current.size());
    trace.peak = std::max(trace.peak, current.size());
    if (!trace.false_step && current.is_false()) trace.false_step = trace.order.size();
  }
  // When capped, the order is completed with the untried variables so that
  // it remains a permutation.
  g.order.vars.insert(g.order.vars.end(), remaining.begin(), remaining.end());
  trace.final_count = current.size();
  if (capped) {
    trace.verdict = Verdict::CapExceeded;
  } else if (current.is_false()) {
    trace.verdict = Verdict::False;
  } else {
    trace.verdict = current.empty() ? Verdict::True : Verdict::Open;
  }
  g.run.set = std::move(current);
  trace.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return g;
}

}  // namespace

GreedyResult greedy_eliminate(const ConstraintSet& c, const std::vector<Var>& vars, const FmeOptions& options) {
  return greedy_impl(c, vars, options, nullptr);
}

GreedyResult td_greedy_eliminate(const ConstraintSet& c, const std::vector<Var>& vars, const NiceTreeDecomp& t,
                                 const FmeOptions& options) {
  auto precedence = td_precedence(t);
  GreedyResult g = greedy_impl(c, vars, options, &precedence);
  g.order.provenance = Provenance::FromTD;
  return g;
}

ElimOrder greedy_order(const ConstraintSet& c, const std::vector<Var>& vars) {
  FmeOptions options;
  options.policy = c.policy();
  return greedy_eliminate(c, vars, options).order;
}

std::vector<ElimOrder> random_orders(const std::vector<Var>& vars, std::size_t n_trials, std::uint64_t seed) {
  if (n_trials == 0) throw ConfigError("random orders need at least one trial");
  std::mt19937_64 rng(seed);
  std::vector<ElimOrder> out;
  for (std::size_t trial = 0; trial < n_trials; ++trial) {
    ElimOrder o;
    o.vars = vars;
    std::sort(o.vars.begin(), o.vars.end());
    std::shuffle(o.vars.begin(), o.vars.end(), rng);
    o.provenance = Provenance::Random;
    o.seed = seed;
    o.trial = trial;
    out.push_back(std::move(o));
  }
  return out;
}

namespace {

using BrownKey = std::tuple<std::uint32_t, std::uint32_t, std::size_t, Var>;

std::vector<BrownKey> brown_keys(const PolySet& p, const std::vector<Var>& vars) {
  std::vector<BrownKey> keys;
  for (Var v : vars) {
    std::uint32_t max_deg = 0;
    std::uint32_t max_term_total = 0;
    std::size_t terms = 0;
    for (const auto& f : p.polys()) {
      max_deg = std::max(max_deg, f.degree(v));
      for (const auto& [m, c] : f.terms()) {
        if (m.degree(v) == 0) continue;
        ++terms;
        max_term_total = std::max(max_term_total, m.total_degree());
      }
    }
    keys.emplace_back(max_deg, max_term_total, terms, v);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

ElimOrder brown_order(const PolySet& p, const std::vector<Var>& vars) {
  auto keys = brown_keys(p, vars);
  ElimOrder o;
  o.provenance = Provenance::Brown;
  for (const auto& k : keys) o.vars.push_back(std::get<3>(k));
  return o;
}

ElimOrder td_brown_order(const PolySet& p, const std::vector<Var>& vars, const NiceTreeDecomp& t) {
  auto precedence = td_precedence(t);
  std::set<Var> done;
  std::vector<BrownKey> left = brown_keys(p, vars);
  ElimOrder o;
  o.provenance = Provenance::FromTD;
  while (!left.empty()) {
    auto ready = [&](const BrownKey& k) {
      auto it = precedence.find(std::get<3>(k));
      if (it == precedence.end()) return true;
      return std::all_of(it->second.begin(), it->second.end(), [&](Var u) {
        return done.count(u) != 0 || std::find(vars.begin(), vars.end(), u) == vars.end();
      });
    };
    auto it = std::find_if(left.begin(), left.end(), ready);
    if (it == left.end()) throw InvalidDecomposition("precedence of the decomposition is cyclic");
    o.vars.push_back(std::get<3>(*it));
    done.insert(std::get<3>(*it));
    left.erase(it);
  }
  return o;
}

}  // namespace tdqe
