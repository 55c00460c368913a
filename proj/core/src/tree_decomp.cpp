#include "tdqe/tree_decomp.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "tdqe/error.hpp"

namespace tdqe {

namespace {

std::string var_label(Var v) { return "#" + std::to_string(v.index + 1); }

bool contains(const std::vector<Var>& bag, Var v) { return std::binary_search(bag.begin(), bag.end(), v); }

}  // namespace

std::string to_string(TdCondition c) {
  switch (c) {
    case TdCondition::Tree: return "tree";
    case TdCondition::VertexCover: return "vertex-cover";
    case TdCondition::EdgeCover: return "edge-cover";
    case TdCondition::Connectivity: return "connectivity";
    case TdCondition::NiceShape: return "nice-shape";
  }
  return "unknown";
}

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Introduce: return "introduce";
    case NodeKind::Forget: return "forget";
    case NodeKind::Join: return "join";
  }
  return "unknown";
}

RootedTree root_tree(std::size_t num_nodes, const std::vector<std::pair<BagId, BagId>>& edges, BagId root) {
  RootedTree rt;
  if (num_nodes == 0) return rt;
  if (root >= num_nodes) throw InvalidDecomposition("root " + std::to_string(root) + " is not a bag");
  if (edges.size() != num_nodes - 1) {
    throw InvalidDecomposition("a tree on " + std::to_string(num_nodes) + " bags needs " + std::to_string(num_nodes - 1) +
                               " edges, found " + std::to_string(edges.size()));
  }
  std::vector<std::vector<BagId>> adj(num_nodes);
  for (const auto& [a, b] : edges) {
    if (a >= num_nodes || b >= num_nodes) throw InvalidDecomposition("edge refers to a missing bag");
    if (a == b) throw InvalidDecomposition("self-loop on bag " + std::to_string(a));
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  rt.parent.assign(num_nodes, std::nullopt);
  rt.children.assign(num_nodes, {});
  std::vector<bool> seen(num_nodes, false);
  std::deque<BagId> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    BagId b = queue.front();
    queue.pop_front();
    rt.bfs.push_back(b);
    std::sort(adj[b].begin(), adj[b].end());
    for (BagId c : adj[b]) {
      if (seen[c]) continue;
      seen[c] = true;
      rt.parent[c] = b;
      rt.children[b].push_back(c);
      queue.push_back(c);
    }
  }
  if (rt.bfs.size() != num_nodes) throw InvalidDecomposition("the bags do not form a connected tree");
  return rt;
}

std::optional<Violation> validate_td(const Graph& g, const TreeDecomp& t) {
  for (std::size_t i = 0; i < t.bags.size(); ++i) {
    const auto& bag = t.bags[i];
    if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      return Violation{TdCondition::Tree, "bag " + std::to_string(i) + " is not a sorted set", {}};
    }
  }
  RootedTree rt;
  try {
    rt = root_tree(t.size(), t.edges, t.root);
  } catch (const InvalidDecomposition& e) {
    return Violation{TdCondition::Tree, e.what(), {}};
  }

  std::map<Var, std::size_t> occurrences;
  for (const auto& bag : t.bags) {
    for (Var v : bag) ++occurrences[v];
  }
  for (Var v : g.vertices()) {
    if (!occurrences.count(v)) return Violation{TdCondition::VertexCover, "vertex " + var_label(v) + " is in no bag", {v}};
  }
  for (const auto& [u, v] : g.edges()) {
    bool covered = std::any_of(t.bags.begin(), t.bags.end(),
                               [u = u, v = v](const auto& bag) { return contains(bag, u) && contains(bag, v); });
    if (!covered) {
      return Violation{TdCondition::EdgeCover, "edge " + var_label(u) + "-" + var_label(v) + " is in no bag", {u, v}};
    }
  }
  // A subforest of a tree is connected iff it has one edge fewer than nodes.
  std::map<Var, std::size_t> inner_edges;
  for (const auto& [a, b] : t.edges) {
    const auto& ba = t.bags[a];
    const auto& bb = t.bags[b];
    std::vector<Var> common;
    std::set_intersection(ba.begin(), ba.end(), bb.begin(), bb.end(), std::back_inserter(common));
    for (Var v : common) ++inner_edges[v];
  }
  for (const auto& [v, count] : occurrences) {
    if (inner_edges[v] + 1 != count) {
      return Violation{TdCondition::Connectivity, "bags containing " + var_label(v) + " are not connected", {v}};
    }
  }
  return std::nullopt;
}

std::size_t width(const TreeDecomp& t) {
  std::size_t w = 0;
  for (const auto& bag : t.bags) w = std::max(w, bag.size());
  return w == 0 ? 0 : w - 1;
}

namespace {

std::size_t tree_height(const RootedTree& rt) {
  if (rt.bfs.empty()) return 0;
  std::vector<std::size_t> depth(rt.parent.size(), 0);
  std::size_t h = 0;
  for (BagId b : rt.bfs) {
    if (rt.parent[b]) depth[b] = depth[*rt.parent[b]] + 1;
    h = std::max(h, depth[b]);
  }
  return h;
}

}  // namespace

std::size_t height(const TreeDecomp& t) { return tree_height(root_tree(t.size(), t.edges, t.root)); }

TreeDecomp td_from_elimination_order(const Graph& g, const std::vector<Var>& order) {
  std::map<Var, std::set<Var>> adj;
  for (Var v : g.vertices()) adj[v] = g.neighbors(v);
  if (order.size() != adj.size()) throw ValidationError("elimination order must list every vertex exactly once");
  std::map<Var, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!adj.count(order[i]) || !position.emplace(order[i], i).second) {
      throw ValidationError("elimination order must list every vertex exactly once");
    }
  }

  TreeDecomp t;
  std::vector<std::optional<BagId>> parent(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    Var v = order[i];
    const auto& ns = adj[v];
    std::vector<Var> bag(ns.begin(), ns.end());
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    t.bags.push_back(std::move(bag));
    std::size_t earliest = std::numeric_limits<std::size_t>::max();
    for (Var w : ns) earliest = std::min(earliest, position[w]);
    if (!ns.empty()) parent[i] = earliest;
    for (Var a : ns) {
      for (Var b : ns) {
        if (a != b) adj[a].insert(b);
      }
      adj[a].erase(v);
    }
    adj[v].clear();
  }
  if (order.empty()) return t;
  BagId last = order.size() - 1;
  for (BagId i = 0; i + 1 < order.size(); ++i) t.edges.emplace_back(i, parent[i] ? *parent[i] : last);
  t.root = last;
  return contract_redundant(t);
}

TreeDecomp heuristic_td(const Graph& g, TdStrategy strategy, std::uint64_t seed) {
  if (!is_connected(g)) throw DisconnectedGraph("tree decomposition heuristics need a connected graph");
  std::map<Var, std::set<Var>> adj;
  for (Var v : g.vertices()) adj[v] = g.neighbors(v);
  std::mt19937_64 rng(seed);

  auto score = [&](Var v) -> std::size_t {
    const auto& ns = adj[v];
    if (strategy == TdStrategy::MinDegree) return ns.size();
    std::size_t fill = 0;
    for (auto a = ns.begin(); a != ns.end(); ++a) {
      for (auto b = std::next(a); b != ns.end(); ++b) {
        if (!adj[*a].count(*b)) ++fill;
      }
    }
    return fill;
  };

  std::vector<Var> order;
  std::set<Var> remaining;
  for (const auto& [v, ns] : adj) remaining.insert(v);
  while (!remaining.empty()) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<Var> ties;
    for (Var v : remaining) {
      std::size_t s = score(v);
      if (s < best) {
        best = s;
        ties.assign(1, v);
      } else if (s == best) {
        ties.push_back(v);
      }
    }
    Var pick = ties.front();
    if (seed != 0 && ties.size() > 1) {
      std::uniform_int_distribution<std::size_t> dist(0, ties.size() - 1);
      pick = ties[dist(rng)];
    }
    const auto ns = adj[pick];
    for (Var a : ns) {
      for (Var b : ns) {
        if (a != b) adj[a].insert(b);
      }
      adj[a].erase(pick);
    }
    remaining.erase(pick);
    order.push_back(pick);
  }
  return td_from_elimination_order(g, order);
}

namespace {

// Merges bag a into an adjacent bag b whenever `mergeable(a, b)`. Returns
// the surviving ids in ascending order, the surviving adjacency, and the
// surviving root.
struct Contracted {
  std::vector<BagId> alive;
  std::vector<std::set<BagId>> adj;
  BagId root = 0;
};

template <typename Pred>
Contracted contract(const TreeDecomp& t, Pred mergeable) {
  Contracted c;
  c.adj.assign(t.size(), {});
  for (const auto& [a, b] : t.edges) {
    c.adj[a].insert(b);
    c.adj[b].insert(a);
  }
  std::vector<bool> dead(t.size(), false);
  c.root = t.root;
  bool changed = true;
  while (changed) {
    changed = false;
    for (BagId a = 0; a < t.size(); ++a) {
      if (dead[a]) continue;
      for (BagId b : c.adj[a]) {
        if (!mergeable(t.bags[a], t.bags[b])) continue;
        for (BagId n : c.adj[a]) {
          c.adj[n].erase(a);
          if (n != b) {
            c.adj[n].insert(b);
            c.adj[b].insert(n);
          }
        }
        c.adj[a].clear();
        dead[a] = true;
        if (c.root == a) c.root = b;
        changed = true;
        break;
      }
    }
  }
  for (BagId a = 0; a < t.size(); ++a) {
    if (!dead[a]) c.alive.push_back(a);
  }
  return c;
}

}  // namespace

TreeDecomp contract_redundant(const TreeDecomp& t) {
  Contracted c = contract(t, [](const std::vector<Var>& a, const std::vector<Var>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  });
  std::vector<BagId> rename(t.size(), 0);
  TreeDecomp out;
  for (BagId a : c.alive) {
    rename[a] = out.bags.size();
    out.bags.push_back(t.bags[a]);
  }
  for (BagId a : c.alive) {
    for (BagId b : c.adj[a]) {
      if (a < b) out.edges.emplace_back(rename[a], rename[b]);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.root = t.size() == 0 ? 0 : rename[c.root];
  return out;
}

// ------------------------------------------------------------------ nicify

TreeDecomp NiceTreeDecomp::plain() const {
  TreeDecomp t;
  for (const auto& n : nodes) t.bags.push_back(n.bag);
  for (BagId i = 0; i < nodes.size(); ++i) {
    if (nodes[i].parent) t.edges.emplace_back(*nodes[i].parent, i);
  }
  t.root = root;
  return t;
}

namespace {

class NiceBuilder {
 public:
  explicit NiceBuilder(const TreeDecomp& t) : t_(t) {}

  NiceTreeDecomp build() {
    if (t_.size() == 0) {
      out_.nodes.push_back(NiceNode{});
      return std::move(out_);
    }
    Contracted c = contract(t_, [](const std::vector<Var>& a, const std::vector<Var>& b) { return a.empty() || a == b; });
    adj_ = std::move(c.adj);
    BagId r = choose_root(c.alive);

    out_.root = add({}, std::nullopt, std::nullopt);
    BagId cur = out_.root;
    std::vector<Var> contents;
    const auto& rbag = t_.bags[r];
    for (std::size_t i = 0; i < rbag.size(); ++i) {
      contents.push_back(rbag[i]);
      cur = add(contents, cur, i + 1 == rbag.size() ? std::optional<BagId>(r) : std::nullopt);
    }
    if (rbag.empty()) out_.nodes[cur].origin = r;

    std::vector<std::pair<BagId, BagId>> stack{{r, cur}};
    std::vector<std::optional<BagId>> parent(t_.size());
    std::vector<bool> visited(t_.size(), false);
    visited[r] = true;
    while (!stack.empty()) {
      auto [b, node] = stack.back();
      stack.pop_back();
      std::vector<BagId> kids;
      for (BagId k : adj_[b]) {
        if (!visited[k]) {
          visited[k] = true;
          parent[k] = b;
          kids.push_back(k);
        }
      }
      std::sort(kids.begin(), kids.end(), [&](BagId x, BagId y) {
        if (t_.bags[x] != t_.bags[y]) return t_.bags[x] < t_.bags[y];
        return x < y;
      });
      if (kids.empty()) {
        leaf_chain(node, parent[b] ? &t_.bags[*parent[b]] : nullptr);
      } else if (kids.size() == 1) {
        stack.emplace_back(kids[0], chain(node, kids[0]));
      } else {
        BagId join = node;
        for (std::size_t i = 0; i < kids.size(); ++i) {
          bool last = i + 1 == kids.size();
          BagId copy = add(t_.bags[b], join, std::nullopt);
          if (!last && i + 2 < kids.size()) {
            stack.emplace_back(kids[i], chain(copy, kids[i]));
            join = add(t_.bags[b], join, std::nullopt);
          } else {
            stack.emplace_back(kids[i], chain(copy, kids[i]));
            if (!last) {
              BagId copy2 = add(t_.bags[b], join, std::nullopt);
              stack.emplace_back(kids[i + 1], chain(copy2, kids[i + 1]));
            }
            break;
          }
        }
      }
    }
    assign_kinds();
    return std::move(out_);
  }

 private:
  BagId add(std::vector<Var> bag, std::optional<BagId> parent, std::optional<BagId> origin) {
    BagId id = out_.nodes.size();
    NiceNode n;
    n.bag = std::move(bag);
    n.parent = parent;
    n.origin = origin;
    out_.nodes.push_back(std::move(n));
    if (parent) out_.nodes[*parent].children.push_back(id);
    return id;
  }

  BagId choose_root(const std::vector<BagId>& alive) const {
    BagId best = alive.front();
    std::size_t best_size = 0;
    std::size_t best_ecc = std::numeric_limits<std::size_t>::max();
    for (BagId b : alive) {
      std::size_t sz = t_.bags[b].size();
      if (sz < best_size) continue;
      std::size_t ecc = eccentricity(b);
      if (sz > best_size || ecc < best_ecc) {
        best = b;
        best_size = sz;
        best_ecc = ecc;
      }
    }
    return best;
  }

  std::size_t eccentricity(BagId start) const {
    std::map<BagId, std::size_t> dist{{start, 0}};
    std::deque<BagId> queue{start};
    std::size_t ecc = 0;
    while (!queue.empty()) {
      BagId b = queue.front();
      queue.pop_front();
      ecc = std::max(ecc, dist[b]);
      for (BagId n : adj_[b]) {
        if (dist.emplace(n, dist[b] + 1).second) queue.push_back(n);
      }
    }
    return ecc;
  }

  // Path from `top` (whose bag is the parent's bag) down to a node holding
  // the bag of `child`: drop what the child lacks, then add what it needs.
  BagId chain(BagId top, BagId child) {
    std::vector<Var> contents = out_.nodes[top].bag;
    const auto& target = t_.bags[child];
    std::vector<Var> drop;
    std::vector<Var> gain;
    std::set_difference(contents.begin(), contents.end(), target.begin(), target.end(), std::back_inserter(drop));
    std::set_difference(target.begin(), target.end(), contents.begin(), contents.end(), std::back_inserter(gain));
    BagId cur = top;
    std::size_t steps = drop.size() + gain.size();
    std::size_t done = 0;
    for (Var v : drop) {
      contents.erase(std::find(contents.begin(), contents.end(), v));
      ++done;
      cur = add(contents, cur, done == steps ? std::optional<BagId>(child) : std::nullopt);
    }
    for (Var v : gain) {
      contents.insert(std::upper_bound(contents.begin(), contents.end(), v), v);
      ++done;
      cur = add(contents, cur, done == steps ? std::optional<BagId>(child) : std::nullopt);
    }
    return cur;
  }

  // Shrinks a leaf to a single variable, keeping the largest variable the
  // parent does not have.
  void leaf_chain(BagId node, const std::vector<Var>* parent_bag) {
    std::vector<Var> contents = out_.nodes[node].bag;
    if (contents.size() <= 1) return;
    Var keep = contents.back();
    if (parent_bag) {
      for (auto it = contents.rbegin(); it != contents.rend(); ++it) {
        if (!contains(*parent_bag, *it)) {
          keep = *it;
          break;
        }
      }
    }
    std::vector<Var> drop;
    for (auto it = contents.rbegin(); it != contents.rend(); ++it) {
      if (*it != keep) drop.push_back(*it);
    }
    BagId cur = node;
    for (Var v : drop) {
      contents.erase(std::find(contents.begin(), contents.end(), v));
      cur = add(contents, cur, std::nullopt);
    }
  }

  void assign_kinds() {
    for (auto& n : out_.nodes) {
      if (n.children.empty()) {
        n.kind = NodeKind::Leaf;
      } else if (n.children.size() >= 2) {
        n.kind = NodeKind::Join;
      } else {
        const auto& child = out_.nodes[n.children.front()].bag;
        std::vector<Var> diff;
        if (child.size() > n.bag.size()) {
          n.kind = NodeKind::Forget;
          std::set_difference(child.begin(), child.end(), n.bag.begin(), n.bag.end(), std::back_inserter(diff));
        } else {
          n.kind = NodeKind::Introduce;
          std::set_difference(n.bag.begin(), n.bag.end(), child.begin(), child.end(), std::back_inserter(diff));
        }
        if (!diff.empty()) n.var = diff.front();
      }
    }
  }

  const TreeDecomp& t_;
  std::vector<std::set<BagId>> adj_;
  NiceTreeDecomp out_;
};

}  // namespace

NiceTreeDecomp nicify(const TreeDecomp& t) { return NiceBuilder(t).build(); }

std::optional<Violation> validate_nice(const Graph& g, const NiceTreeDecomp& t) {
  if (auto v = validate_td(g, t.plain())) return v;
  auto shape = [](std::string detail) { return Violation{TdCondition::NiceShape, std::move(detail), {}}; };
  if (t.nodes.empty()) return shape("no nodes");
  if (!t.nodes[t.root].bag.empty()) return shape("root bag is not empty");
  if (t.nodes.size() == 1) return std::nullopt;
  for (BagId i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    std::string where = "node " + std::to_string(i) + ": ";
    if ((i == t.root) != !n.parent.has_value()) return shape(where + "parent link inconsistent with root");
    for (BagId c : n.children) {
      if (c >= t.nodes.size() || t.nodes[c].parent != i) return shape(where + "child link inconsistent");
    }
    switch (n.kind) {
      case NodeKind::Leaf:
        if (!n.children.empty()) return shape(where + "leaf with children");
        if (n.bag.size() != 1) return shape(where + "leaf bag must hold one variable");
        break;
      case NodeKind::Join:
        if (n.children.size() != 2) return shape(where + "join needs exactly two children");
        for (BagId c : n.children) {
          if (t.nodes[c].bag != n.bag) return shape(where + "join child bag differs");
        }
        break;
      case NodeKind::Introduce:
      case NodeKind::Forget: {
        if (n.children.size() != 1) return shape(where + "introduce/forget needs one child");
        if (!n.var) return shape(where + "missing tagged variable");
        std::vector<Var> expected = t.nodes[n.children.front()].bag;
        if (n.kind == NodeKind::Introduce) {
          if (contains(expected, *n.var)) return shape(where + "introduced variable already in child");
          expected.insert(std::upper_bound(expected.begin(), expected.end(), *n.var), *n.var);
        } else {
          auto it = std::find(expected.begin(), expected.end(), *n.var);
          if (it == expected.end()) return shape(where + "forgotten variable not in child");
          expected.erase(it);
        }
        if (expected != n.bag) return shape(where + "bag does not match its tag");
        break;
      }
    }
  }
  return std::nullopt;
}

std::size_t width(const NiceTreeDecomp& t) { return width(t.plain()); }

std::size_t height(const NiceTreeDecomp& t) {
  std::size_t h = 0;
  for (const auto& n : t.nodes) {
    std::size_t d = 0;
    for (auto p = n.parent; p; p = t.nodes[*p].parent) ++d;
    h = std::max(h, d);
  }
  return h;
}

std::vector<BagId> default_child_order(const NiceTreeDecomp& t, BagId b) {
  std::vector<BagId> kids = t.nodes[b].children;
  std::sort(kids.begin(), kids.end(), [&](BagId x, BagId y) {
    if (t.nodes[x].bag != t.nodes[y].bag) return t.nodes[x].bag < t.nodes[y].bag;
    return x < y;
  });
  return kids;
}

std::vector<BagId> bfs_order(const NiceTreeDecomp& t, const ChildOrder& children) {
  std::vector<BagId> order;
  if (t.nodes.empty()) return order;
  order.push_back(t.root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (BagId c : children(t, order[i])) order.push_back(c);
  }
  return order;
}

}  // namespace tdqe
