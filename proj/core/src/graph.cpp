#include "tdqe/graph.hpp"

#include <algorithm>
#include <deque>

namespace tdqe {

void Graph::add_vertex(Var v) { adj_[v]; }

void Graph::add_edge(Var u, Var v) {
  add_vertex(u);
  add_vertex(v);
  if (u == v) return;
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::add_clique(const std::vector<Var>& vs) {
  for (Var v : vs) add_vertex(v);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
  }
}

bool Graph::has_edge(Var u, Var v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

const std::set<Var>& Graph::neighbors(Var v) const {
  static const std::set<Var> empty;
  auto it = adj_.find(v);
  return it == adj_.end() ? empty : it->second;
}

std::vector<Var> Graph::vertices() const {
  std::vector<Var> out;
  out.reserve(adj_.size());
  for (const auto& [v, ns] : adj_) out.push_back(v);
  return out;
}

std::vector<std::pair<Var, Var>> Graph::edges() const {
  std::vector<std::pair<Var, Var>> out;
  for (const auto& [u, ns] : adj_) {
    for (Var v : ns) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& [v, ns] : adj_) twice += ns.size();
  return twice / 2;
}

Graph Graph::induced(const std::vector<Var>& vs) const {
  Graph g;
  std::set<Var> keep(vs.begin(), vs.end());
  for (Var v : vs) {
    if (!has_vertex(v)) continue;
    g.add_vertex(v);
    for (Var w : neighbors(v)) {
      if (keep.count(w)) g.add_edge(v, w);
    }
  }
  return g;
}

Graph build_primal(const QuantFormula& f) {
  Graph g;
  for (Var v : f.quantified()) g.add_vertex(v);
  for (std::size_t i = 0; i < f.num_atoms(); ++i) {
    std::vector<Var> q;
    for (Var v : f.atom_vars(i)) {
      if (f.is_quantified(v)) q.push_back(v);
    }
    g.add_clique(q);
  }
  return g;
}

Graph build_primal(const std::vector<LinearAtom>& atoms) {
  Graph g;
  for (const auto& a : atoms) g.add_clique(atom_vars(a));
  return g;
}

std::vector<Graph> connected_components(const Graph& g) {
  std::vector<Graph> out;
  std::set<Var> seen;
  for (Var start : g.vertices()) {
    if (seen.count(start)) continue;
    std::vector<Var> comp;
    std::deque<Var> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      Var v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (Var w : g.neighbors(v)) {
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    out.push_back(g.induced(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace tdqe
