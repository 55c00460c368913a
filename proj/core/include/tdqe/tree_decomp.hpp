#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdqe/graph.hpp"

namespace tdqe {

using BagId = std::size_t;

// Bags are sorted variable lists; tree edges are undirected and `root`
// orients them.
struct TreeDecomp {
  std::vector<std::vector<Var>> bags;
  std::vector<std::pair<BagId, BagId>> edges;
  BagId root = 0;

  std::size_t size() const { return bags.size(); }
};

// Parent/children view of a decomposition rooted at t.root. Throws
// InvalidDecomposition when the edges do not form a tree.
struct RootedTree {
  std::vector<std::optional<BagId>> parent;
  std::vector<std::vector<BagId>> children;
  // Breadth-first order from the root.
  std::vector<BagId> bfs;
};
RootedTree root_tree(std::size_t num_nodes, const std::vector<std::pair<BagId, BagId>>& edges, BagId root);

enum class TdCondition { Tree, VertexCover, EdgeCover, Connectivity, NiceShape };
std::string to_string(TdCondition c);

struct Violation {
  TdCondition condition;
  std::string detail;
  // Offending vertex, edge endpoints, or the vertex whose bags are
  // disconnected.
  std::vector<Var> witness;
};

// nullopt means the decomposition is valid for g.
std::optional<Violation> validate_td(const Graph& g, const TreeDecomp& t);

// Largest bag size minus one; 0 for an empty decomposition.
std::size_t width(const TreeDecomp& t);
// Longest root-to-leaf path in edges.
std::size_t height(const TreeDecomp& t);

enum class TdStrategy { MinDegree, MinFill };

// Elimination-game decomposition. Ties go to the lowest variable index, or
// are broken uniformly at random when seed != 0. Bags contained in an
// adjacent bag are merged. Throws DisconnectedGraph.
TreeDecomp heuristic_td(const Graph& g, TdStrategy strategy, std::uint64_t seed = 0);

// Decomposition induced by eliminating vertices in `order` (all of g).
TreeDecomp td_from_elimination_order(const Graph& g, const std::vector<Var>& order);

// Merges bags that are subsets of an adjacent bag. Bag ids are renumbered.
TreeDecomp contract_redundant(const TreeDecomp& t);

enum class NodeKind { Leaf, Introduce, Forget, Join };
std::string to_string(NodeKind k);

struct NiceNode {
  std::vector<Var> bag;
  NodeKind kind = NodeKind::Leaf;
  // Introduced or forgotten variable.
  std::optional<Var> var;
  std::optional<BagId> parent;
  std::vector<BagId> children;
  // Bag of the source decomposition this node reproduces, if any.
  std::optional<BagId> origin;
};

struct NiceTreeDecomp {
  std::vector<NiceNode> nodes;
  BagId root = 0;

  std::size_t size() const { return nodes.size(); }
  TreeDecomp plain() const;
};

// Roots the decomposition at a largest bag (ties: smallest eccentricity,
// then lowest id), puts an empty root above it, binarizes branching bags
// with copies, and fills introduce/forget chains. Precondition: t is valid.
NiceTreeDecomp nicify(const TreeDecomp& t);

// Checks the decomposition conditions and the nice shape rules.
std::optional<Violation> validate_nice(const Graph& g, const NiceTreeDecomp& t);

std::size_t width(const NiceTreeDecomp& t);
std::size_t height(const NiceTreeDecomp& t);

// Order in which a traversal visits the children of a node. The default
// sorts children by their bag contents, then by id.
using ChildOrder = std::function<std::vector<BagId>(const NiceTreeDecomp&, BagId)>;
std::vector<BagId> default_child_order(const NiceTreeDecomp& t, BagId b);

// Breadth-first node order from the root.
std::vector<BagId> bfs_order(const NiceTreeDecomp& t, const ChildOrder& children = default_child_order);

}  // namespace tdqe
