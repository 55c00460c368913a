#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tdqe/graph.hpp"
#include "tdqe/tree_decomp.hpp"

namespace tdqe {

// PACE graph and tree-decomposition text formats. Vertex k (1-indexed) in a
// file stands for the k-th entry of `vertices`; when reading without a vertex
// list, vertex k becomes Var{k - 1}.

std::string write_gr(const Graph& g);
Graph read_gr(std::string_view text);

// Vertex numbering follows `vertices`; without a list, Var{i} is written as
// i + 1.
std::string write_td(const TreeDecomp& t, const std::vector<Var>& vertices);
std::string write_td(const TreeDecomp& t);

// Throws ParseError on malformed text and ValidationError when the header
// disagrees with the bags. Bag ids are renumbered from 0 in file order; the
// root is the first bag.
TreeDecomp read_td(std::string_view text, const std::vector<Var>& vertices);
TreeDecomp read_td(std::string_view text);

}  // namespace tdqe
