#include "tdqe/pace_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "tdqe/error.hpp"

namespace tdqe {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Non-empty, non-comment lines split on blanks.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) l.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (l.tokens.empty() || l.tokens.front() == "c") continue;
    out.push_back(std::move(l));
    if (end == text.size()) break;
  }
  return out;
}

std::size_t number_at(const Line& l, std::size_t i) {
  if (i >= l.tokens.size()) throw ParseError(l.number, 1, "missing field " + std::to_string(i + 1));
  std::string_view tok = l.tokens[i];
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(l.number, 1, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

void expect_count(const Line& l, std::size_t n) {
  if (l.tokens.size() != n) throw ParseError(l.number, 1, "expected " + std::to_string(n) + " fields");
}

Var vertex_of(const Line& l, std::size_t k, const std::vector<Var>* vertices, std::size_t n) {
  if (k == 0 || k > n) throw ParseError(l.number, 1, "vertex " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  return vertices ? (*vertices)[k - 1] : Var{static_cast<std::uint32_t>(k - 1)};
}

TreeDecomp read_td_impl(std::string_view text, const std::vector<Var>* vertices) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty tree decomposition");
  const Line& header = lines.front();
  if (header.tokens[0] != "s" || header.tokens.size() < 2 || header.tokens[1] != "td") {
    throw ParseError(header.number, 1, "expected header 's td <bags> <width+1> <vertices>'");
  }
  expect_count(header, 5);
  std::size_t num_bags = number_at(header, 2);
  std::size_t declared = number_at(header, 3);
  std::size_t n = number_at(header, 4);
  if (vertices && vertices->size() != n) {
    throw ValidationError("decomposition declares " + std::to_string(n) + " vertices, graph has " +
                          std::to_string(vertices->size()));
  }

  std::map<std::size_t, std::size_t> id_of;
  TreeDecomp t;
  std::vector<std::pair<std::size_t, std::size_t>> raw_edges;
  std::vector<std::size_t> edge_lines;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& l = lines[li];
    if (l.tokens[0] == "b") {
      std::size_t id = number_at(l, 1);
      if (id == 0 || id > num_bags) throw ParseError(l.number, 1, "bag id " + std::to_string(id) + " out of range");
      if (!id_of.emplace(id, t.bags.size()).second) throw ParseError(l.number, 1, "duplicate bag " + std::to_string(id));
      std::vector<Var> bag;
      for (std::size_t i = 2; i < l.tokens.size(); ++i) bag.push_back(vertex_of(l, number_at(l, i), vertices, n));
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      t.bags.push_back(std::move(bag));
    } else {
      expect_count(l, 2);
      raw_edges.emplace_back(number_at(l, 0), number_at(l, 1));
      edge_lines.push_back(l.number);
    }
  }
  if (t.bags.size() != num_bags) {
    throw ValidationError("header declares " + std::to_string(num_bags) + " bags, found " + std::to_string(t.bags.size()));
  }
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    auto a = id_of.find(raw_edges[i].first);
    auto b = id_of.find(raw_edges[i].second);
    if (a == id_of.end() || b == id_of.end()) throw ParseError(edge_lines[i], 1, "edge refers to an undeclared bag");
    t.edges.emplace_back(a->second, b->second);
  }
  std::size_t largest = 0;
  for (const auto& bag : t.bags) largest = std::max(largest, bag.size());
  if (largest != declared) {
    throw ValidationError("header declares largest bag size " + std::to_string(declared) + ", bags have " +
                          std::to_string(largest));
  }
  t.root = 0;
  return t;
}

}  // namespace

std::string write_gr(const Graph& g) {
  auto vs = g.vertices();
  std::map<Var, std::size_t> number;
  for (std::size_t i = 0; i < vs.size(); ++i) number[vs[i]] = i + 1;
  std::ostringstream out;
  auto edges = g.edges();
  out << "p tw " << vs.size() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << number[u] << ' ' << number[v] << '\n';
  return out.str();
}

Graph read_gr(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty graph");
  const Line& header = lines.front();
  if (header.tokens[0] != "p" || header.tokens.size() < 2 || header.tokens[1] != "tw") {
    throw ParseError(header.number, 1, "expected header 'p tw <vertices> <edges>'");
  }
  expect_count(header, 4);
  std::size_t n = number_at(header, 2);
  std::size_t m = number_at(header, 3);
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(Var{static_cast<std::uint32_t>(i)});
  std::size_t seen = 0;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& l = lines[li];
    expect_count(l, 2);
    g.add_edge(vertex_of(l, number_at(l, 0), nullptr, n), vertex_of(l, number_at(l, 1), nullptr, n));
    ++seen;
  }
  if (seen != m) throw ValidationError("header declares " + std::to_string(m) + " edges, found " + std::to_string(seen));
  return g;
}

std::string write_td(const TreeDecomp& t, const std::vector<Var>& vertices) {
  std::map<Var, std::size_t> number;
  for (std::size_t i = 0; i < vertices.size(); ++i) number[vertices[i]] = i + 1;
  std::size_t largest = 0;
  for (const auto& bag : t.bags) largest = std::max(largest, bag.size());
  std::ostringstream out;
  out << "s td " << t.bags.size() << ' ' << largest << ' ' << vertices.size() << '\n';
  // The root goes first so that reading restores it.
  std::vector<BagId> order{t.root};
  for (BagId b = 0; b < t.bags.size(); ++b) {
    if (b != t.root) order.push_back(b);
  }
  std::vector<std::size_t> file_id(t.bags.size());
  for (std::size_t i = 0; i < order.size() && !t.bags.empty(); ++i) file_id[order[i]] = i + 1;
  for (std::size_t i = 0; i < order.size() && !t.bags.empty(); ++i) {
    out << "b " << i + 1;
    for (Var v : t.bags[order[i]]) {
      auto it = number.find(v);
      if (it == number.end()) throw ValidationError("bag variable missing from the vertex list");
      out << ' ' << it->second;
    }
    out << '\n';
  }
  for (const auto& [a, b] : t.edges) out << file_id[a] << ' ' << file_id[b] << '\n';
  return out.str();
}

std::string write_td(const TreeDecomp& t) {
  std::uint32_t n = 0;
  for (const auto& bag : t.bags) {
    if (!bag.empty()) n = std::max(n, bag.back().index + 1);
  }
  std::vector<Var> vs;
  for (std::uint32_t i = 0; i < n; ++i) vs.push_back(Var{i});
  return write_td(t, vs);
}

TreeDecomp read_td(std::string_view text, const std::vector<Var>& vertices) { return read_td_impl(text, &vertices); }

TreeDecomp read_td(std::string_view text) { return read_td_impl(text, nullptr); }

}  // namespace tdqe
