#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tdqe/error.hpp"
#include "tdqe/pace_io.hpp"

using namespace tdqe;

TEST(PaceGr, ReadRunningExampleGraph) {
  Graph g = read_gr(slurp(data_path("running_example.gr")));
  EXPECT_EQ(g.num_vertices(), 8u);
  EXPECT_EQ(g.num_edges(), 12u);
  EXPECT_TRUE(g.has_edge(Var{7}, Var{1}));
}

TEST(PaceGr, RoundTrip) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    Graph g = gen::connected_graph(rng, 12, 0.2);
    EXPECT_EQ(read_gr(write_gr(g)), g);
  }
}

TEST(PaceGr, Errors) {
  EXPECT_THROW(read_gr(""), ParseError);
  EXPECT_THROW(read_gr("p tw 3 2\n1 2\n"), ValidationError);
  EXPECT_THROW(read_gr("p tw 3 1\n1 9\n"), Error);
  EXPECT_THROW(read_gr("p tw 3 1\n1 x\n"), ParseError);
}

TEST(PaceTd, RunningExampleHeaderAndBags) {
  TreeDecomp t = read_td(slurp(data_path("running_example.td")));
  EXPECT_EQ(t.size(), 6u);
  EXPECT_EQ(t.edges.size(), 5u);
  EXPECT_EQ(t.root, 0u);
  EXPECT_EQ(t.bags[0], (std::vector<Var>{Var{1}, Var{3}, Var{4}}));
  std::string out = write_td(t);
  EXPECT_EQ(out.substr(0, out.find('\n')), "s td 6 3 8");
  std::size_t b_lines = 0;
  for (std::size_t p = 0; (p = out.find("\nb ", p)) != std::string::npos; ++p) ++b_lines;
  EXPECT_EQ(b_lines, 6u);
}

TEST(PaceTd, Errors) {
  EXPECT_THROW(read_td(""), ParseError);
  EXPECT_THROW(read_td("s td 2 2 3\nb 1 1 2\n"), ValidationError);
  EXPECT_THROW(read_td("s td 1 3 3\nb 1 1 2\n"), ValidationError);
  EXPECT_THROW(read_td("s td 1 2 3\nb 1 1 q\n"), ParseError);
  try {
    read_td("s td 1 2 2\nb 1 1 2\nfoo\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(PaceTd, RoundTripRandomDecompositions) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    Graph g = gen::connected_graph(rng, 2 + i % 15, 0.2);
    auto t = heuristic_td(g, TdStrategy::MinFill, i + 1);
    auto back = read_td(write_td(t));
    // Writing puts the root first; compare bag multisets and validity.
    auto a = t.bags, b = back.bags;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
    EXPECT_EQ(back.bags[back.root], t.bags[t.root]);
    EXPECT_FALSE(validate_td(g, back));
  }
}

TEST(PaceTd, CustomVertexNumbering) {
  std::vector<Var> vs{Var{10}, Var{20}};
  TreeDecomp t{{{Var{10}, Var{20}}}, {}, 0};
  std::string text = write_td(t, vs);
  EXPECT_NE(text.find("b 1 1 2"), std::string::npos);
  EXPECT_EQ(read_td(text, vs).bags, t.bags);
}
