#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tdqe/benchgen.hpp"
#include "tdqe/error.hpp"
#include "tdqe/parser.hpp"

using namespace tdqe;

namespace {

GenConfig config(std::size_t k, std::size_t n, std::uint64_t seed) {
  GenConfig c;
  c.k = k;
  c.n_vars = n;
  c.seed = seed;
  return c;
}

std::size_t ktree_edges(std::size_t k, std::size_t n) { return k * (k + 1) / 2 + (n - k - 1) * k; }

}  // namespace

TEST(GenKtree, Triangle) {
  auto kt = gen_ktree(config(2, 3, 1));
  EXPECT_EQ(kt.graph.num_vertices(), 3u);
  EXPECT_EQ(kt.graph.num_edges(), 3u);
  EXPECT_EQ(kt.bags.size(), 1u);
}

TEST(GenKtree, ReverseAttachmentOrderHasWidthK) {
  auto kt = gen_ktree(config(2, 8, 5));
  EXPECT_EQ(kt.graph.num_edges(), ktree_edges(2, 8));
  auto order = kt.graph.vertices();
  std::reverse(order.begin(), order.end());
  auto t = td_from_elimination_order(kt.graph, order);
  EXPECT_FALSE(validate_td(kt.graph, t));
  EXPECT_EQ(width(t), 2u);
  EXPECT_EQ(oracle::brute_treewidth(kt.graph), 2u);
}

TEST(GenKtree, ShapeForWidthFour) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto kt = gen_ktree(config(4, 15, seed));
    EXPECT_EQ(kt.graph.num_vertices(), 15u);
    EXPECT_EQ(kt.graph.num_edges(), ktree_edges(4, 15));
    EXPECT_EQ(kt.bags.size(), 11u);
    auto t = ktree_decomposition(kt);
    EXPECT_FALSE(validate_td(kt.graph, t));
    EXPECT_EQ(width(t), 4u);
    for (const auto& bag : kt.bags) {
      EXPECT_EQ(bag.size(), 5u);
      for (std::size_t a = 0; a < bag.size(); ++a)
        for (std::size_t b = a + 1; b < bag.size(); ++b) EXPECT_TRUE(kt.graph.has_edge(bag[a], bag[b]));
    }
  }
}

TEST(GenKtree, Deterministic) {
  auto a = gen_ktree(config(3, 20, 77));
  auto b = gen_ktree(config(3, 20, 77));
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.bags, b.bags);
}

TEST(GenFormula, LinearFamily) {
  GenConfig c = config(2, 15, 3);
  c.n_atoms = 75;
  c.n_elim = 5;
  auto kt = gen_ktree(c);
  auto f = gen_formula(kt, c);
  EXPECT_EQ(f.mode(), FormulaMode::Linear);
  EXPECT_EQ(f.num_atoms(), 75u);
  EXPECT_EQ(f.quantified().size(), 5u);
  for (const auto& a : f.linear_atoms()) {
    EXPECT_EQ(a.rel(), Relation::LE);
    for (const auto& [v, coef] : a.coeffs()) {
      EXPECT_NE(coef, 0);
      EXPECT_LE(abs(coef), 10);
    }
  }
  EXPECT_TRUE(gen_properties_check(f, kt, c).ok());
}

TEST(GenFormula, QuadraticFamily) {
  GenConfig c = config(2, 6, 4);
  c.max_deg = 2;
  c.n_atoms = 6;
  auto kt = gen_ktree(c);
  auto f = gen_formula(kt, c);
  EXPECT_EQ(f.mode(), FormulaMode::Polynomial);
  EXPECT_EQ(f.num_atoms(), 6u);
  for (const auto& a : f.poly_atoms()) {
    EXPECT_EQ(a.rel, Relation::GE);
    EXPECT_EQ(a.poly.total_degree(), 2u);
  }
  EXPECT_TRUE(gen_properties_check(f, kt, c).ok());
}

TEST(GenFormula, Degenerate) {
  GenConfig c = config(1, 2, 9);
  auto kt = gen_ktree(c);
  auto f = gen_formula(kt, c);
  ASSERT_EQ(f.num_atoms(), 1u);
  EXPECT_EQ(f.linear_atoms()[0].num_vars(), 2u);
}

TEST(GenFormula, SparseConfigsStillCoverEveryVariable) {
  // One atom per bag at the lowest inclusion probability forces redraws.
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenConfig c = config(3, 12, seed);
    c.include_prob = 0.05;
    auto kt = gen_ktree(c);
    auto f = gen_formula(kt, c);
    auto report = gen_properties_check(f, kt, c);
    EXPECT_TRUE(report.ok());
    EXPECT_TRUE(report.problems.empty());
  }
}

TEST(GenFormula, Deterministic) {
  GenConfig c = config(2, 10, 12);
  auto kt = gen_ktree(c);
  EXPECT_EQ(format_formula(gen_formula(kt, c)), format_formula(gen_formula(kt, c)));
}

TEST(GenPropertiesCheck, FlagsForeignEdges) {
  GenConfig c = config(2, 6, 1);
  auto kt = gen_ktree(c);
  auto f = gen_formula(kt, c);
  // A k-tree that lacks some of the formula's edges.
  KTree other = gen_ktree(config(2, 6, 2));
  if (other.graph != kt.graph) {
    auto r = gen_properties_check(f, other, c);
    EXPECT_FALSE(r.primal_in_ktree);
  }
  GenConfig narrow = c;
  narrow.k = 1;
  EXPECT_FALSE(gen_properties_check(f, kt, narrow).attachment_width_is_k);
}

TEST(GenConfig, ValidationAndJson) {
  GenConfig c = config(2, 2, 1);
  EXPECT_THROW(validate(c), ConfigError);
  c = config(2, 5, 1);
  c.coeff_min = c.coeff_max = 0;
  EXPECT_THROW(validate(c), ConfigError);
  c = config(2, 5, 1);
  c.include_prob = 0.5;
  EXPECT_THROW(validate(c), ConfigError);
  c = config(3, 9, 42);
  c.n_atoms = 30;
  c.rel = Relation::LT;
  auto back = gen_config_from_json(to_json(c));
  EXPECT_EQ(to_json(back), to_json(c));
  EXPECT_THROW(gen_config_from_json(nlohmann::json{{"k", 2}}), ConfigError);
}
