#include <gtest/gtest.h>

#include <set>

#include "exmatch/core/errors.hpp"
#include "exmatch/oracle/enumeration.hpp"
#include "exmatch/oracle/gadget.hpp"
#include "support/graphs.hpp"

using namespace exmatch;

namespace {

constexpr Color R = Color::red;
constexpr Color B = Color::blue;

}  // namespace

TEST(Enumerate, CompleteDoubleCounts) {
  EXPECT_EQ(count_perfect_matchings(ColoredBipartiteGraph::complete_double(1)), 2u);
  EXPECT_EQ(count_perfect_matchings(ColoredBipartiteGraph::complete_double(2)), 8u);
  EXPECT_EQ(count_perfect_matchings(ColoredBipartiteGraph::complete_double(3)), 48u);
}

TEST(Enumerate, DistinctAndPerfect) {
  const auto g = ColoredBipartiteGraph::complete_double(3);
  const auto all = enumerate_perfect_matchings(g);
  std::set<Matching> seen(all.begin(), all.end());
  EXPECT_EQ(seen.size(), all.size());
  for (const auto& m : all) EXPECT_TRUE(m.is_perfect_in(g));
}

TEST(Enumerate, CanonicalOrderN1) {
  const auto all = enumerate_perfect_matchings(ColoredBipartiteGraph::complete_double(1));
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0], Matching({{0, 0, R}}));
  EXPECT_EQ(all[1], Matching({{0, 0, B}}));
}

TEST(Enumerate, ThreadCountDoesNotChangeOrder) {
  const auto g = ColoredBipartiteGraph::complete_double(4);
  EnumerationLimits one, four;
  four.threads = 4;
  EXPECT_EQ(enumerate_perfect_matchings(g, one), enumerate_perfect_matchings(g, four));
}

TEST(Enumerate, CapExceeded) {
  EnumerationLimits small;
  small.max_n = 2;
  EXPECT_THROW(count_perfect_matchings(ColoredBipartiteGraph::complete_double(3), small), CapExceeded);
  EXPECT_THROW(enumerate_labelings(13, Parity::odd), CapExceeded);
}

TEST(ExactK, Examples) {
  EXPECT_EQ(enumerate_exact_k(ColoredBipartiteGraph::complete_double(2), 1).size(), 4u);
  EXPECT_EQ(enumerate_exact_k(ColoredBipartiteGraph::complete_double(2), 3).size(), 0u);
  const auto k0 = enumerate_exact_k(ColoredBipartiteGraph::complete_double(1), 0);
  ASSERT_EQ(k0.size(), 1u);
  EXPECT_EQ(k0[0], Matching({{0, 0, B}}));
}

TEST(ExactK, SumsToTotal) {
  const auto g = ColoredBipartiteGraph::complete_double(3);
  std::size_t total = 0;
  for (std::size_t k = 0; k <= 3; ++k) total += enumerate_exact_k(g, k).size();
  EXPECT_EQ(total, 48u);
}

TEST(Labelings, Counts) {
  const auto odd1 = enumerate_labelings(1, Parity::odd);
  ASSERT_EQ(odd1.size(), 2u);
  EXPECT_EQ(odd1[0].to_bitstring(), "01");
  EXPECT_EQ(odd1[1].to_bitstring(), "10");
  EXPECT_EQ(enumerate_labelings(2, Parity::odd).size(), 8u);
  const auto even1 = enumerate_labelings(1, Parity::even);
  ASSERT_EQ(even1.size(), 2u);
  EXPECT_EQ(even1[0].to_bitstring(), "00");
  EXPECT_EQ(even1[1].to_bitstring(), "11");
  for (const auto& l : enumerate_labelings(3, Parity::odd)) EXPECT_TRUE(l.is_parity_valid());
}

TEST(Decision, Examples) {
  EXPECT_TRUE(brute_force_parity_decision(ColoredBipartiteGraph::complete_double(2), Parity::odd));
  ColoredBipartiteGraph square(2, 2, {{0, 1, R}, {1, 0, R}, {0, 0, B}, {1, 1, B}});
  EXPECT_FALSE(brute_force_parity_decision(square, Parity::odd));
  EXPECT_TRUE(brute_force_parity_decision(square, Parity::even));
  EXPECT_FALSE(brute_force_parity_decision(ColoredBipartiteGraph(1, 1, {{0, 0, B}}), Parity::odd));
}

TEST(Gadget, N1Construction) {
  const auto g = ColoredBipartiteGraph::complete_double(1);
  const auto map = gadget_simple_graph(g);
  EXPECT_EQ(map.simple_graph.num_vertices(), 6u);
  EXPECT_EQ(map.simple_graph.num_edges(), 6u);
  std::size_t red = 0;
  for (const Edge& e : map.simple_graph.edges()) red += e.is_red();
  EXPECT_EQ(red, 1u);
  ASSERT_EQ(map.pairs.size(), 1u);
}

TEST(Gadget, N1RedImage) {
  const auto g = ColoredBipartiteGraph::complete_double(1);
  const auto map = gadget_simple_graph(g);
  const auto& p = map.pairs[0];
  const Matching img = map_matching(map, g, Matching({{0, 0, R}}));
  EXPECT_TRUE(img.is_perfect_in(map.simple_graph));
  EXPECT_EQ(img.red_count(), 1u);
  EXPECT_TRUE(img.contains({p.u, p.x_r, R}));
  EXPECT_TRUE(img.contains({p.y_r, p.v, B}));
  EXPECT_TRUE(img.contains({p.y_b, p.x_b, B}));
}

TEST(Gadget, BijectionSmallGraphs) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (2 * n * n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      const auto c = check_gadget_bijection(exmatch::testing::graph_from_mask(n, mask));
      EXPECT_TRUE(c.ok()) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(Gadget, SingleColorEdgesCopied) {
  ColoredBipartiteGraph g(2, 2, {{0, 0, R}, {1, 1, B}, {0, 1, R}, {0, 1, B}});
  const auto map = gadget_simple_graph(g);
  EXPECT_EQ(map.simple_graph.edge(map.copied_edge[0]), (Edge{0, 0, R}));
  EXPECT_EQ(map.simple_graph.edge(map.copied_edge[1]), (Edge{1, 1, B}));
  EXPECT_EQ(map.pairs.size(), 1u);
  EXPECT_TRUE(check_gadget_bijection(g).ok());
}
