#include <gtest/gtest.h>

#include "exmatch/core/errors.hpp"
#include "exmatch/core/violation.hpp"
#include "exmatch/oracle/enumeration.hpp"
#include "exmatch/solver/bipartite_matching.hpp"
#include "exmatch/solver/parity_solver.hpp"
#include "exmatch/solver/relevance.hpp"
#include "support/graphs.hpp"

using namespace exmatch;
using exmatch::testing::graph_from_mask;
using exmatch::testing::planted_graph;
using exmatch::testing::random_graph;

namespace {

constexpr Color R = Color::red;
constexpr Color B = Color::blue;

ColoredBipartiteGraph crossed_square() { return ColoredBipartiteGraph(2, 2, {{0, 1, R}, {1, 0, R}, {0, 0, B}, {1, 1, B}}); }

// 4-cycle u1-v1-u2-v2 with base matching (u1,v1,R),(u2,v2,B) and an even alternative.
ColoredBipartiteGraph four_cycle() { return ColoredBipartiteGraph(2, 2, {{0, 0, R}, {1, 1, B}, {0, 1, R}, {1, 0, R}}); }

}  // namespace

TEST(PerfectMatching, CompleteDoubleHasOne) {
  const auto m = find_perfect_matching(ColoredBipartiteGraph::complete_double(3));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->size(), 3u);
  EXPECT_TRUE(m->is_perfect_in(ColoredBipartiteGraph::complete_double(3)));
}

TEST(PerfectMatching, IsolatedLeftVertex) {
  ColoredBipartiteGraph g(2, 2, {{0, 0, R}, {0, 1, B}});
  EXPECT_FALSE(find_perfect_matching(g).has_value());
  const auto h = hall_violator(g);
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(verify_hall_violator(g, *h));
}

TEST(PerfectMatching, UnequalSides) {
  ColoredBipartiteGraph g(2, 1, {{0, 0, R}, {1, 0, R}});
  EXPECT_FALSE(find_perfect_matching(g).has_value());
  const auto h = hall_violator(g);
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(verify_hall_violator(g, *h));
}

TEST(PerfectMatching, MaximumSizeMatchesOracleOnRandomGraphs) {
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng.below(5);
    const auto g = random_graph(n, 0.25, rng);
    const bool has = count_perfect_matchings(g) > 0;
    EXPECT_EQ(find_perfect_matching(g).has_value(), has);
    if (!has) {
      const auto h = hall_violator(g);
      ASSERT_TRUE(h.has_value());
      EXPECT_TRUE(verify_hall_violator(g, *h));
    }
  }
}

TEST(Relevance, CompleteDoubleN2) {
  const auto g = ColoredBipartiteGraph::complete_double(2);
  const auto s = relevant_edges(g, *find_perfect_matching(g));
  EXPECT_EQ(s.num_relevant(), 8u);
  EXPECT_EQ(s.components.size(), 1u);
}

TEST(Relevance, UniqueMatchingIsForced) {
  ColoredBipartiteGraph g(3, 3, {{0, 0, R}, {1, 1, B}, {2, 2, R}});
  const auto s = relevant_edges(g, *find_perfect_matching(g));
  EXPECT_EQ(s.num_relevant(), 3u);
  ASSERT_EQ(s.components.size(), 3u);
  for (bool f : s.forced) EXPECT_TRUE(f);
}

TEST(Relevance, CrossedSquare) {
  const auto g = crossed_square();
  const auto s = relevant_edges(g, *find_perfect_matching(g));
  EXPECT_EQ(s.num_relevant(), 4u);
  EXPECT_EQ(s.components.size(), 1u);
}

TEST(Relevance, RejectsNonPerfectBase) {
  const auto g = crossed_square();
  EXPECT_THROW(relevant_edges(g, Matching({{0, 1, R}})), std::invalid_argument);
}

TEST(Relevance, AgreesWithOracle) {
  Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng.below(5);
    const auto g = planted_graph(n, 0.3, rng);
    const auto s = relevant_edges(g, *find_perfect_matching(g));
    const auto oracle = brute_force_relevant_edges(g);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      EXPECT_EQ(s.relevant[e], oracle[e]);
      EXPECT_EQ(edge_in_some_perfect_matching(g, e), oracle[e]);
    }
  }
}

TEST(Scc, TwoCycles) {
  // 0 -> 1 -> 0, 2 -> 3 -> 2, 1 -> 2
  const auto c = strongly_connected_components({{1}, {0, 2}, {3}, {2}});
  EXPECT_EQ(c[0], c[1]);
  EXPECT_EQ(c[2], c[3]);
  EXPECT_NE(c[0], c[2]);
}

TEST(SolveParity, CompleteDoubleN1Odd) {
  const auto g = ColoredBipartiteGraph::complete_double(1);
  const auto r = solve_parity(g, Parity::odd);
  ASSERT_EQ(r.kind, ResultKind::matching_found);
  EXPECT_EQ(*r.matching, Matching({{0, 0, R}}));
}

TEST(SolveParity, CrossedSquareOddGivesCertificate) {
  const auto g = crossed_square();
  const auto r = solve_parity(g, Parity::odd);
  ASSERT_EQ(r.kind, ResultKind::certificate);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_TRUE(r.certificate->is_parity_valid());
  EXPECT_TRUE(verify_certificate(g, Parity::odd, *r.certificate));
  EXPECT_FALSE(brute_force_parity_decision(g, Parity::odd));
}

TEST(SolveParity, CompleteDoubleN2Odd) {
  const auto g = ColoredBipartiteGraph::complete_double(2);
  const auto r = solve_parity(g, Parity::odd);
  ASSERT_EQ(r.kind, ResultKind::matching_found);
  const auto red = r.matching->red_count();
  EXPECT_TRUE(red == 1 || red == 3);
  EXPECT_EQ(enumerate_parity_matchings(g, Parity::odd).size(), 4u);
}

TEST(SolveParity, NoPerfectMatching) {
  ColoredBipartiteGraph g(2, 2, {{0, 0, R}, {1, 0, B}});
  const auto r = solve_parity(g, Parity::odd);
  EXPECT_EQ(r.kind, ResultKind::no_perfect_matching);
  ASSERT_TRUE(r.hall.has_value());
  EXPECT_TRUE(verify_result(g, Parity::odd, r));
}

TEST(SolveParity, FourCycleRotation) {
  const auto g = four_cycle();
  const auto r = solve_parity(g, Parity::even);
  ASSERT_EQ(r.kind, ResultKind::matching_found);
  EXPECT_EQ(r.matching->red_parity(), Parity::even);
  EXPECT_EQ(r.stats.rotations, 1u);
}

TEST(CycleExtraction, BackEdgeOnFourCycle) {
  const auto g = four_cycle();
  const std::vector<std::size_t> mate{0, 1};
  const auto s = relevant_edges(g, mate);
  const auto tree = bfs_tree_labels(g, s);
  std::size_t found = 0;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!s.relevant[e] || tree.is_tree_edge[e] || !violates(g.edge(e), Labeling(2, tree.label))) continue;
    const auto c = extract_parity_flipping_cycle(g, s, tree, e);
    EXPECT_EQ(c.edges.size(), 4u);
    EXPECT_EQ(c.violating_count, 1u);
    EXPECT_EQ(c.red_count % 2, 1u);
    ++found;
  }
  EXPECT_EQ(found, 1u);
}

TEST(CycleExtraction, NonViolatingEdgeRejected) {
  const auto g = four_cycle();
  const auto s = relevant_edges(g, std::vector<std::size_t>{0, 1});
  const auto tree = bfs_tree_labels(g, s);
  EXPECT_THROW(extract_parity_flipping_cycle(g, s, tree, 0), InvariantViolation);
}

TEST(CycleExtraction, EveryViolatingEdgeOnRandomGraphs) {
  Rng rng(21);
  std::size_t checked = 0;
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 2 + rng.below(7);
    const auto g = planted_graph(n, 0.35, rng);
    const auto mate = *perfect_matching_edges(g);
    const auto s = relevant_edges(g, mate);
    const auto tree = bfs_tree_labels(g, s);
    const Labeling tl(n, tree.label);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if (!s.relevant[e]) continue;
      if (tree.is_tree_edge[e]) {
        EXPECT_FALSE(violates(g.edge(e), tl));
        continue;
      }
      if (!violates(g.edge(e), tl)) continue;
      const auto c = extract_parity_flipping_cycle(g, s, tree, e);
      EXPECT_EQ(c.violating_count % 2, 1u);
      EXPECT_EQ(c.red_count % 2, 1u);
      const auto rotated = matching_from_indices(g, rotate_along(g, mate, c));
      EXPECT_TRUE(rotated.is_perfect_in(g));
      EXPECT_NE(rotated.red_parity(), matching_from_indices(g, mate).red_parity());
      ++checked;
    }
  }
  EXPECT_GT(checked, 50u);
}

TEST(DecomposeClosedWalk, FigureEight) {
  // walk 0->1->0->2->0 over edges 10,11,12,13
  const auto cycles = decompose_closed_walk({10, 11, 12, 13}, {0, 1, 0, 2}, {1, 0, 2, 0});
  ASSERT_EQ(cycles.size(), 2u);
  EXPECT_EQ(cycles[0], (std::vector<std::size_t>{10, 11}));
  EXPECT_EQ(cycles[1], (std::vector<std::size_t>{12, 13}));
}

TEST(DecomposeClosedWalk, OpenWalkRejected) {
  EXPECT_THROW(decompose_closed_walk({1, 2}, {0, 1}, {1, 2}), InvariantViolation);
}

TEST(SolveParity, AgreesWithOracleOnSmallCorpus) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (2 * n * n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      const auto g = graph_from_mask(n, mask);
      for (Parity p : {Parity::odd, Parity::even}) {
        const auto r = solve_parity(g, p);
        EXPECT_TRUE(verify_result(g, p, r));
        EXPECT_EQ(r.kind == ResultKind::matching_found, brute_force_parity_decision(g, p));
      }
    }
  }
}

TEST(SolveParity, VerifiedOnLargeRandomGraphs) {
  Rng rng(99);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 10 + rng.below(31);
    const auto g = planted_graph(n, 2.0 / static_cast<double>(n), rng);
    for (Parity p : {Parity::odd, Parity::even}) {
      const auto r = solve_parity(g, p);
      EXPECT_NE(r.kind, ResultKind::no_perfect_matching);
      EXPECT_TRUE(verify_result(g, p, r));
    }
  }
}

TEST(Verify, RejectsWrongParityMatching) {
  const auto g = ColoredBipartiteGraph::complete_double(1);
  EXPECT_FALSE(verify_matching_result(g, Parity::odd, Matching({{0, 0, B}})));
  EXPECT_FALSE(verify_certificate(g, Parity::odd, Labeling(1, {1, 0})));
}
