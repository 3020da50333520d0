#include <gtest/gtest.h>

#include <set>

#include "exmatch/core/errors.hpp"
#include "exmatch/core/graph.hpp"
#include "exmatch/core/graph_io.hpp"
#include "exmatch/core/labeling.hpp"
#include "exmatch/core/matching.hpp"
#include "exmatch/core/rational.hpp"
#include "exmatch/core/rng.hpp"
#include "exmatch/core/violation.hpp"

using namespace exmatch;

namespace {

constexpr Color R = Color::red;
constexpr Color B = Color::blue;

Labeling lab(std::size_t n, std::vector<std::uint8_t> bits, Parity p = Parity::odd) { return Labeling(n, bits, p); }

}  // namespace

TEST(CompleteDouble, EdgeCounts) {
  EXPECT_EQ(ColoredBipartiteGraph::complete_double(1).num_edges(), 2u);
  EXPECT_EQ(ColoredBipartiteGraph::complete_double(2).num_edges(), 8u);
  const auto g3 = ColoredBipartiteGraph::complete_double(3);
  EXPECT_EQ(g3.num_edges(), 18u);
  for (std::uint32_t u = 0; u < 3; ++u)
    for (std::uint32_t v = 0; v < 3; ++v) {
      EXPECT_TRUE(g3.contains({u, v, R}));
      EXPECT_TRUE(g3.contains({u, v, B}));
    }
  EXPECT_TRUE(g3.is_complete_double());
}

TEST(CompleteDouble, SmallestInstance) {
  const auto g = ColoredBipartiteGraph::complete_double(1);
  EXPECT_EQ(g.edge(0), (Edge{0, 0, R}));
  EXPECT_EQ(g.edge(1), (Edge{0, 0, B}));
  EXPECT_THROW(ColoredBipartiteGraph::complete_double(0), std::invalid_argument);
}

TEST(Graph, RejectsDuplicateAndOutOfRange) {
  EXPECT_THROW(ColoredBipartiteGraph(1, 1, {{0, 0, R}, {0, 0, R}}), std::invalid_argument);
  EXPECT_THROW(ColoredBipartiteGraph(1, 1, {{0, 1, R}}), std::invalid_argument);
  EXPECT_NO_THROW(ColoredBipartiteGraph(1, 1, {{0, 0, R}, {0, 0, B}}));
}

TEST(Graph, Incidence) {
  ColoredBipartiteGraph g(2, 2, {{0, 1, R}, {1, 0, R}, {0, 0, B}});
  ASSERT_EQ(g.left_incident(0).size(), 2u);
  EXPECT_EQ(g.left_incident(0)[0], 0u);
  EXPECT_EQ(g.left_incident(0)[1], 2u);
  EXPECT_EQ(g.right_incident(1).size(), 1u);
  EXPECT_EQ(g.right_global(1), 3u);
  EXPECT_EQ(g.find_edge({0, 0, B}), 2u);
  EXPECT_FALSE(g.find_edge({1, 1, B}).has_value());
}

TEST(Violation, SingleRedEdge) {
  const auto g = ColoredBipartiteGraph::complete_double(1);
  const auto e = violation_edges(g, lab(1, {1, 0}));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0], (Edge{0, 0, R}));
}

TEST(Violation, ParityInvalidStillEvaluable) {
  const auto g = ColoredBipartiteGraph::complete_double(1);
  const Labeling l = lab(1, {0, 0});
  EXPECT_FALSE(l.is_parity_valid());
  const auto e = violation_edges(g, l);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0], (Edge{0, 0, B}));
}

TEST(Violation, AllZeroN2GivesBlueEdges) {
  const auto g = ColoredBipartiteGraph::complete_double(2);
  const auto e = violation_edges(g, lab(2, {0, 0, 0, 0}));
  ASSERT_EQ(e.size(), 4u);
  for (const Edge& x : e) EXPECT_EQ(x.color, B);
}

TEST(ViolationCount, Examples) {
  EXPECT_EQ(violation_count(Matching({{0, 0, R}}), lab(1, {1, 0}), ColoredBipartiteGraph::complete_double(1)), 1u);
  EXPECT_EQ(violation_count(Matching({{0, 0, R}, {1, 1, B}}), lab(2, {0, 0, 0, 0}),
                            ColoredBipartiteGraph::complete_double(2)),
            1u);
}

TEST(ViolationCount, RejectsBadInputs) {
  const auto g = ColoredBipartiteGraph::complete_double(2);
  EXPECT_THROW(violation_count(Matching({{0, 0, R}}), lab(2, {0, 0, 0, 0}), g), std::invalid_argument);
  EXPECT_THROW(violation_count(Matching({{0, 0, R}, {1, 1, R}}), lab(2, {1, 0, 0, 0}), g), std::invalid_argument);
}

TEST(ViolationCount, MinimumOverOddPairsIsOneAtN2) {
  const auto g = ColoredBipartiteGraph::complete_double(2);
  std::size_t best = 99;
  std::size_t pairs = 0;
  for (int perm = 0; perm < 2; ++perm)
    for (int colors = 0; colors < 4; ++colors) {
      std::vector<Edge> es;
      for (std::uint32_t u = 0; u < 2; ++u)
        es.push_back({u, perm ? 1 - u : u, (colors >> u & 1) ? B : R});
      Matching m(es);
      if (m.red_parity() != Parity::odd) continue;
      for (int bits = 0; bits < 16; ++bits) {
        Labeling l(2, {std::uint8_t(bits & 1), std::uint8_t(bits >> 1 & 1), std::uint8_t(bits >> 2 & 1),
                       std::uint8_t(bits >> 3 & 1)});
        if (!l.is_parity_valid()) continue;
        ++pairs;
        best = std::min(best, violation_count(m, l, g));
      }
    }
  EXPECT_EQ(pairs, 4u * 8u);
  EXPECT_EQ(best, 1u);
}

TEST(ParityIdentity, Examples) {
  const auto g = ColoredBipartiteGraph::complete_double(2);
  const Matching straight({{0, 0, R}, {1, 1, R}});
  auto a = red_parity_identity(g, straight, lab(2, {0, 0, 0, 0}));
  EXPECT_EQ(a.lhs, 2);
  EXPECT_EQ(a.rhs, 2);
  auto b = red_parity_identity(g, straight, lab(2, {1, 0, 1, 0}));
  EXPECT_EQ(b.lhs, 2);
  EXPECT_EQ(b.rhs, 2);
  EXPECT_THROW(red_parity_identity(g, straight, lab(2, {1, 0, 0, 0})), std::invalid_argument);
}

TEST(ParityIdentity, RandomConsistentPairsN3) {
  const auto g = ColoredBipartiteGraph::complete_double(3);
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::size_t> perm{0, 1, 2};
    rng.shuffle(perm);
    std::vector<std::uint8_t> bits(6);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng.below(2));
    Labeling l(3, bits, Parity::odd);
    std::vector<Edge> es;
    for (std::uint32_t u = 0; u < 3; ++u) {
      const auto v = static_cast<std::uint32_t>(perm[u]);
      es.push_back({u, v, l.left(u) == l.right(v) ? R : B});
    }
    const auto id = red_parity_identity(g, Matching(es), l);
    EXPECT_EQ(id.lhs, id.rhs);
  }
}

TEST(Labeling, ParityClasses) {
  EXPECT_TRUE(lab(1, {1, 0}).is_parity_valid());
  EXPECT_FALSE(lab(1, {1, 1}).is_parity_valid());
  EXPECT_TRUE(lab(1, {1, 1}, Parity::even).is_parity_valid());
  EXPECT_TRUE(lab(2, {1, 1, 0, 0}).is_parity_valid());
  EXPECT_TRUE(labeling_parity_ok(3, 3, Parity::odd));
  EXPECT_FALSE(labeling_parity_ok(2, 3, Parity::odd));
}

TEST(Labeling, Bitstrings) {
  const auto l = Labeling::from_bitstring("1001", 2);
  EXPECT_EQ(l.left(0), 1);
  EXPECT_EQ(l.right(1), 1);
  EXPECT_EQ(l.to_bitstring(), "1001");
  EXPECT_EQ(l.complemented().to_bitstring(), "0110");
  EXPECT_THROW(Labeling::from_bitstring("10x1", 2), std::invalid_argument);
}

TEST(Matching, SortedAndDisjoint) {
  Matching a({{1, 0, B}, {0, 1, R}});
  Matching b({{0, 1, R}, {1, 0, B}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.red_count(), 1u);
  EXPECT_EQ(a.red_parity(), Parity::odd);
  EXPECT_THROW(Matching({{0, 0, R}, {0, 1, B}}), std::invalid_argument);
  EXPECT_TRUE(a.is_perfect_in(ColoredBipartiteGraph::complete_double(2)));
  EXPECT_FALSE(Matching({{0, 0, R}}).is_perfect_in(ColoredBipartiteGraph::complete_double(2)));
}

TEST(GraphIo, RoundTrip) {
  const std::string text = "# fig\np cbg 2 2 4\ne 1 2 R\ne 2 1 R\ne 1 1 B\ne 2 2 B\n";
  const auto g = parse_graph(text);
  EXPECT_EQ(g.num_edges(), 4u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1, R}));
  EXPECT_EQ(format_graph(g), "p cbg 2 2 4\ne 1 2 R\ne 2 1 R\ne 1 1 B\ne 2 2 B\n");
}

TEST(GraphIo, Errors) {
  EXPECT_THROW(parse_graph("e 1 1 R\n"), FormatError);
  EXPECT_THROW(parse_graph("p cbg 1 1 2\ne 1 1 R\n"), FormatError);
  EXPECT_THROW(parse_graph("p cbg 1 1 1\ne 1 1 G\n"), FormatError);
  EXPECT_THROW(parse_graph("p cbg 1 1 1\ne 2 1 R\n"), FormatError);
  EXPECT_THROW(read_graph_file("/nonexistent/graph.cbg"), FormatError);
}

TEST(Rational, Parsing) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_EQ(parse_rational("08/012"), Rational(2, 3));
  EXPECT_THROW(parse_rational("1.5/2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Rational, PowerOfTwoThreshold) {
  EXPECT_TRUE(at_most_power_of_two(Rational(1, 4), 2));
  EXPECT_FALSE(at_most_power_of_two(Rational(1, 3), 2));
  EXPECT_TRUE(at_most_power_of_two(0, Rational(1, 10)));
  // 2^{-1/10} ≈ 0.933
  EXPECT_TRUE(at_most_power_of_two(Rational(93, 100), Rational(1, 10)));
  EXPECT_FALSE(at_most_power_of_two(Rational(94, 100), Rational(1, 10)));
}

TEST(Rng, Deterministic) {
  Rng a(5), b(5), c(6);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(Rng(5).next(), c.next());
  Rng r(1);
  const auto s = r.subset(10, 4);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_EQ(std::set<std::size_t>(s.begin(), s.end()).size(), 4u);
}

TEST(Rng, BelowIsRoughlyUniform) {
  Rng r(3);
  std::vector<int> hist(6);
  for (int i = 0; i < 60000; ++i) ++hist[r.below(6)];
  for (int h : hist) EXPECT_NEAR(h, 10000, 400);
}
