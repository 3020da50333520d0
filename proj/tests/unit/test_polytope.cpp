#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "exmatch/core/errors.hpp"
#include "exmatch/oracle/enumeration.hpp"
#include "exmatch/polytope/relaxation.hpp"
#include "exmatch/polytope/simplex.hpp"
#include "exmatch/polytope/slack_matrix.hpp"
#include "support/graphs.hpp"

using namespace exmatch;

namespace {

constexpr Color R = Color::red;
constexpr Color B = Color::blue;

ColoredBipartiteGraph crossed_square() { return ColoredBipartiteGraph(2, 2, {{0, 1, R}, {1, 0, R}, {0, 0, B}, {1, 1, B}}); }

using Coeffs = std::vector<std::pair<std::size_t, Rational>>;

}  // namespace

TEST(Simplex, SmallOptimum) {
  // min -x - 2y  s.t.  x + y = 4,  y - x >= -2 ... with x, y >= 0
  LinearSystem sys;
  sys.num_vars = 2;
  sys.add_row(Coeffs{{0, 1}, {1, 1}}, 4, true);
  sys.add_row(Coeffs{{0, -1}}, -3, false);  // x <= 3
  const auto sol = solve_lp(sys, std::vector<Rational>{-1, -2});
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_EQ(sol.objective, -8);
  EXPECT_EQ(sol.x[0], 0);
  EXPECT_EQ(sol.x[1], 4);
  EXPECT_TRUE(satisfies(sys, sol.x));
}

TEST(Simplex, FractionalVertex) {
  // min x + y  s.t.  2x + y >= 1,  x + 2y >= 1
  LinearSystem sys;
  sys.num_vars = 2;
  sys.add_row(Coeffs{{0, 2}, {1, 1}}, 1, false);
  sys.add_row(Coeffs{{0, 1}, {1, 2}}, 1, false);
  const auto sol = solve_lp(sys, std::vector<Rational>{1, 1});
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_EQ(sol.objective, Rational(2, 3));
}

TEST(Simplex, InfeasibleHasFarkas) {
  LinearSystem sys;
  sys.num_vars = 2;
  sys.add_row(Coeffs{{0, 1}, {1, 1}}, 1, true);
  sys.add_row(Coeffs{{0, 1}, {1, 1}}, 2, false);
  const auto sol = phase_one(sys);
  ASSERT_EQ(sol.status, LpStatus::infeasible);
  EXPECT_TRUE(is_farkas_certificate(sys, sol.farkas));
  EXPECT_FALSE(is_farkas_certificate(sys, std::vector<Rational>{0, 0}));
}

TEST(Simplex, Unbounded) {
  LinearSystem sys;
  sys.num_vars = 1;
  sys.add_row(Coeffs{{0, 1}}, 1, false);
  EXPECT_EQ(solve_lp(sys, std::vector<Rational>{-1}).status, LpStatus::unbounded);
}

TEST(Relaxation, Dimensions) {
  const auto a = build_relaxation(ColoredBipartiteGraph::complete_double(1));
  EXPECT_EQ(a.num_vars(), 2u);
  EXPECT_EQ(a.num_equalities(), 2u);
  EXPECT_EQ(a.num_labeling_rows(), 2u);
  const auto b = build_relaxation(ColoredBipartiteGraph::complete_double(2));
  EXPECT_EQ(b.num_vars(), 8u);
  EXPECT_EQ(b.num_equalities(), 4u);
  EXPECT_EQ(b.num_labeling_rows(), 8u);
  const auto c = build_relaxation(crossed_square());
  EXPECT_EQ(c.num_vars(), 4u);
  EXPECT_EQ(c.num_equalities(), 4u);
  EXPECT_EQ(c.num_labeling_rows(), 8u);
  EXPECT_EQ(c.to_system().rows.size(), 12u);
}

TEST(Relaxation, RejectsUnequalSides) {
  EXPECT_THROW(build_relaxation(ColoredBipartiteGraph(2, 1, {{0, 0, R}})), std::invalid_argument);
}

TEST(LpFeasible, CompleteDoubleN1Witness) {
  const auto v = lp_feasible(build_relaxation(ColoredBipartiteGraph::complete_double(1)));
  ASSERT_TRUE(v.feasible);
  ASSERT_EQ(v.witness.size(), 2u);
  EXPECT_EQ(v.witness[0], 1);
  EXPECT_EQ(v.witness[1], 0);
  EXPECT_TRUE(v.witness_integral);
}

TEST(LpFeasible, CrossedSquareInfeasible) {
  const auto lp = build_relaxation(crossed_square());
  for (LpMode mode : {LpMode::full, LpMode::lazy}) {
    const auto v = lp_feasible(lp, mode);
    ASSERT_FALSE(v.feasible);
    EXPECT_TRUE(is_farkas_certificate(restricted_system(lp, v.active_rows), v.farkas));
  }
}

TEST(LpFeasible, CompleteDoubleN3Feasible) {
  const auto lp = build_relaxation(ColoredBipartiteGraph::complete_double(3));
  const auto v = lp_feasible(lp);
  ASSERT_TRUE(v.feasible);
  EXPECT_TRUE(witness_satisfies_all(lp, v.witness));
}

TEST(LpFeasible, LazyAgreesWithFullAndOracle) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (2 * n * n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      const auto g = exmatch::testing::graph_from_mask(n, mask);
      for (Parity p : {Parity::odd, Parity::even}) {
        const auto lp = build_relaxation(g, p);
        const bool lazy = lp_feasible(lp, LpMode::lazy).feasible;
        EXPECT_EQ(lazy, lp_feasible(lp, LpMode::full).feasible);
        EXPECT_EQ(lazy, brute_force_parity_decision(g, p));
      }
    }
  }
}

TEST(SlackMatrix, N1) {
  const auto s = build_slack_matrix(ColoredBipartiteGraph::complete_double(1));
  ASSERT_EQ(s.num_rows(), 1u);
  ASSERT_EQ(s.num_cols(), 2u);
  EXPECT_EQ(s.entries.at(0, 0), 0);
  EXPECT_EQ(s.entries.at(0, 1), 0);
}

TEST(SlackMatrix, N2) {
  const auto s = build_slack_matrix(ColoredBipartiteGraph::complete_double(2));
  ASSERT_EQ(s.num_rows(), 4u);
  ASSERT_EQ(s.num_cols(), 8u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const auto& x = s.entries.at(i, j);
      EXPECT_TRUE(x == 0 || x == 2);
    }
}

TEST(SlackMatrix, N3EvenAndBounded) {
  const auto s = build_slack_matrix(ColoredBipartiteGraph::complete_double(3));
  EXPECT_EQ(s.num_rows(), 24u);
  EXPECT_EQ(s.num_cols(), 32u);
  bool saw_two = false;
  for (std::size_t i = 0; i < s.num_rows(); ++i)
    for (std::size_t j = 0; j < s.num_cols(); ++j) {
      const auto& x = s.entries.at(i, j);
      EXPECT_TRUE(x == 0 || x == 2);
      saw_two = saw_two || x == 2;
    }
  EXPECT_TRUE(saw_two);
}

TEST(SlackMatrix, DegreeColumnsAreZero) {
  const auto s = build_slack_matrix(ColoredBipartiteGraph::complete_double(2), Parity::odd, {}, true);
  EXPECT_EQ(s.num_cols(), 8u + 4u);
  for (std::size_t i = 0; i < s.num_rows(); ++i)
    for (std::size_t j = 8; j < s.num_cols(); ++j) EXPECT_EQ(s.entries.at(i, j), 0);
}

TEST(SlackMatrix, CsvRoundTrip) {
  const auto s = build_slack_matrix(ColoredBipartiteGraph::complete_double(3));
  std::stringstream buf;
  write_slack_csv(buf, s);
  EXPECT_EQ(read_matrix_csv(buf), s.entries);
  std::stringstream frac("a,b\nr0,1/2,-3\nr1,0,4\n");
  const auto m = read_matrix_csv(frac);
  ASSERT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.at(0, 0), Rational(1, 2));
  EXPECT_EQ(m.at(1, 1), 4);
}

TEST(SlackMatrix, CsvErrors) {
  std::stringstream ragged("1,2\n3\n");
  EXPECT_THROW(read_matrix_csv(ragged), FormatError);
  std::stringstream junk("1,x\n");
  EXPECT_THROW(read_matrix_csv(junk), FormatError);
}

TEST(SlackMatrix, SidecarIndexesRowsAndColumns) {
  const auto s = build_slack_matrix(ColoredBipartiteGraph::complete_double(2));
  const auto j = nlohmann::json::parse(slack_sidecar_json(s));
  EXPECT_EQ(j["rows"].size(), 4u);
  EXPECT_EQ(j["cols"].size(), 8u);
}
