#include <gtest/gtest.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <string>

#include "exmatch/bounds/cover_bound.hpp"
#include "exmatch/bounds/hyperplane.hpp"
#include "exmatch/bounds/rank_certificate.hpp"
#include "exmatch/core/violation.hpp"
#include "exmatch/oracle/enumeration.hpp"
#include "exmatch/oracle/gadget.hpp"
#include "exmatch/partition/blocks.hpp"
#include "exmatch/partition/permutation_family.hpp"
#include "exmatch/partition/samplers.hpp"
#include "exmatch/partition/witness.hpp"
#include "exmatch/polytope/relaxation.hpp"
#include "exmatch/polytope/slack_matrix.hpp"
#include "exmatch/solver/parity_solver.hpp"
#include "support/graphs.hpp"

using namespace exmatch;
using exmatch::testing::graph_from_mask;
using exmatch::testing::planted_graph;
using exmatch::testing::random_graph;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimit01 = 30;
constexpr double kLimit02 = 300;
constexpr double kLimit03 = 120;
constexpr double kLimit04 = 60;
constexpr double kLimit05 = 60;
constexpr double kLimit06 = 180;
constexpr double kLimit07 = 60;
constexpr double kLimit08 = 10;
constexpr double kLimit09 = 60;
constexpr double kLimit10 = 120;
constexpr double kLimit11 = 60;

// Corpus sizes.
constexpr int kRandomLpGraphs = 1000;
constexpr int kRandomSolverGraphs = 1000;
constexpr std::size_t kSolverMaxN = 50;
constexpr std::uint64_t kSamples = 100000;
constexpr int kWitnessConfigs = 10000;
constexpr std::size_t kRankCorpus = 20;
constexpr std::size_t kRankCap = 4;
constexpr int kWeightsPerMatrix = 5;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// One line per criterion; the time limit is part of the verdict.
void report(int id, const std::string& what, bool ok, double secs, double limit, const std::string& detail) {
  const bool pass = ok && secs < limit;
  std::printf("criterion %02d %s  %s  [%.1fs / %.0fs]  %s\n", id, pass ? "PASS" : "FAIL", what.c_str(), secs, limit,
              detail.c_str());
  std::fflush(stdout);
  EXPECT_TRUE(ok) << detail;
  EXPECT_LT(secs, limit);
}

// Two-colored ring on L pairs: edge 2i joins (u_i, v_i), edge 2i+1 joins (u_{i+1}, v_i).
std::vector<Edge> ring(std::size_t pairs, std::uint64_t colors) {
  std::vector<Edge> es;
  for (std::uint32_t i = 0; i < pairs; ++i) {
    const auto next = static_cast<std::uint32_t>((i + 1) % pairs);
    es.push_back({i, i, (colors >> (2 * i) & 1) ? Color::red : Color::blue});
    es.push_back({next, i, (colors >> (2 * i + 1) & 1) ? Color::red : Color::blue});
  }
  return es;
}

// A hidden labeling plus only the edges it does not violate, around a planted perfect matching.
// Every perfect matching then has the same red parity.
ColoredBipartiteGraph consistent_graph(std::size_t n, double density, Rng& rng) {
  std::vector<std::uint8_t> bits(2 * n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.below(2));
  const Labeling hidden(n, bits);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);
  std::vector<Edge> es;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v)
      for (Color c : {Color::red, Color::blue}) {
        const Edge e{u, v, c};
        if (violates(e, hidden)) continue;
        if (perm[u] == v || rng.unit() < density) es.push_back(e);
      }
  return ColoredBipartiteGraph(n, n, es);
}

RationalMatrix random_product(std::size_t rows, std::size_t cols, std::size_t r, Rng& rng) {
  RationalMatrix w(rows, r), h(r, cols), s(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < r; ++j) w.at(i, j) = static_cast<long>(rng.below(3));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) h.at(i, j) = static_cast<long>(rng.below(3));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t t = 0; t < r; ++t) s.at(i, j) += w.at(i, t) * h.at(t, j);
  return s;
}

bool all_zero(const RationalMatrix& s) {
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (s.at(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST(Acceptance, C01_EveryOddMatchingViolatesEveryValidLabelingOddly) {
  const auto t0 = Clock::now();
  bool ok = true;
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto g = ColoredBipartiteGraph::complete_double(n);
    const auto ms = enumerate_parity_matchings(g, Parity::odd);
    const auto ls = enumerate_labelings(n, Parity::odd);
    for (const auto& m : ms)
      for (const auto& l : ls) {
        const auto c = violation_count(m, l, g);
        ok = ok && c >= 1 && c % 2 == 1;
        ++pairs;
      }
  }
  report(1, "odd violation count on G_1..G_4", ok, since(t0), kLimit01, std::to_string(pairs) + " pairs");
}

TEST(Acceptance, C02_RelaxationAgreesWithBruteForce) {
  const auto t0 = Clock::now();
  std::size_t graphs = 0, mismatches = 0, bad_certs = 0;
  auto check = [&](const ColoredBipartiteGraph& g, Parity p) {
    const auto lp = build_relaxation(g, p);
    const auto v = lp_feasible(lp);
    if (v.feasible != brute_force_parity_decision(g, p)) ++mismatches;
    if (v.feasible && !witness_satisfies_all(lp, v.witness)) ++bad_certs;
    if (!v.feasible && !is_farkas_certificate(restricted_system(lp, v.active_rows), v.farkas)) ++bad_certs;
    ++graphs;
  };
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (2 * n * n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      const auto g = graph_from_mask(n, mask);
      for (Parity p : {Parity::odd, Parity::even}) check(g, p);
    }
  }
  Rng rng(2024);
  for (int i = 0; i < kRandomLpGraphs; ++i) {
    const std::size_t n = 4 + rng.below(3);
    const auto g = planted_graph(n, 0.15 + 0.3 * rng.unit(), rng);
    check(g, rng.below(2) ? Parity::odd : Parity::even);
  }
  report(2, "LP feasibility equals brute force", mismatches == 0 && bad_certs == 0, since(t0), kLimit02,
         std::to_string(graphs) + " instances, " + std::to_string(mismatches) + " mismatches, " +
             std::to_string(bad_certs) + " bad certificates");
}

TEST(Acceptance, C03_SolverVerifiedAndMatchesOracle) {
  const auto t0 = Clock::now();
  std::size_t solved = 0, unverified = 0, mismatches = 0, certificates = 0;
  Rng rng(77);
  for (int i = 0; i < kRandomSolverGraphs; ++i) {
    const std::size_t n = 2 + rng.below(kSolverMaxN - 1);
    const double density = (1.0 + 3.0 * rng.unit()) / static_cast<double>(n);
    ColoredBipartiteGraph g;
    switch (i % 3) {
      case 0: g = planted_graph(n, density, rng); break;
      case 1: g = consistent_graph(n, density, rng); break;
      default: g = random_graph(n, 2 * density, rng); break;
    }
    for (Parity p : {Parity::odd, Parity::even}) {
      const auto r = solve_parity(g, p);
      if (!verify_result(g, p, r)) ++unverified;
      if (r.kind == ResultKind::certificate) ++certificates;
      ++solved;
    }
  }
  std::size_t oracle_checked = 0;
  auto against_oracle = [&](const ColoredBipartiteGraph& g, Parity p) {
    const auto r = solve_parity(g, p);
    if (!verify_result(g, p, r)) ++unverified;
    if ((r.kind == ResultKind::matching_found) != brute_force_parity_decision(g, p)) ++mismatches;
    ++oracle_checked;
  };
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (2 * n * n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      const auto g = graph_from_mask(n, mask);
      for (Parity p : {Parity::odd, Parity::even}) against_oracle(g, p);
    }
  }
  for (int i = 0; i < kRandomSolverGraphs; ++i) {
    const std::size_t n = 4 + rng.below(3);
    const auto g = i % 2 ? planted_graph(n, 0.1 + 0.3 * rng.unit(), rng) : consistent_graph(n, 0.4, rng);
    for (Parity p : {Parity::odd, Parity::even}) against_oracle(g, p);
  }
  report(3, "parity solver verified, verdicts match oracle", unverified == 0 && mismatches == 0 && certificates > 0,
         since(t0), kLimit03,
         std::to_string(solved) + " large solves (" + std::to_string(certificates) + " certificates), " +
             std::to_string(oracle_checked) + " oracle checks, " + std::to_string(unverified) + " unverified, " +
             std::to_string(mismatches) + " mismatches");
}

TEST(Acceptance, C04_EvenCycleRedParityEqualsViolationParity) {
  const auto t0 = Clock::now();
  bool ok = true;
  std::size_t cases = 0, solver_runs = 0;
  for (std::size_t pairs = 1; pairs <= 5; ++pairs) {
    const std::size_t len = 2 * pairs;
    for (std::uint64_t colors = 0; colors < (std::uint64_t{1} << len); ++colors) {
      const auto es = ring(pairs, colors);
      std::size_t red = 0;
      for (const Edge& e : es) red += e.color == Color::red;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
        std::vector<std::uint8_t> vals(len);
        for (std::size_t i = 0; i < len; ++i) vals[i] = static_cast<std::uint8_t>(bits >> i & 1);
        const auto viol = count_violations(es, Labeling(pairs, vals));
        ok = ok && (red % 2 == 1) == (viol % 2 == 1);
        ++cases;
      }
      // The two perfect matchings of the ring differ in parity exactly when the red count is odd.
      if (pairs >= 2) {
        const ColoredBipartiteGraph g(pairs, pairs, es);
        for (Parity p : {Parity::odd, Parity::even}) {
          const auto r = solve_parity(g, p);
          ok = ok && verify_result(g, p, r);
          if (red % 2 == 1) ok = ok && r.kind == ResultKind::matching_found;
          ++solver_runs;
        }
      }
    }
  }
  report(4, "even two-colored cycles up to length 10", ok, since(t0), kLimit04,
         std::to_string(cases) + " (coloring, labeling) cases, " + std::to_string(solver_runs) + " solver runs");
}

TEST(Acceptance, C05_GadgetBijection) {
  const auto t0 = Clock::now();
  std::size_t graphs = 0, failures = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (2 * n * n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      failures += !check_gadget_bijection(graph_from_mask(n, mask)).ok();
      ++graphs;
    }
  }
  report(5, "gadget red-count-preserving bijection, n <= 3", failures == 0, since(t0), kLimit05,
         std::to_string(graphs) + " multigraphs, " + std::to_string(failures) + " failures");
}

TEST(Acceptance, C06_SamplerInvariants) {
  const auto t0 = Clock::now();
  std::size_t bad = 0;
  for (std::size_t m : {1, 2}) {
    const std::size_t n = partition_size(1, m);
    for (std::uint64_t seed = 0; seed < kSamples; ++seed) {
      const auto s = sample_mu3(n, 1, m, seed);
      const bool good = s.violations == 3 && s.matching.red_parity() == Parity::odd && s.labeling.is_parity_valid() &&
                        generated_by(s.triple, s.matching, s.labeling) && in_m_all(s.triple.t, s.matching) &&
                        in_l_all(s.triple.t, s.labeling);
      bad += !good;
    }
  }
  for (std::uint64_t seed = 0; seed < kSamples; ++seed) {
    const auto s = sample_mu4k3(15, 1, 1, seed);
    bool good = s.violations == 7 && s.matching.red_parity() == Parity::odd && s.labeling.is_parity_valid() &&
                in_m_all(s.partition, s.matching) && in_l_all(s.partition, s.labeling);
    for (const Edge& e : s.matching.edges())
      if (violates(e, s.labeling))
        good = good && std::find(s.partition.c_set.begin(), s.partition.c_set.end(), e.u) != s.partition.c_set.end();
    bad += !good;
  }
  report(6, "mu3 (m=1,2) and mu7 samples in their supports", bad == 0, since(t0), kLimit06,
         std::to_string(3 * kSamples) + " samples, " + std::to_string(bad) + " bad");
}

TEST(Acceptance, C07_GeneratorDistributionsEqual) {
  const auto t0 = Clock::now();
  const auto f = find_verified_family(1, 1).family;
  bool ok = true;
  for (const PairSeq& c : {PairSeq{0, 1, 2, 3, 4, 5, 6}, PairSeq{2, 5, 7, 9, 11, 13, 14}}) {
    const auto a = enumerate_mu3_generator(c);
    const auto b = enumerate_alternative_generator(c, f);
    ok = ok && a.same_as(b) && a.counts.size() == 840;
  }
  report(7, "direct and family-based generators agree exactly (k=1)", ok, since(t0), kLimit07,
         "two C sets, 840 outcomes each");
}

TEST(Acceptance, C08_VerifiedFamilyPersisted) {
  const auto t0 = Clock::now();
  const auto s = find_verified_family(1, 1, 10000);
  bool ok = s.check.ok && s.check.largest_unseparated < 10 && verify_family(s.family, all_triples(5));
  const std::string out = std::string(EXMATCH_OUTDIR) + "/family_k1.json";
  write_family_file(out, s.family);
  ok = ok && read_family_file(out) == s.family;
  ok = ok && read_family_file(std::string(EXMATCH_FIXTURES) + "/family_k1.json") == s.family;
  report(8, "k=1 family verified exhaustively and matches fixture", ok, since(t0), kLimit08,
         std::to_string(s.attempts) + " attempts, largest unseparated " +
             std::to_string(s.check.largest_unseparated));
}

TEST(Acceptance, C09_OneViolationWitnesses) {
  const auto t0 = Clock::now();
  Rng rng(909);
  std::size_t bad = 0, by_branch[2] = {0, 0};
  for (int i = 0; i < kWitnessConfigs; ++i) {
    // Disjoint cores need 2k+2 >= 6 pairs beside the shared ones, so k=1 only has the shared-pair branch.
    const std::size_t k = i % 4 == 0 ? 1 : 2;
    const std::size_t inter = k == 1 ? 1 : rng.below(2);
    const auto w = random_witness_config(k, 1 + rng.below(2), inter, rng);
    const auto out = one_violation_witness(w);
    bad += !out.checks.all() || out.intersection != inter;
    ++by_branch[inter];
  }
  report(9, "one-violation witnesses for k=1,2", bad == 0 && by_branch[0] > 0 && by_branch[1] > 0, since(t0), kLimit09,
         std::to_string(by_branch[0]) + " disjoint, " + std::to_string(by_branch[1]) + " shared, " +
             std::to_string(bad) + " failed");
}

TEST(Acceptance, C10_HyperplaneBoundBelowNonnegativeRank) {
  const auto t0 = Clock::now();
  std::vector<std::pair<RationalMatrix, std::size_t>> corpus;
  auto add = [&](const RationalMatrix& s) {
    if (all_zero(s)) return;
    const auto r = certify_nonnegative_rank(s);
    if (r.exact() && r.upper <= kRankCap) corpus.emplace_back(s, r.upper);
  };
  add(RationalMatrix{{1, 0}, {0, 1}});
  add(RationalMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  add(RationalMatrix{{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  Rng rng(1010);
  while (corpus.size() < kRankCorpus + 3)
    add(random_product(3 + rng.below(4), 3 + rng.below(4), 1 + rng.below(kRankCap), rng));

  std::size_t bounds = 0, above = 0, uncertified = 0;
  for (const auto& [s, rank] : corpus) {
    for (int t = 0; t < kWeightsPerMatrix; ++t) {
      WeightMatrix w(s.rows(), s.cols());
      for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) {
          if (s.at(i, j) == 0 && rng.below(5) == 0) w.at(i, j) = Weight::forbidden();
          else w.at(i, j) = Weight(static_cast<long>(rng.below(7)) - 3);
        }
      if (!w.has_positive()) continue;
      bool clash = false;
      for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) clash = clash || (w.at(i, j).is_forbidden() && s.at(i, j) != 0);
      if (clash) continue;
      const auto b = hyperplane_bound(s, w);
      if (!b.defined) continue;
      ++bounds;
      uncertified += !b.certified;
      above += b.value > Rational(static_cast<long>(rank));
    }
  }
  const auto i2 = hyperplane_bound(RationalMatrix{{1, 0}, {0, 1}}, WeightMatrix(RationalMatrix{{1, -1}, {-1, 1}}));
  const bool i2_ok = i2.defined && i2.certified && i2.value == 2;
  report(10, "hyperplane bound <= certified rank+", above == 0 && uncertified == 0 && i2_ok && bounds > 0, since(t0),
         kLimit10,
         std::to_string(corpus.size()) + " matrices, " + std::to_string(bounds) + " bounds, " +
             std::to_string(above) + " above rank+, I2 bound " + i2.value.str());
}

TEST(Acceptance, C11_SlackMatricesAndCover) {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto s = build_slack_matrix(ColoredBipartiteGraph::complete_double(n));
    const Rational top(static_cast<long>(n - 1));
    for (std::size_t i = 0; i < s.num_rows(); ++i)
      for (std::size_t j = 0; j < s.num_cols(); ++j) {
        const auto& x = s.entries.at(i, j);
        ok = ok && x >= 0 && x <= top && denominator(x) == 1 && numerator(x) % 2 == 0;
      }
    if (all_zero(s.entries)) {
      // Empty cover and zero factorization.
      detail += "n=" + std::to_string(n) + " zero, ";
      continue;
    }
    const auto cover = rectangle_cover_bound(s.entries);
    const auto rank = certify_nonnegative_rank(s.entries);
    ok = ok && verify_factorization(s.entries, rank.witness) && cover.value <= Rational(static_cast<long>(rank.upper));
    detail += "n=" + std::to_string(n) + " cover " + cover.value.str() + " <= " + std::to_string(rank.upper) +
              " (" + rank.upper_source + ")";
  }
  report(11, "slack entries even in [0, n-1], cover <= certified upper", ok, since(t0), kLimit11, detail);
}
