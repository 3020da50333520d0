#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>

#include "exmatch/core/labeling.hpp"
#include "exmatch/core/matching.hpp"
#include "exmatch/core/rational.hpp"
#include "exmatch/core/rng.hpp"
#include "exmatch/partition/blocks.hpp"
#include "exmatch/partition/partition.hpp"
#include "exmatch/partition/permutation_family.hpp"
#include "json.hpp"

namespace exmatch {

/// Uniform M ∈ M_all(T, M') for a fixed perfect matching M' of C: M_A on
/// A-blocks, a uniform consistent matching on every B-block.
Matching sample_matching_given(const Partition& t, const std::vector<Edge>& c_matching, Rng& rng);

/// Uniform L ∈ L_all(T, L'): L_B on B-blocks, a uniform labeling consistent
/// with M_A on every A-block.
Labeling sample_labeling_given(const Partition& t, const PairLabels& c_labels, Rng& rng);

struct Mu3Sample {
  std::uint64_t seed = 0;
  Triple triple;
  Matching matching;
  Labeling labeling;
  std::size_t violations = 0;
};

struct Mu4k3Sample {
  std::uint64_t seed = 0;
  Partition partition;
  PairSeq c_order;
  Matching matching;
  Labeling labeling;
  std::size_t violations = 0;
};

Mu3Sample sample_mu3(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed);
Mu4k3Sample sample_mu4k3(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed);
/// Throws std::invalid_argument if the family was built for another k.
Mu3Sample alternative_sample_mu3(std::size_t n, std::size_t k, std::size_t m, const PermutationFamily& family,
                                 std::uint64_t seed);

/// (H, D) as produced by the generators.
using HdOutcome = std::pair<std::array<std::size_t, 3>, PairSeq>;

/// H = the first three pairs of the ordering, D = the rest in order.
HdOutcome mu3_split(const PairSeq& c_order);

/// F = first 2k+3 pairs, D2 = last 2k. H = F at the 1-based positions
/// `pos`, D1[σ_pos(x)] = F[x] for x ∉ pos, D = D1 ⊔ D2.
HdOutcome alternative_split(const PairSeq& c_order, const Triple3& pos, const PermutationFamily& family);

/// Exact distribution of (H, D) by enumerating every random choice of a
/// generator for a fixed C: counts over `total` equally likely outcomes.
struct HdDistribution {
  std::map<HdOutcome, std::uint64_t> counts;
  std::uint64_t total = 0;

  Rational probability(const HdOutcome& o) const;
  /// Equal as rational distributions.
  bool same_as(const HdDistribution& other) const;
};

/// |C|! orderings.
HdDistribution enumerate_mu3_generator(const PairSeq& c_set);
/// |C|! orderings × C(2k+3, 3) positions.
HdDistribution enumerate_alternative_generator(const PairSeq& c_set, const PermutationFamily& family);

nlohmann::ordered_json partition_json(const Partition& t);
nlohmann::ordered_json matching_json(const Matching& m);
/// {seed, T, H, D, M, L, violations}
nlohmann::ordered_json sample_json(const Mu3Sample& s);
/// {seed, T, C, M, L, violations}
nlohmann::ordered_json sample_json(const Mu4k3Sample& s);

}  // namespace exmatch
