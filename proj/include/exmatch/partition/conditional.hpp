#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "exmatch/core/labeling.hpp"
#include "exmatch/core/matching.hpp"
#include "exmatch/core/rational.hpp"
#include "exmatch/partition/blocks.hpp"
#include "exmatch/partition/partition.hpp"

namespace exmatch {

using MatchingPredicate = std::function<bool(const Matching&)>;
using LabelingPredicate = std::function<bool(const Labeling&)>;

/// A rectangle 𝓜 × 𝓛 given by membership tests on each side.
struct RectanglePredicates {
  MatchingPredicate rows;
  LabelingPredicate cols;
};

inline constexpr std::uint64_t kDefaultConditionalCap = 10'000'000;

/// p_{𝓜,T}(M') = Pr over uniform M ∈ M_all(T, M') that M ∈ 𝓜, by
/// enumerating all ((4k)!)^m B-block choices. CapExceeded past `cap`.
Rational matching_probability(const Partition& t, const std::vector<Edge>& c_matching, const MatchingPredicate& in_rows,
                              std::uint64_t cap = kDefaultConditionalCap);

/// p_{𝓛,T}(L') by enumerating all (2^{4k})^m A-block choices.
Rational labeling_probability(const Partition& t, const PairLabels& c_labels, const LabelingPredicate& in_cols,
                              std::uint64_t cap = kDefaultConditionalCap);

/// Per-block membership test for product rectangles: block index (0-based)
/// and the restriction of M (resp. L) to that block.
using BlockMatchingPredicate = std::function<bool(std::size_t, std::span<const Edge>)>;
using BlockLabelingPredicate = std::function<bool(std::size_t, const PairLabels&)>;

/// The same probabilities when membership factors over blocks: a product of
/// per-block fractions, m·(4k)! (resp. m·2^{4k}) evaluations.
Rational matching_probability_product(const Partition& t, const BlockMatchingPredicate& in_block);
Rational labeling_probability_product(const Partition& t, const BlockLabelingPredicate& in_block);

enum class TripleKind { good, small, bad };
std::string triple_kind_name(TripleKind k);

struct ClassifyOptions {
  Rational epsilon = Rational(3, 10);
  Rational delta = Rational(1, 10);
  std::uint64_t cap = kDefaultConditionalCap;  // total enumerated outcomes
};

struct TripleClass {
  TripleKind kind = TripleKind::bad;
  bool m_good = false;
  bool l_good = false;
  bool m_small = false;  // p_M ≤ 2^{-δm}
  bool l_small = false;
  Rational p_m = 0;  // p_{𝓜,T}(M_3(H ∪ D))
  Rational p_l = 0;  // p_{𝓛,T}(L_3(H ∪ D))

  bool good() const { return m_good && l_good; }
  bool small() const { return m_small || l_small; }
  bool m_bad() const { return !m_good && !small(); }
  bool l_bad() const { return !l_good && !small(); }
};

/// 𝓜-good: for every matching M' of D consistent with L_B(D),
/// 0 < p(M_3(H) ∪ M')/(1+ε) ≤ p(M_3(H ∪ D)) ≤ (1+ε)·p(M_3(H) ∪ M'); 𝓛-good
/// likewise over labelings of D consistent with M_A(D). The kind is small
/// whenever a threshold is met, otherwise good or bad.
TripleClass classify_triple(const Triple& x, const RectanglePredicates& r, const ClassifyOptions& opts = {});

}  // namespace exmatch
