#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "exmatch/core/graph.hpp"
#include "exmatch/core/labeling.hpp"
#include "exmatch/core/matching.hpp"
#include "exmatch/partition/partition.hpp"

namespace exmatch {

/// Labels of both vertices of one pair.
struct PairLabel {
  std::size_t pair = 0;
  std::uint8_t u = 0;
  std::uint8_t v = 0;

  bool operator==(const PairLabel&) const = default;
};

/// A labeling of the vertices of some set of pairs.
using PairLabels = std::vector<PairLabel>;

/// A matching and a labeling on the vertices of some set of pairs. Edges
/// use pair indices as vertex indices on both sides.
struct BlockObjects {
  std::vector<Edge> matching;
  PairLabels labels;
};

/// M_A(d) and L_B(d) for an ordered block of 4k pairs. Throws
/// std::invalid_argument unless |d| is a positive multiple of 4.
BlockObjects canonical_block(const PairSeq& d);

/// M_3(h) (straight red edges) and L_3(h) (u=1, v=0). Requires |h| = 3.
BlockObjects violation_core(std::span<const std::size_t> h);

/// M_{4k+3}(C) (straight red edges) and L_{4k+3}(C): u=1, v=0 on the first
/// 2k+3 positions, u=0, v=1 on the last 2k. Requires |c| ≡ 3 (mod 4).
BlockObjects canonical_C(const PairSeq& c);

/// Edges whose endpoints are not both labeled are counted as violating.
std::size_t local_violations(std::span<const Edge> edges, const PairLabels& labels);
bool consistent(std::span<const Edge> edges, const PairLabels& labels);

/// Every perfect matching of the block consistent with `labels` (which
/// must list the pairs of d in order): one per permutation π, edge
/// (d_j, d_π(j)) colored by the labels. (4k)! of them, in lexicographic
/// order of π.
std::vector<std::vector<Edge>> consistent_block_matchings(const PairSeq& d, const PairLabels& labels);
std::vector<Edge> block_matching_from_permutation(const PairSeq& d, const PairLabels& labels,
                                                  std::span<const std::size_t> perm);

/// Every labeling of the block consistent with the all-red matching M_A(d):
/// 2^{4k} of them, bit e of the index labelling both ends of edge e.
std::vector<PairLabels> consistent_block_labelings(const PairSeq& d);
PairLabels block_labeling_from_bits(const PairSeq& d, std::uint64_t bits);

/// Pairs of all blocks of `t` plus C, written into one matching / labeling.
/// Throws if the parts do not cover every vertex exactly once.
Matching assemble_matching(std::size_t n, const std::vector<std::vector<Edge>>& parts);
Labeling assemble_labeling(std::size_t n, const std::vector<PairLabels>& parts);

/// Restrictions to the vertices of a set of pairs. A matching edge with one
/// endpoint outside is omitted.
std::vector<Edge> restrict_matching(const Matching& m, std::span<const std::size_t> pairs);
PairLabels restrict_labeling(const Labeling& l, std::span<const std::size_t> pairs);

/// M ∈ M_all(T): perfect on G_n, M_A on every A-block, consistent with L_B
/// on every B-block, odd number of red edges inside C. On failure `why`
/// receives the reason.
bool in_m_all(const Partition& t, const Matching& m, std::string* why = nullptr);

/// L ∈ L_all(T): L_B on every B-block, consistent with M_A on every
/// A-block, odd number of ones on C.
bool in_l_all(const Partition& t, const Labeling& l, std::string* why = nullptr);

/// M_3(H ∪ D) = M_3(H) ∪ M_A(D) and L_3(H ∪ D) = L_3(H) ∪ L_B(D).
BlockObjects triple_core(const Triple& x);

/// (M, L) is an outcome of the product distribution for x: both are in the
/// M_all/L_all sets of x.t and agree with triple_core(x) on C.
bool generated_by(const Triple& x, const Matching& m, const Labeling& l, std::string* why = nullptr);

}  // namespace exmatch
