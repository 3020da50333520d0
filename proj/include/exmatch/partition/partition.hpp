#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "exmatch/core/rng.hpp"

namespace exmatch {

/// Pair index i stands for the vertex pair (u_i, v_i) of G_n. Pair indices
/// are 0-based throughout.
using PairSeq = std::vector<std::size_t>;

/// n = 4k(2m+1)+3.
std::size_t partition_size(std::size_t k, std::size_t m);

/// T = (A, C, B): m ordered A-blocks and m ordered B-blocks of 4k pairs,
/// plus the remaining 4k+3 pairs as an unordered (sorted) set C.
struct Partition {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::vector<PairSeq> a_blocks;
  std::vector<PairSeq> b_blocks;
  PairSeq c_set;

  std::size_t block_len() const { return 4 * k; }

  bool operator==(const Partition&) const = default;
};

/// Throws std::invalid_argument describing the first broken invariant.
void validate_partition(const Partition& t);

/// Uniform partition: a uniform shuffle of all pairs cut into A-blocks,
/// B-blocks and C in that order. Throws std::invalid_argument unless
/// n = 4k(2m+1)+3 with k, m ≥ 1.
Partition sample_partition(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed);
Partition sample_partition(std::size_t k, std::size_t m, Rng& rng);

/// (T, H, D): three core pairs H (sorted) and an ordering D = D1 ⊔ D2 of the
/// other 4k pairs of C.
struct Triple {
  Partition t;
  std::array<std::size_t, 3> h{};
  PairSeq d;

  PairSeq d1() const { return PairSeq(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(2 * t.k)); }
  PairSeq d2() const { return PairSeq(d.begin() + static_cast<std::ptrdiff_t>(2 * t.k), d.end()); }

  bool operator==(const Triple&) const = default;
};

void validate_triple(const Triple& x);

}  // namespace exmatch
