#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "exmatch/core/labeling.hpp"
#include "exmatch/core/matching.hpp"
#include "exmatch/partition/partition.hpp"

namespace exmatch {

/// c_k = (4k)!. Throws CapExceeded when it does not fit in 64 bits.
std::uint64_t block_matching_count(std::size_t k);

/// Number of B-blocks with M_{B_i} = M_A(B_i).
std::size_t canonical_b_blocks(const Partition& t, const Matching& m);
/// Number of A-blocks with L_{A_i} = L_B(A_i).
std::size_t canonical_a_blocks(const Partition& t, const Labeling& l);

/// At least an m/(2·(4k)!) share of blocks agree with the canonical object.
bool is_balanced_matching(const Partition& t, const Matching& m);
bool is_balanced_labeling(const Partition& t, const Labeling& l);

/// J(T, L): 0 (standing for D) plus every 1-based i with L_{A_i} = L_B(A_i).
std::vector<std::size_t> j_set(const Triple& x, const Labeling& l);

/// T^i: D and A_i exchanged, C becoming H ∪ A_i. i = 0 is the identity.
/// Throws std::invalid_argument unless i ∈ J(T, L).
Triple block_swap(const Triple& x, const Labeling& l, std::size_t i);

}  // namespace exmatch
