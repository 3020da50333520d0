#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "exmatch/core/graph.hpp"
#include "exmatch/core/labeling.hpp"
#include "exmatch/core/matching.hpp"

namespace exmatch {

struct EnumerationLimits {
  std::size_t max_n = 8;              // perfect matchings: n_left = n_right ≤ max_n
  std::size_t max_label_vertices = 24;  // labelings: 2n ≤ this
  unsigned threads = 1;
};

/// Perfect matchings as edge-index vectors (one edge per left vertex, indexed
/// by u), produced in canonical order: lexicographic by the permutation
/// u ↦ v, then by the color vector with red before blue.
///
/// Throws CapExceeded when n exceeds `limits.max_n`. With threads > 1 the
/// first-level branches run concurrently and are replayed in order, so the
/// callback always sees the canonical sequence.
void for_each_perfect_matching(const ColoredBipartiteGraph& g,
                               const std::function<void(const std::vector<std::size_t>&)>& fn,
                               const EnumerationLimits& limits = {});

std::vector<Matching> enumerate_perfect_matchings(const ColoredBipartiteGraph& g,
                                                  const EnumerationLimits& limits = {});

std::size_t count_perfect_matchings(const ColoredBipartiteGraph& g,
                                    const EnumerationLimits& limits = {});

std::vector<Matching> enumerate_exact_k(const ColoredBipartiteGraph& g, std::size_t k,
                                        const EnumerationLimits& limits = {});

/// Perfect matchings whose red count has the given parity, canonical order.
std::vector<Matching> enumerate_parity_matchings(const ColoredBipartiteGraph& g, Parity target,
                                                 const EnumerationLimits& limits = {});

/// All labelings of an n+n graph in the target's parity class, ascending by
/// bitstring u_1..u_n v_1..v_n.
std::vector<Labeling> enumerate_labelings(std::size_t n, Parity target,
                                          const EnumerationLimits& limits = {});

bool brute_force_parity_decision(const ColoredBipartiteGraph& g, Parity target,
                                 const EnumerationLimits& limits = {});

/// Per edge: does it lie in some perfect matching, by enumeration.
std::vector<bool> brute_force_relevant_edges(const ColoredBipartiteGraph& g,
                                             const EnumerationLimits& limits = {});

}  // namespace exmatch
