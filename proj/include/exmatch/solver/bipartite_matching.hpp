#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "exmatch/core/graph.hpp"
#include "exmatch/core/matching.hpp"

namespace exmatch {

inline constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

/// Maximum matching as edge indices: mate_edge[u] is the edge matched at left
/// vertex u, or kNoEdge.
struct MaximumMatching {
  std::vector<std::size_t> mate_edge;
  std::size_t size = 0;
};

/// Hopcroft–Karp. Vertices and incidence lists are scanned in index order, so
/// the result depends only on the graph's edge order.
MaximumMatching maximum_matching(const ColoredBipartiteGraph& g);

/// Perfect matching as one edge index per left vertex, or none.
std::optional<std::vector<std::size_t>> perfect_matching_edges(const ColoredBipartiteGraph& g);

std::optional<Matching> find_perfect_matching(const ColoredBipartiteGraph& g);

/// A vertex set S on one side with |N(S)| < |S|.
struct HallViolator {
  bool left_side = true;
  std::vector<std::uint32_t> set;
  std::vector<std::uint32_t> neighbors;
};

/// Returns a Hall violator when `g` has no perfect matching.
std::optional<HallViolator> hall_violator(const ColoredBipartiteGraph& g);

/// Checks |N(S)| < |S| directly against the graph.
bool verify_hall_violator(const ColoredBipartiteGraph& g, const HallViolator& h);

Matching matching_from_indices(const ColoredBipartiteGraph& g, const std::vector<std::size_t>& idx);

}  // namespace exmatch
