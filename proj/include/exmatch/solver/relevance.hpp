#pragma once

#include <cstddef>
#include <vector>

#include "exmatch/core/graph.hpp"
#include "exmatch/core/matching.hpp"

namespace exmatch {

inline constexpr int kNoComponent = -1;

/// Edges that lie in some perfect matching, grouped into connected
/// components of the relevant-edge subgraph.
///
/// Orientation used throughout: matching edges run left → right, all other
/// edges right → left. Vertices use the global index (right v ↦ n_left + v).
struct RelevanceStructure {
  std::vector<std::size_t> base_mate;       // base matching edge per left vertex
  std::vector<bool> in_base;                // per edge
  std::vector<bool> relevant;               // per edge
  std::vector<int> scc;                     // per global vertex
  std::vector<int> component_of_vertex;     // per global vertex
  std::vector<int> component_of_edge;       // per edge, kNoComponent if irrelevant
  std::vector<std::vector<std::size_t>> components;  // edge indices, ascending
  std::vector<bool> forced;                 // per component: a single edge

  std::size_t num_relevant() const;
};

/// `base_mate[u]` must index a perfect matching of `g`.
RelevanceStructure relevant_edges(const ColoredBipartiteGraph& g,
                                  const std::vector<std::size_t>& base_mate);

/// Same, from a Matching value. Throws std::invalid_argument if `m0` is not a
/// perfect matching of `g`.
RelevanceStructure relevant_edges(const ColoredBipartiteGraph& g, const Matching& m0);

/// Strongly connected components of a directed graph given as adjacency
/// lists. Component ids are assigned in completion order (Tarjan).
std::vector<int> strongly_connected_components(const std::vector<std::vector<std::size_t>>& adj);

}  // namespace exmatch
