#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exmatch/core/graph.hpp"
#include "exmatch/core/labeling.hpp"
#include "exmatch/core/matching.hpp"
#include "exmatch/solver/bipartite_matching.hpp"
#include "exmatch/solver/relevance.hpp"

namespace exmatch {

enum class ResultKind { matching_found, certificate, no_perfect_matching };

std::string result_kind_name(ResultKind k);

struct SolveStats {
  std::size_t relevant_edges = 0;
  std::size_t components = 0;
  std::size_t forced_components = 0;
  std::size_t rotations = 0;
  double pm_seconds = 0.0;
};

struct ParityResult {
  ResultKind kind = ResultKind::no_perfect_matching;
  std::optional<Matching> matching;
  std::optional<Labeling> certificate;
  std::optional<HallViolator> hall;
  SolveStats stats;
};

/// BFS forest over the relevant edges, one tree per component, and the
/// labeling that makes every tree edge consistent.
///
/// Each tree is rooted at the lowest-index left vertex of its component with
/// label 1 and grown along the matching orientation, so every base matching
/// edge is a tree edge and every non-tree edge runs right → left.
struct TreeLabeling {
  std::vector<std::uint8_t> label;        // per global vertex
  std::vector<std::size_t> parent_edge;   // per global vertex, kNoEdge at roots
  std::vector<std::size_t> parent;        // per global vertex
  std::vector<std::size_t> depth;         // per global vertex
  std::vector<bool> is_tree_edge;         // per edge
};

TreeLabeling bfs_tree_labels(const ColoredBipartiteGraph& g, const RelevanceStructure& s);

/// Directed alternating cycle as edge indices in traversal order, starting
/// with a base matching edge.
struct AlternatingCycle {
  std::vector<std::size_t> edges;
  std::size_t red_count = 0;
  std::size_t violating_count = 0;
};

/// Closes a circuit through `bad_edge` and the lowest common ancestor of its
/// endpoints, splits it into simple directed cycles and returns the first one
/// with an odd number of edges violating the tree labels. Throws
/// InvariantViolation if none exists or the cycle is malformed.
AlternatingCycle extract_parity_flipping_cycle(const ColoredBipartiteGraph& g,
                                               const RelevanceStructure& s,
                                               const TreeLabeling& tree, std::size_t bad_edge);

/// Splits a closed directed walk (edge indices with their tails/heads given by
/// `from`/`to`) into simple cycles, in the order they close.
std::vector<std::vector<std::size_t>> decompose_closed_walk(
    const std::vector<std::size_t>& walk, const std::vector<std::size_t>& from,
    const std::vector<std::size_t>& to);

/// Swaps matched and unmatched edges along the cycle.
std::vector<std::size_t> rotate_along(const ColoredBipartiteGraph& g,
                                      std::vector<std::size_t> mate,
                                      const AlternatingCycle& cycle);

ParityResult solve_parity(const ColoredBipartiteGraph& g, Parity target);

/// Independent result checks. A certificate is accepted when it is
/// parity-valid and every edge it violates lies in no perfect matching
/// (tested by removing the endpoints and re-running maximum matching).
bool verify_matching_result(const ColoredBipartiteGraph& g, Parity target, const Matching& m);
bool verify_certificate(const ColoredBipartiteGraph& g, Parity target, const Labeling& l);
bool verify_result(const ColoredBipartiteGraph& g, Parity target, const ParityResult& r);

/// Whether edge `ei` lies in some perfect matching of `g`.
bool edge_in_some_perfect_matching(const ColoredBipartiteGraph& g, std::size_t ei);

}  // namespace exmatch
