#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "exmatch/core/graph.hpp"

namespace exmatch {

/// A set of colored edges, no two sharing a vertex. Edges are kept sorted
/// by (u, v, color) so equal matchings compare equal.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Edge> edges);

  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  std::size_t red_count() const;
  Parity red_parity() const { return red_count() % 2 == 1 ? Parity::odd : Parity::even; }
  bool contains(const Edge& e) const;

  /// Every vertex of `g` is covered and every edge belongs to `g`.
  bool is_perfect_in(const ColoredBipartiteGraph& g) const;

  auto operator<=>(const Matching&) const = default;

 private:
  std::vector<Edge> edges_;
};

/// Whether `edges` (any order) pairwise avoid shared endpoints.
bool is_vertex_disjoint(std::span<const Edge> edges);

}  // namespace exmatch
