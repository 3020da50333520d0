#include "exmatch/core/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace exmatch {

bool is_vertex_disjoint(std::span<const Edge> edges) {
  std::unordered_set<std::uint32_t> lefts;
  std::unordered_set<std::uint32_t> rights;
  for (const Edge& e : edges) {
    if (!lefts.insert(e.u).second || !rights.insert(e.v).second) return false;
  }
  return true;
}

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  if (!is_vertex_disjoint(edges_)) throw std::invalid_argument("matching edges share a vertex");
}

std::size_t Matching::red_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_red(); }));
}

bool Matching::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Matching::is_perfect_in(const ColoredBipartiteGraph& g) const {
  if (!g.is_square() || edges_.size() != g.n_left()) return false;
  for (const Edge& e : edges_) {
    if (g.is_complete_double()) {
      if (e.u >= g.n_left() || e.v >= g.n_right()) return false;
    } else if (!g.contains(e)) {
      return false;
    }
  }
  // Vertex-disjointness holds by construction, so n edges cover all 2n vertices.
  return true;
}

}  // namespace exmatch
