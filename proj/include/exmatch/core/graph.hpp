#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace exmatch {

enum class Color : std::uint8_t { red = 0, blue = 1 };

/// Red-edge parity a matching should have. Labelings carry the same tag to
/// select which parity class they belong to.
enum class Parity : std::uint8_t { odd = 0, even = 1 };

char color_code(Color c);
std::string parity_name(Parity p);
Parity parse_parity(const std::string& s);

/// A colored edge between left vertex `u` and right vertex `v` (0-based).
struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  Color color = Color::red;

  auto operator<=>(const Edge&) const = default;
  bool is_red() const { return color == Color::red; }
};

/// Bipartite multigraph with red/blue edges. Parallel edges are allowed as
/// long as they differ in color.
///
/// Vertices are addressed per side (`u` in [0, n_left), `v` in [0, n_right)).
/// Where a single index space is needed, left vertex u maps to u and right
/// vertex v maps to n_left + v.
class ColoredBipartiteGraph {
 public:
  ColoredBipartiteGraph() = default;
  ColoredBipartiteGraph(std::size_t n_left, std::size_t n_right, std::vector<Edge> edges);

  /// G_n: every (u, v) joined by one red and one blue edge.
  static ColoredBipartiteGraph complete_double(std::size_t n);

  std::size_t n_left() const { return n_left_; }
  std::size_t n_right() const { return n_right_; }
  std::size_t num_vertices() const { return n_left_ + n_right_; }
  std::size_t num_edges() const { return edges_.size(); }
  bool is_square() const { return n_left_ == n_right_; }
  bool is_complete_double() const { return complete_double_; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  std::optional<std::size_t> find_edge(const Edge& e) const;
  bool contains(const Edge& e) const { return find_edge(e).has_value(); }

  /// Edge indices incident to a left / right vertex, in edge order.
  std::span<const std::size_t> left_incident(std::size_t u) const { return left_adj_[u]; }
  std::span<const std::size_t> right_incident(std::size_t v) const { return right_adj_[v]; }

  std::size_t right_global(std::size_t v) const { return n_left_ + v; }

 private:
  static std::uint64_t key(const Edge& e);

  std::size_t n_left_ = 0;
  std::size_t n_right_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> left_adj_;
  std::vector<std::vector<std::size_t>> right_adj_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  bool complete_double_ = false;
};

ColoredBipartiteGraph build_complete_double(std::size_t n);

}  // namespace exmatch
