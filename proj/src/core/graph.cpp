#include "exmatch/core/graph.hpp"

#include <stdexcept>

namespace exmatch {

char color_code(Color c) { return c == Color::red ? 'R' : 'B'; }

std::string parity_name(Parity p) { return p == Parity::odd ? "odd" : "even"; }

Parity parse_parity(const std::string& s) {
  if (s == "odd") return Parity::odd;
  if (s == "even") return Parity::even;
  throw std::invalid_argument("parity must be 'odd' or 'even', got '" + s + "'");
}

std::uint64_t ColoredBipartiteGraph::key(const Edge& e) {
  return (static_cast<std::uint64_t>(e.u) << 33) | (static_cast<std::uint64_t>(e.v) << 1) |
         static_cast<std::uint64_t>(e.color);
}

ColoredBipartiteGraph::ColoredBipartiteGraph(std::size_t n_left, std::size_t n_right,
                                             std::vector<Edge> edges)
    : n_left_(n_left), n_right_(n_right), edges_(std::move(edges)) {
  left_adj_.assign(n_left_, {});
  right_adj_.assign(n_right_, {});
  index_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= n_left_ || e.v >= n_right_) {
      throw std::invalid_argument("edge (" + std::to_string(e.u + 1) + "," +
                                  std::to_string(e.v + 1) + ") references a missing vertex");
    }
    if (!index_.emplace(key(e), i).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u + 1) + "," +
                                  std::to_string(e.v + 1) + "," + color_code(e.color) + ")");
    }
    left_adj_[e.u].push_back(i);
    right_adj_[e.v].push_back(i);
  }
}

ColoredBipartiteGraph ColoredBipartiteGraph::complete_double(std::size_t n) {
  if (n == 0) throw std::invalid_argument("complete double graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(2 * n * n);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = 0; v < n; ++v) {
      edges.push_back({u, v, Color::red});
      edges.push_back({u, v, Color::blue});
    }
  }
  ColoredBipartiteGraph g(n, n, std::move(edges));
  g.complete_double_ = true;
  return g;
}

std::optional<std::size_t> ColoredBipartiteGraph::find_edge(const Edge& e) const {
  if (e.u >= n_left_ || e.v >= n_right_) return std::nullopt;
  auto it = index_.find(key(e));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ColoredBipartiteGraph build_complete_double(std::size_t n) {
  return ColoredBipartiteGraph::complete_double(n);
}

}  // namespace exmatch
