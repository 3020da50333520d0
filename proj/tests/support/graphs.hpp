#pragma once

#include <cstdint>
#include <vector>

#include "exmatch/core/graph.hpp"
#include "exmatch/core/rng.hpp"

namespace exmatch::testing {

// Subgraph of G_n keeping edge i of complete_double(n) when bit i of mask is set.
inline ColoredBipartiteGraph graph_from_mask(std::size_t n, std::uint64_t mask) {
  const auto full = ColoredBipartiteGraph::complete_double(n);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < full.num_edges(); ++i)
    if (mask >> i & 1) es.push_back(full.edge(i));
  return ColoredBipartiteGraph(n, n, es);
}

inline ColoredBipartiteGraph random_graph(std::size_t n, double density, Rng& rng) {
  std::vector<Edge> es;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v)
      for (Color c : {Color::red, Color::blue})
        if (rng.unit() < density) es.push_back({u, v, c});
  return ColoredBipartiteGraph(n, n, es);
}

// Random graph that always has a perfect matching: a planted permutation plus noise.
inline ColoredBipartiteGraph planted_graph(std::size_t n, double density, Rng& rng) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);
  std::vector<Color> planted_color(n);
  for (auto& c : planted_color) c = rng.below(2) ? Color::red : Color::blue;
  std::vector<Edge> es;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v)
      for (Color c : {Color::red, Color::blue})
        if ((perm[u] == v && planted_color[u] == c) || rng.unit() < density) es.push_back({u, v, c});
  return ColoredBipartiteGraph(n, n, es);
}

}  // namespace exmatch::testing
