#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "exmatch/core/graph.hpp"
#include "exmatch/core/matching.hpp"
#include "exmatch/oracle/enumeration.hpp"

namespace exmatch {

/// One red/blue parallel pair (u, v) and its subdivision. x_r, x_b are new
/// right vertices, y_r, y_b new left vertices; `edges` index into the simple
/// graph in the order
///   (u,x_r,R) (y_r,x_r,B) (y_r,v,B) (u,x_b,B) (y_b,x_b,B) (y_b,v,B).
struct GadgetPair {
  std::uint32_t u = 0, v = 0;
  std::uint32_t x_r = 0, x_b = 0;
  std::uint32_t y_r = 0, y_b = 0;
  std::array<std::size_t, 6> edges{};
};

struct GadgetMap {
  ColoredBipartiteGraph simple_graph;
  std::vector<GadgetPair> pairs;          // ordered by (u, v)
  std::vector<std::size_t> copied_edge;   // original edge → simple edge, or npos for paired edges
};

/// Replaces every red/blue parallel pair by two length-3 paths; single-color
/// edges are copied first, in their original order, followed by the six edges
/// of each pair.
GadgetMap gadget_simple_graph(const ColoredBipartiteGraph& g);

/// Image of a perfect matching of `g` in the simple graph: a red pair edge
/// becomes (u,x_r),(y_r,v),(x_b,y_b), a blue one (u,x_b),(y_b,v),(x_r,y_r),
/// and an unused pair (x_r,y_r),(x_b,y_b).
Matching map_matching(const GadgetMap& map, const ColoredBipartiteGraph& g, const Matching& m);

struct GadgetCheck {
  std::size_t multigraph_matchings = 0;
  std::size_t simple_matchings = 0;
  bool injective = true;
  bool images_perfect = true;
  bool red_count_preserved = true;
  bool simple_graph_simple = true;

  bool ok() const {
    return injective && images_perfect && red_count_preserved && simple_graph_simple &&
           multigraph_matchings == simple_matchings;
  }
};

/// Enumerates both sides and checks the map is a red-count-preserving
/// bijection. `limits.max_n` applies to the original graph; the simple graph
/// is enumerated without a size cap since its matchings are in bijection.
GadgetCheck check_gadget_bijection(const ColoredBipartiteGraph& g, const EnumerationLimits& limits = {});

}  // namespace exmatch
