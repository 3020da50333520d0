#include "exmatch/oracle/gadget.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "exmatch/core/errors.hpp"

namespace exmatch {

GadgetMap gadget_simple_graph(const ColoredBipartiteGraph& g) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> colors_seen;
  for (const Edge& e : g.edges()) colors_seen[{e.u, e.v}] |= 1 << static_cast<int>(e.color);

  GadgetMap map;
  map.copied_edge.assign(g.num_edges(), static_cast<std::size_t>(-1));
  std::vector<Edge> edges;
  for (std::size_t ei = 0; ei < g.num_edges(); ++ei) {
    const Edge& e = g.edge(ei);
    if (colors_seen[{e.u, e.v}] == 3) continue;
    map.copied_edge[ei] = edges.size();
    edges.push_back(e);
  }
  auto nl = static_cast<std::uint32_t>(g.n_left());
  auto nr = static_cast<std::uint32_t>(g.n_right());
  for (const auto& [uv, mask] : colors_seen) {
    if (mask != 3) continue;
    GadgetPair p;
    p.u = uv.first;
    p.v = uv.second;
    p.x_r = nr++;
    p.x_b = nr++;
    p.y_r = nl++;
    p.y_b = nl++;
    const std::array<Edge, 6> six{{{p.u, p.x_r, Color::red},
                                   {p.y_r, p.x_r, Color::blue},
                                   {p.y_r, p.v, Color::blue},
                                   {p.u, p.x_b, Color::blue},
                                   {p.y_b, p.x_b, Color::blue},
                                   {p.y_b, p.v, Color::blue}}};
    for (std::size_t i = 0; i < 6; ++i) {
      p.edges[i] = edges.size();
      edges.push_back(six[i]);
    }
    map.pairs.push_back(p);
  }
  map.simple_graph = ColoredBipartiteGraph(nl, nr, std::move(edges));
  return map;
}

Matching map_matching(const GadgetMap& map, const ColoredBipartiteGraph& g, const Matching& m) {
  const auto& sg = map.simple_graph;
  std::vector<Edge> out;
  for (const Edge& e : m.edges()) {
    const auto ei = g.find_edge(e);
    if (!ei) throw std::invalid_argument("map_matching: edge not in graph");
    if (map.copied_edge[*ei] != static_cast<std::size_t>(-1)) out.push_back(e);
  }
  for (const GadgetPair& p : map.pairs) {
    const bool red = m.contains({p.u, p.v, Color::red});
    const bool blue = m.contains({p.u, p.v, Color::blue});
    std::vector<std::size_t> pick;
    if (red) {
      pick = {0, 2, 4};
    } else if (blue) {
      pick = {3, 5, 1};
    } else {
      pick = {1, 4};
    }
    for (std::size_t i : pick) out.push_back(sg.edge(p.edges[i]));
  }
  return Matching(std::move(out));
}

GadgetCheck check_gadget_bijection(const ColoredBipartiteGraph& g, const EnumerationLimits& limits) {
  GadgetCheck c;
  const GadgetMap map = gadget_simple_graph(g);
  const auto& sg = map.simple_graph;

  std::set<std::tuple<std::uint32_t, std::uint32_t>> pairs;
  for (const Edge& e : sg.edges()) {
    if (!pairs.insert({e.u, e.v}).second) c.simple_graph_simple = false;
  }

  std::set<Matching> images;
  for (const Matching& m : enumerate_perfect_matchings(g, limits)) {
    ++c.multigraph_matchings;
    Matching img = map_matching(map, g, m);
    if (!img.is_perfect_in(sg)) c.images_perfect = false;
    if (img.red_count() != m.red_count()) c.red_count_preserved = false;
    if (!images.insert(std::move(img)).second) c.injective = false;
  }
  EnumerationLimits big = limits;
  big.max_n = std::max<std::size_t>(sg.n_left(), limits.max_n);
  c.simple_matchings = count_perfect_matchings(sg, big);
  return c;
}

}  // namespace exmatch
