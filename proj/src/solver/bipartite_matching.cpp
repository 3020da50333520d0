#include "exmatch/solver/bipartite_matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace exmatch {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const ColoredBipartiteGraph& g)
      : g_(g),
        mate_left_(g.n_left(), kNoEdge),
        mate_right_(g.n_right(), kNoEdge),
        dist_(g.n_left(), kInf),
        next_(g.n_left(), 0) {}

  MaximumMatching run() {
    std::size_t size = 0;
    while (bfs()) {
      std::fill(next_.begin(), next_.end(), 0);
      for (std::size_t u = 0; u < g_.n_left(); ++u) {
        if (mate_left_[u] == kNoEdge && dfs(u)) ++size;
      }
    }
    return {mate_left_, size};
  }

 private:
  bool bfs() {
    std::deque<std::size_t> queue;
    for (std::size_t u = 0; u < g_.n_left(); ++u) {
      if (mate_left_[u] == kNoEdge) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t ei : g_.left_incident(u)) {
        const std::size_t me = mate_right_[g_.edge(ei).v];
        if (me == kNoEdge) {
          found = true;
        } else {
          const std::size_t w = g_.edge(me).u;
          if (dist_[w] == kInf) {
            dist_[w] = dist_[u] + 1;
            queue.push_back(w);
          }
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    auto inc = g_.left_incident(u);
    for (; next_[u] < inc.size(); ++next_[u]) {
      const std::size_t ei = inc[next_[u]];
      const std::size_t v = g_.edge(ei).v;
      const std::size_t me = mate_right_[v];
      bool ok = me == kNoEdge;
      if (!ok) {
        const std::size_t w = g_.edge(me).u;
        ok = dist_[w] == dist_[u] + 1 && dfs(w);
      }
      if (ok) {
        mate_left_[u] = ei;
        mate_right_[v] = ei;
        ++next_[u];
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const ColoredBipartiteGraph& g_;
  std::vector<std::size_t> mate_left_;
  std::vector<std::size_t> mate_right_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> next_;
};

}  // namespace

MaximumMatching maximum_matching(const ColoredBipartiteGraph& g) { return HopcroftKarp(g).run(); }

std::optional<std::vector<std::size_t>> perfect_matching_edges(const ColoredBipartiteGraph& g) {
  if (!g.is_square()) return std::nullopt;
  MaximumMatching mm = maximum_matching(g);
  if (mm.size != g.n_left()) return std::nullopt;
  return std::move(mm.mate_edge);
}

Matching matching_from_indices(const ColoredBipartiteGraph& g, const std::vector<std::size_t>& idx) {
  std::vector<Edge> edges;
  edges.reserve(idx.size());
  for (std::size_t ei : idx) edges.push_back(g.edge(ei));
  return Matching(std::move(edges));
}

std::optional<Matching> find_perfect_matching(const ColoredBipartiteGraph& g) {
  auto idx = perfect_matching_edges(g);
  if (!idx) return std::nullopt;
  return matching_from_indices(g, *idx);
}

std::optional<HallViolator> hall_violator(const ColoredBipartiteGraph& g) {
  auto neighbors_of_left = [&](const std::vector<std::uint32_t>& s) {
    std::set<std::uint32_t> nb;
    for (auto u : s)
      for (std::size_t ei : g.left_incident(u)) nb.insert(g.edge(ei).v);
    return std::vector<std::uint32_t>(nb.begin(), nb.end());
  };
  if (g.n_left() != g.n_right()) {
    HallViolator h;
    h.left_side = g.n_left() > g.n_right();
    const std::size_t n = h.left_side ? g.n_left() : g.n_right();
    for (std::size_t i = 0; i < n; ++i) h.set.push_back(static_cast<std::uint32_t>(i));
    if (h.left_side) {
      h.neighbors = neighbors_of_left(h.set);
    } else {
      std::set<std::uint32_t> nb;
      for (std::size_t v = 0; v < g.n_right(); ++v)
        for (std::size_t ei : g.right_incident(v)) nb.insert(g.edge(ei).u);
      h.neighbors.assign(nb.begin(), nb.end());
    }
    return h;
  }
  const MaximumMatching mm = maximum_matching(g);
  if (mm.size == g.n_left()) return std::nullopt;

  std::vector<std::size_t> mate_right(g.n_right(), kNoEdge);
  for (std::size_t u = 0; u < g.n_left(); ++u)
    if (mm.mate_edge[u] != kNoEdge) mate_right[g.edge(mm.mate_edge[u]).v] = mm.mate_edge[u];

  std::size_t root = 0;
  while (mm.mate_edge[root] != kNoEdge) ++root;

  // Alternating reachability from one exposed left vertex (König).
  std::vector<bool> seen_left(g.n_left(), false), seen_right(g.n_right(), false);
  std::deque<std::size_t> queue{root};
  seen_left[root] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t ei : g.left_incident(u)) {
      const std::size_t v = g.edge(ei).v;
      if (seen_right[v]) continue;
      seen_right[v] = true;
      const std::size_t w = g.edge(mate_right[v]).u;
      if (!seen_left[w]) {
        seen_left[w] = true;
        queue.push_back(w);
      }
    }
  }
  HallViolator h;
  for (std::size_t u = 0; u < g.n_left(); ++u)
    if (seen_left[u]) h.set.push_back(static_cast<std::uint32_t>(u));
  for (std::size_t v = 0; v < g.n_right(); ++v)
    if (seen_right[v]) h.neighbors.push_back(static_cast<std::uint32_t>(v));
  return h;
}

bool verify_hall_violator(const ColoredBipartiteGraph& g, const HallViolator& h) {
  std::set<std::uint32_t> s(h.set.begin(), h.set.end());
  std::set<std::uint32_t> nb;
  const std::size_t side = h.left_side ? g.n_left() : g.n_right();
  for (auto x : s) {
    if (x >= side) return false;
    auto inc = h.left_side ? g.left_incident(x) : g.right_incident(x);
    for (std::size_t ei : inc) nb.insert(h.left_side ? g.edge(ei).v : g.edge(ei).u);
  }
  return nb.size() < s.size();
}

}  // namespace exmatch
