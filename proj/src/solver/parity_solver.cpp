#include "exmatch/solver/parity_solver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>

#include "exmatch/core/errors.hpp"
#include "exmatch/core/violation.hpp"

namespace exmatch {

namespace {

// Out-edges along the matching orientation, restricted to relevant edges and
// sorted by (head vertex, edge index).
std::vector<std::vector<std::size_t>> oriented_adjacency(const ColoredBipartiteGraph& g,
                                                         const RelevanceStructure& s) {
  const std::size_t nl = g.n_left();
  std::vector<std::vector<std::size_t>> out(g.num_vertices());
  for (std::size_t ei = 0; ei < g.num_edges(); ++ei) {
    if (!s.relevant[ei]) continue;
    const Edge& e = g.edge(ei);
    if (s.in_base[ei]) {
      out[e.u].push_back(ei);
    } else {
      out[nl + e.v].push_back(ei);
    }
  }
  for (auto& lst : out) {
    std::sort(lst.begin(), lst.end(), [&](std::size_t a, std::size_t b) {
      const std::size_t ha = s.in_base[a] ? nl + g.edge(a).v : g.edge(a).u;
      const std::size_t hb = s.in_base[b] ? nl + g.edge(b).v : g.edge(b).u;
      return ha != hb ? ha < hb : a < b;
    });
  }
  return out;
}

std::size_t tail_of(const ColoredBipartiteGraph& g, const RelevanceStructure& s, std::size_t ei) {
  return s.in_base[ei] ? g.edge(ei).u : g.n_left() + g.edge(ei).v;
}

std::size_t head_of(const ColoredBipartiteGraph& g, const RelevanceStructure& s, std::size_t ei) {
  return s.in_base[ei] ? g.n_left() + g.edge(ei).v : g.edge(ei).u;
}

bool violates_labels(const Edge& e, const std::vector<std::uint8_t>& label, std::size_t nl) {
  const bool equal = label[e.u] == label[nl + e.v];
  return e.is_red() ? !equal : equal;
}

}  // namespace

std::string result_kind_name(ResultKind k) {
  switch (k) {
    case ResultKind::matching_found: return "matching_found";
    case ResultKind::certificate: return "certificate";
    case ResultKind::no_perfect_matching: return "no_perfect_matching";
  }
  return "unknown";
}

TreeLabeling bfs_tree_labels(const ColoredBipartiteGraph& g, const RelevanceStructure& s) {
  const std::size_t nv = g.num_vertices();
  const auto out = oriented_adjacency(g, s);
  TreeLabeling t;
  t.label.assign(nv, 0);
  t.parent_edge.assign(nv, kNoEdge);
  t.parent.assign(nv, kNoEdge);
  t.depth.assign(nv, 0);
  t.is_tree_edge.assign(g.num_edges(), false);
  std::vector<bool> seen(nv, false);
  // Left vertices in index order; the first unseen one of each component is
  // its lowest-index left vertex.
  for (std::size_t root = 0; root < g.n_left(); ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    t.label[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t ei : out[x]) {
        const std::size_t y = head_of(g, s, ei);
        if (seen[y]) continue;
        seen[y] = true;
        t.parent_edge[y] = ei;
        t.parent[y] = x;
        t.depth[y] = t.depth[x] + 1;
        t.is_tree_edge[ei] = true;
        t.label[y] = g.edge(ei).is_red() ? t.label[x] : static_cast<std::uint8_t>(1 - t.label[x]);
        queue.push_back(y);
      }
    }
  }
  return t;
}

std::vector<std::vector<std::size_t>> decompose_closed_walk(const std::vector<std::size_t>& walk,
                                                            const std::vector<std::size_t>& from,
                                                            const std::vector<std::size_t>& to) {
  std::vector<std::vector<std::size_t>> cycles;
  if (walk.empty()) return cycles;
  if (to.back() != from.front()) throw InvariantViolation("decompose_closed_walk: walk is not closed");
  std::vector<std::size_t> verts{from.front()};
  std::vector<std::size_t> stack;
  std::map<std::size_t, std::size_t> pos{{from.front(), 0}};
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (from[i] != verts.back()) throw InvariantViolation("decompose_closed_walk: walk is disconnected");
    stack.push_back(walk[i]);
    const auto it = pos.find(to[i]);
    if (it == pos.end()) {
      pos[to[i]] = verts.size();
      verts.push_back(to[i]);
      continue;
    }
    const std::size_t p = it->second;
    cycles.emplace_back(stack.begin() + static_cast<std::ptrdiff_t>(p), stack.end());
    stack.resize(p);
    for (std::size_t j = p + 1; j < verts.size(); ++j) pos.erase(verts[j]);
    verts.resize(p + 1);
  }
  return cycles;
}

AlternatingCycle extract_parity_flipping_cycle(const ColoredBipartiteGraph& g,
                                               const RelevanceStructure& s,
                                               const TreeLabeling& tree, std::size_t bad_edge) {
  const std::size_t nl = g.n_left();
  if (!s.relevant[bad_edge] || s.in_base[bad_edge] || tree.is_tree_edge[bad_edge]) {
    throw InvariantViolation("extract_parity_flipping_cycle: not a relevant non-tree edge");
  }
  if (!violates_labels(g.edge(bad_edge), tree.label, nl)) {
    throw InvariantViolation("extract_parity_flipping_cycle: edge does not violate the tree labels");
  }
  const std::size_t a = nl + g.edge(bad_edge).v;  // tail
  const std::size_t b = g.edge(bad_edge).u;       // head

  std::size_t x = a, y = b;
  while (tree.depth[x] > tree.depth[y]) x = tree.parent[x];
  while (tree.depth[y] > tree.depth[x]) y = tree.parent[y];
  while (x != y) {
    if (tree.parent[x] == kNoEdge || tree.parent[y] == kNoEdge) {
      throw InvariantViolation("extract_parity_flipping_cycle: endpoints lie in different trees");
    }
    x = tree.parent[x];
    y = tree.parent[y];
  }
  const std::size_t lca = x;

  // Directed BFS path b → lca inside the component.
  std::vector<std::size_t> path;
  if (b != lca) {
    const auto out = oriented_adjacency(g, s);
    std::vector<std::size_t> via(g.num_vertices(), kNoEdge);
    std::vector<bool> seen(g.num_vertices(), false);
    std::deque<std::size_t> queue{b};
    seen[b] = true;
    while (!queue.empty() && !seen[lca]) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t ei : out[v]) {
        const std::size_t w = head_of(g, s, ei);
        if (seen[w]) continue;
        seen[w] = true;
        via[w] = ei;
        queue.push_back(w);
      }
    }
    if (!seen[lca]) throw InvariantViolation("extract_parity_flipping_cycle: component not strongly connected");
    for (std::size_t v = lca; v != b; v = tail_of(g, s, via[v])) path.push_back(via[v]);
    std::reverse(path.begin(), path.end());
  }
  std::size_t path_violations = 0;
  for (std::size_t ei : path) path_violations += violates_labels(g.edge(ei), tree.label, nl) ? 1 : 0;

  auto tree_path_from_lca = [&](std::size_t target) {
    std::vector<std::size_t> p;
    for (std::size_t v = target; v != lca; v = tree.parent[v]) p.push_back(tree.parent_edge[v]);
    std::reverse(p.begin(), p.end());
    return p;
  };

  std::vector<std::size_t> walk = path;
  if (path_violations % 2 == 1) {
    const auto tp = tree_path_from_lca(b);
    walk.insert(walk.end(), tp.begin(), tp.end());
  } else {
    const auto tp = tree_path_from_lca(a);
    walk.insert(walk.end(), tp.begin(), tp.end());
    walk.push_back(bad_edge);
  }
  std::vector<std::size_t> from, to;
  for (std::size_t ei : walk) {
    from.push_back(tail_of(g, s, ei));
    to.push_back(head_of(g, s, ei));
  }

  for (const auto& cyc : decompose_closed_walk(walk, from, to)) {
    AlternatingCycle c;
    for (std::size_t ei : cyc) {
      c.red_count += g.edge(ei).is_red() ? 1 : 0;
      c.violating_count += violates_labels(g.edge(ei), tree.label, nl) ? 1 : 0;
    }
    if (c.violating_count % 2 == 0) continue;
    // Start at the first base matching edge so the cycle reads matched, unmatched, ...
    auto first = std::find_if(cyc.begin(), cyc.end(), [&](std::size_t ei) { return s.in_base[ei]; });
    c.edges.assign(first, cyc.end());
    c.edges.insert(c.edges.end(), cyc.begin(), first);
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
      if (s.in_base[c.edges[i]] != (i % 2 == 0)) {
        throw InvariantViolation("extract_parity_flipping_cycle: cycle does not alternate");
      }
    }
    if (c.red_count % 2 == 0) {
      throw InvariantViolation("extract_parity_flipping_cycle: odd-violation cycle has even red count");
    }
    return c;
  }
  throw InvariantViolation("extract_parity_flipping_cycle: no cycle with an odd number of violations");
}

std::vector<std::size_t> rotate_along(const ColoredBipartiteGraph& g, std::vector<std::size_t> mate,
                                      const AlternatingCycle& cycle) {
  for (std::size_t i = 1; i < cycle.edges.size(); i += 2) {
    const std::size_t ei = cycle.edges[i];
    mate[g.edge(ei).u] = ei;
  }
  return mate;
}

ParityResult solve_parity(const ColoredBipartiteGraph& g, Parity target) {
  ParityResult r;
  const auto t0 = std::chrono::steady_clock::now();
  auto pm = perfect_matching_edges(g);
  r.stats.pm_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!pm) {
    r.kind = ResultKind::no_perfect_matching;
    r.hall = hall_violator(g);
    return r;
  }
  const std::vector<std::size_t>& mate = *pm;
  std::size_t red = 0;
  for (std::size_t ei : mate) red += g.edge(ei).is_red() ? 1 : 0;
  const Parity base = red % 2 == 1 ? Parity::odd : Parity::even;
  if (base == target) {
    r.kind = ResultKind::matching_found;
    r.matching = matching_from_indices(g, mate);
    return r;
  }

  const RelevanceStructure s = relevant_edges(g, mate);
  r.stats.relevant_edges = s.num_relevant();
  r.stats.components = s.components.size();
  r.stats.forced_components = static_cast<std::size_t>(std::count(s.forced.begin(), s.forced.end(), true));
  const TreeLabeling tree = bfs_tree_labels(g, s);

  for (std::size_t ei = 0; ei < g.num_edges(); ++ei) {
    if (!s.relevant[ei] || tree.is_tree_edge[ei]) continue;
    if (!violates_labels(g.edge(ei), tree.label, g.n_left())) continue;
    const AlternatingCycle cyc = extract_parity_flipping_cycle(g, s, tree, ei);
    Matching m = matching_from_indices(g, rotate_along(g, mate, cyc));
    if (m.red_parity() != target) throw InvariantViolation("solve_parity: rotation did not flip parity");
    r.kind = ResultKind::matching_found;
    r.matching = std::move(m);
    r.stats.rotations = 1;
    return r;
  }

  Labeling cert(g.n_left(), tree.label, target);
  if (!cert.is_parity_valid()) {
    throw InvariantViolation("solve_parity: certificate has the wrong ones-count parity");
  }
  r.kind = ResultKind::certificate;
  r.certificate = std::move(cert);
  return r;
}

bool edge_in_some_perfect_matching(const ColoredBipartiteGraph& g, std::size_t ei) {
  if (!g.is_square()) return false;
  const Edge& e = g.edge(ei);
  auto relabel = [](std::uint32_t x, std::uint32_t removed) { return x > removed ? x - 1 : x; };
  std::vector<Edge> rest;
  for (const Edge& f : g.edges()) {
    if (f.u == e.u || f.v == e.v) continue;
    rest.push_back({relabel(f.u, e.u), relabel(f.v, e.v), f.color});
  }
  const ColoredBipartiteGraph h(g.n_left() - 1, g.n_right() - 1, std::move(rest));
  return maximum_matching(h).size == h.n_left();
}

bool verify_matching_result(const ColoredBipartiteGraph& g, Parity target, const Matching& m) {
  return m.is_perfect_in(g) && m.red_parity() == target;
}

bool verify_certificate(const ColoredBipartiteGraph& g, Parity target, const Labeling& l) {
  if (!l.fits(g) || l.target() != target || !l.is_parity_valid()) return false;
  for (std::size_t ei = 0; ei < g.num_edges(); ++ei) {
    if (violates(g.edge(ei), l) && edge_in_some_perfect_matching(g, ei)) return false;
  }
  return true;
}

bool verify_result(const ColoredBipartiteGraph& g, Parity target, const ParityResult& r) {
  switch (r.kind) {
    case ResultKind::matching_found:
      return r.matching && verify_matching_result(g, target, *r.matching);
    case ResultKind::certificate:
      return r.certificate && verify_certificate(g, target, *r.certificate);
    case ResultKind::no_perfect_matching:
      return r.hall && verify_hall_violator(g, *r.hall);
  }
  return false;
}

}  // namespace exmatch
