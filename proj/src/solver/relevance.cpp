#include "exmatch/solver/relevance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "exmatch/solver/bipartite_matching.hpp"

namespace exmatch {

std::size_t RelevanceStructure::num_relevant() const {
  return static_cast<std::size_t>(std::count(relevant.begin(), relevant.end(), true));
}

std::vector<int> strongly_connected_components(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> comp(n, -1);
  std::vector<std::size_t> index(n, 0), low(n, 0);
  std::vector<bool> visited(n, false), on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  int next_comp = 0;

  struct Frame {
    std::size_t v;
    std::size_t child;
  };
  std::vector<Frame> call;

  for (std::size_t root = 0; root < n; ++root) {
    if (visited[root]) continue;
    call.push_back({root, 0});
    visited[root] = true;
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < adj[f.v].size()) {
        const std::size_t w = adj[f.v][f.child++];
        if (!visited[w]) {
          visited[w] = true;
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
        } while (w != v);
        ++next_comp;
      }
    }
  }
  return comp;
}

RelevanceStructure relevant_edges(const ColoredBipartiteGraph& g,
                                  const std::vector<std::size_t>& base_mate) {
  const std::size_t nl = g.n_left();
  const std::size_t nv = g.num_vertices();
  const std::size_t ne = g.num_edges();
  RelevanceStructure s;
  s.base_mate = base_mate;
  s.in_base.assign(ne, false);
  for (std::size_t ei : base_mate) s.in_base[ei] = true;

  std::vector<std::vector<std::size_t>> adj(nv);
  for (std::size_t ei = 0; ei < ne; ++ei) {
    const Edge& e = g.edge(ei);
    if (s.in_base[ei]) {
      adj[e.u].push_back(nl + e.v);
    } else {
      adj[nl + e.v].push_back(e.u);
    }
  }
  s.scc = strongly_connected_components(adj);

  s.relevant.assign(ne, false);
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t ei = 0; ei < ne; ++ei) {
    const Edge& e = g.edge(ei);
    if (s.in_base[ei] || s.scc[e.u] == s.scc[nl + e.v]) {
      s.relevant[ei] = true;
      const std::size_t a = find(e.u), b = find(nl + e.v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  // Number components by their lowest global vertex.
  s.component_of_vertex.assign(nv, kNoComponent);
  std::vector<int> id_of_root(nv, kNoComponent);
  int next = 0;
  for (std::size_t x = 0; x < nv; ++x) {
    const std::size_t r = find(x);
    if (id_of_root[r] == kNoComponent) id_of_root[r] = next++;
    s.component_of_vertex[x] = id_of_root[r];
  }
  s.components.assign(static_cast<std::size_t>(next), {});
  s.component_of_edge.assign(ne, kNoComponent);
  for (std::size_t ei = 0; ei < ne; ++ei) {
    if (!s.relevant[ei]) continue;
    const int c = s.component_of_vertex[g.edge(ei).u];
    s.component_of_edge[ei] = c;
    s.components[static_cast<std::size_t>(c)].push_back(ei);
  }
  s.forced.resize(s.components.size());
  for (std::size_t c = 0; c < s.components.size(); ++c) s.forced[c] = s.components[c].size() == 1;
  return s;
}

RelevanceStructure relevant_edges(const ColoredBipartiteGraph& g, const Matching& m0) {
  if (!m0.is_perfect_in(g)) throw std::invalid_argument("relevant_edges: base matching is not perfect");
  std::vector<std::size_t> mate(g.n_left(), kNoEdge);
  for (const Edge& e : m0.edges()) mate[e.u] = *g.find_edge(e);
  return relevant_edges(g, mate);
}

}  // namespace exmatch
