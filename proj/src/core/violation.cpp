#include "exmatch/core/violation.hpp"

#include <stdexcept>

namespace exmatch {

namespace {

void require_fit(const ColoredBipartiteGraph& g, const Labeling& l) {
  if (!l.fits(g)) throw std::invalid_argument("labeling size does not match graph");
}

void require_perfect(const ColoredBipartiteGraph& g, const Matching& m) {
  if (!m.is_perfect_in(g)) throw std::invalid_argument("matching is not a perfect matching of the graph");
}

}  // namespace

std::vector<Edge> violation_edges(const ColoredBipartiteGraph& g, const Labeling& l) {
  require_fit(g, l);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (violates(e, l)) out.push_back(e);
  }
  return out;
}

std::size_t count_violations(std::span<const Edge> edges, const Labeling& l) {
  std::size_t c = 0;
  for (const Edge& e : edges) c += violates(e, l) ? 1 : 0;
  return c;
}

std::size_t violation_count(const Matching& m, const Labeling& l, const ColoredBipartiteGraph& g) {
  require_fit(g, l);
  require_perfect(g, m);
  if (!l.is_parity_valid()) {
    throw std::invalid_argument("labeling is outside the " + parity_name(l.target()) +
                                "-red parity class");
  }
  return count_violations(m.edges(), l);
}

ParityIdentity red_parity_identity(const ColoredBipartiteGraph& g, const Matching& m,
                                   const Labeling& l) {
  require_fit(g, l);
  require_perfect(g, m);
  if (count_violations(m.edges(), l) != 0) {
    throw std::invalid_argument("identity only holds for matchings consistent with the labeling");
  }
  long u1 = 0;
  long v1 = 0;
  for (std::size_t u = 0; u < g.n_left(); ++u) u1 += l.left(u);
  for (std::size_t v = 0; v < g.n_right(); ++v) v1 += l.right(v);
  long x = 0;
  for (const Edge& e : m.edges()) x += (l.left(e.u) == 1 && l.right(e.v) == 1) ? 1 : 0;
  ParityIdentity out;
  out.lhs = static_cast<long>(m.red_count());
  out.rhs = static_cast<long>(g.n_left()) - u1 - v1 + 2 * x;
  return out;
}

}  // namespace exmatch
