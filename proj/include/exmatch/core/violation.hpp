#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "exmatch/core/graph.hpp"
#include "exmatch/core/labeling.hpp"
#include "exmatch/core/matching.hpp"

namespace exmatch {

/// An edge violates a labeling when it is blue with equal endpoint labels or
/// red with unequal endpoint labels.
inline bool violates(const Edge& e, const Labeling& l) {
  const bool equal = l.left(e.u) == l.right(e.v);
  return e.is_red() ? !equal : equal;
}

/// E_L, in graph edge order. Accepts labelings of either parity class.
std::vector<Edge> violation_edges(const ColoredBipartiteGraph& g, const Labeling& l);

/// Unchecked |edges ∩ E_L|.
std::size_t count_violations(std::span<const Edge> edges, const Labeling& l);

/// |M ∩ E_L| for a perfect matching of `g` and a parity-valid labeling.
/// Throws std::invalid_argument on a non-perfect matching, a size mismatch or
/// a labeling outside its declared parity class.
std::size_t violation_count(const Matching& m, const Labeling& l, const ColoredBipartiteGraph& g);

struct ParityIdentity {
  long lhs = 0;  // red edges of M
  long rhs = 0;  // n - |U_1| - |V_1| + 2x
};

/// Both sides of the red-count identity for a matching with no violating
/// edge. Throws std::invalid_argument if M is not perfect or violates L.
ParityIdentity red_parity_identity(const ColoredBipartiteGraph& g, const Matching& m,
                                   const Labeling& l);

}  // namespace exmatch
