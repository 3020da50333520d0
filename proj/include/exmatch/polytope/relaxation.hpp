#pragma once

#include <cstddef>
#include <vector>

#include "exmatch/core/graph.hpp"
#include "exmatch/core/labeling.hpp"
#include "exmatch/core/rational.hpp"
#include "exmatch/oracle/enumeration.hpp"
#include "exmatch/polytope/simplex.hpp"

namespace exmatch {

/// Degree equalities (one per vertex, left then right) plus one covering row
/// Σ_{e∈E_L} x_e ≥ 1 per parity-valid labeling, over one variable per edge.
struct RelaxationLP {
  ColoredBipartiteGraph graph;
  Parity target = Parity::odd;
  std::vector<std::vector<std::size_t>> degree_support;    // per vertex
  std::vector<Labeling> labelings;                         // canonical order
  std::vector<std::vector<std::size_t>> labeling_support;  // E_L as edge indices

  std::size_t num_vars() const { return graph.num_edges(); }
  std::size_t num_equalities() const { return degree_support.size(); }
  std::size_t num_labeling_rows() const { return labelings.size(); }

  /// The full system, equalities first.
  LinearSystem to_system() const;
};

/// Throws CapExceeded past the labeling cap and std::invalid_argument on a
/// graph with unequal sides.
RelaxationLP build_relaxation(const ColoredBipartiteGraph& g, Parity target = Parity::odd,
                              const EnumerationLimits& limits = {});

enum class LpMode {
  full,  // every labeling row from the start
  lazy,  // degree rows, then add violated labeling rows until none is violated
};

struct FeasibilityVerdict {
  bool feasible = false;
  std::vector<Rational> witness;            // per edge, when feasible
  std::vector<std::size_t> active_rows;     // labeling rows in the final system
  std::vector<Rational> farkas;             // over [degree rows | active rows], when infeasible
  std::size_t rounds = 0;
  std::size_t pivots = 0;
  bool witness_integral = false;
};

/// Exact phase-1 feasibility. In lazy mode every round separates exactly over
/// all labeling rows, so the verdict is the same as in full mode; a feasible
/// witness is re-checked against the full system before returning.
FeasibilityVerdict lp_feasible(const RelaxationLP& lp, LpMode mode = LpMode::lazy);

/// The system restricted to the degree rows and the given labeling rows.
LinearSystem restricted_system(const RelaxationLP& lp, const std::vector<std::size_t>& rows);

bool witness_satisfies_all(const RelaxationLP& lp, const std::vector<Rational>& x);

}  // namespace exmatch
