#include "exmatch/polytope/relaxation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "exmatch/core/errors.hpp"
#include "exmatch/core/violation.hpp"

namespace exmatch {

RelaxationLP build_relaxation(const ColoredBipartiteGraph& g, Parity target,
                              const EnumerationLimits& limits) {
  if (!g.is_square()) throw std::invalid_argument("build_relaxation: graph sides differ");
  RelaxationLP lp;
  lp.graph = g;
  lp.target = target;
  for (std::size_t u = 0; u < g.n_left(); ++u) {
    auto inc = g.left_incident(u);
    lp.degree_support.emplace_back(inc.begin(), inc.end());
  }
  for (std::size_t v = 0; v < g.n_right(); ++v) {
    auto inc = g.right_incident(v);
    lp.degree_support.emplace_back(inc.begin(), inc.end());
  }
  lp.labelings = enumerate_labelings(g.n_left(), target, limits);
  lp.labeling_support.reserve(lp.labelings.size());
  for (const Labeling& l : lp.labelings) {
    std::vector<std::size_t> sup;
    for (std::size_t ei = 0; ei < g.num_edges(); ++ei)
      if (violates(g.edge(ei), l)) sup.push_back(ei);
    lp.labeling_support.push_back(std::move(sup));
  }
  return lp;
}

LinearSystem restricted_system(const RelaxationLP& lp, const std::vector<std::size_t>& rows) {
  LinearSystem sys;
  sys.num_vars = lp.num_vars();
  for (const auto& sup : lp.degree_support) {
    std::vector<std::pair<std::size_t, Rational>> c;
    for (std::size_t ei : sup) c.emplace_back(ei, Rational(1));
    sys.add_row(std::move(c), Rational(1), true);
  }
  for (std::size_t r : rows) {
    std::vector<std::pair<std::size_t, Rational>> c;
    for (std::size_t ei : lp.labeling_support[r]) c.emplace_back(ei, Rational(1));
    sys.add_row(std::move(c), Rational(1), false);
  }
  return sys;
}

LinearSystem RelaxationLP::to_system() const {
  std::vector<std::size_t> all(labelings.size());
  std::iota(all.begin(), all.end(), 0);
  return restricted_system(*this, all);
}

bool witness_satisfies_all(const RelaxationLP& lp, const std::vector<Rational>& x) {
  return satisfies(lp.to_system(), x);
}

FeasibilityVerdict lp_feasible(const RelaxationLP& lp, LpMode mode) {
  FeasibilityVerdict v;
  if (mode == LpMode::full) {
    v.active_rows.resize(lp.labelings.size());
    std::iota(v.active_rows.begin(), v.active_rows.end(), 0);
  }
  for (;;) {
    ++v.rounds;
    const LinearSystem sys = restricted_system(lp, v.active_rows);
    LpSolution sol = phase_one(sys);
    v.pivots += sol.pivots;
    if (sol.status == LpStatus::infeasible) {
      if (!is_farkas_certificate(sys, sol.farkas)) {
        throw InvariantViolation("lp_feasible: infeasibility certificate does not verify");
      }
      v.feasible = false;
      v.farkas = std::move(sol.farkas);
      return v;
    }
    // Separation: every labeling row with Σ_{E_L} x < 1, most violated first.
    std::vector<std::pair<Rational, std::size_t>> violated;
    for (std::size_t r = 0; r < lp.labeling_support.size(); ++r) {
      Rational s = 0;
      for (std::size_t ei : lp.labeling_support[r]) s += sol.x[ei];
      if (s < 1) violated.emplace_back(std::move(s), r);
    }
    if (violated.empty()) {
      if (!witness_satisfies_all(lp, sol.x)) {
        throw InvariantViolation("lp_feasible: witness fails the full system");
      }
      v.feasible = true;
      v.witness = std::move(sol.x);
      v.witness_integral = std::all_of(v.witness.begin(), v.witness.end(), [](const Rational& q) {
        return boost::multiprecision::denominator(q) == 1;
      });
      return v;
    }
    if (mode == LpMode::full) throw InvariantViolation("lp_feasible: optimal point violates an included row");
    std::sort(violated.begin(), violated.end());
    v.active_rows.push_back(violated.front().second);
    std::sort(v.active_rows.begin(), v.active_rows.end());
  }
}

}  // namespace exmatch
