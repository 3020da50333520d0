#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "exmatch/core/rational.hpp"

namespace exmatch {

/// Rows of the form  a·x = b  or  a·x ≥ b  over x ≥ 0, exact rationals.
struct LinearSystem {
  struct Row {
    std::vector<std::pair<std::size_t, Rational>> coeffs;  // sparse, column → value
    Rational rhs;
    bool equality = false;
  };

  std::size_t num_vars = 0;
  std::vector<Row> rows;

  void add_row(std::vector<std::pair<std::size_t, Rational>> coeffs, Rational rhs, bool equality) {
    rows.push_back({std::move(coeffs), std::move(rhs), equality});
  }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> x;        // primal point when not infeasible
  Rational objective = 0;         // when optimal
  std::vector<Rational> farkas;   // per row, when infeasible
  std::size_t pivots = 0;
};

/// Dense-tableau two-phase simplex over exact rationals with Bland's rule.
///
/// Phase 1 minimizes the sum of one artificial per row. If that optimum is
/// positive the system is infeasible and `farkas` holds y with y·A ≤ 0,
/// y_i ≥ 0 on inequality rows and y·b > 0, read off the artificial columns'
/// reduced costs. Otherwise phase 2 minimizes `objective` when one is given.
LpSolution solve_lp(const LinearSystem& sys, const std::optional<std::vector<Rational>>& objective = std::nullopt);

/// Feasibility only.
inline LpSolution phase_one(const LinearSystem& sys) { return solve_lp(sys); }

/// Exact checks of the two possible outcomes.
bool satisfies(const LinearSystem& sys, const std::vector<Rational>& x);
bool is_farkas_certificate(const LinearSystem& sys, const std::vector<Rational>& y);

}  // namespace exmatch
