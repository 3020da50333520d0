#pragma once

#include <cstddef>
#include <vector>

#include "exmatch/bounds/rectangle_search.hpp"
#include "exmatch/core/rational.hpp"
#include "exmatch/polytope/matrix.hpp"

namespace exmatch {

/// Every maximal rectangle inside the support (nonzero entries) of `s`, i.e.
/// pairs (rows, cols) with cols = common support of rows and vice versa,
/// both nonempty. Lectic order on column sets.
std::vector<Rectangle> maximal_support_rectangles(const RationalMatrix& s);

struct CoverBound {
  Rational value = 0;                 // fractional cover number of the support
  std::vector<Rectangle> rectangles;  // rectangles with positive weight
  std::vector<Rational> weights;
  std::size_t candidates = 0;         // maximal rectangles considered
  std::size_t rounds = 0;             // constraint-generation rounds
};

/// min Σ y_R over maximal support rectangles subject to every nonzero entry
/// being covered with total weight ≥ 1, solved exactly. Entry constraints are
/// added lazily until the optimum covers every entry. Restricting to maximal
/// rectangles loses nothing since each all-support rectangle lies in one.
/// Throws std::invalid_argument on an all-zero matrix.
CoverBound rectangle_cover_bound(const RationalMatrix& s);

}  // namespace exmatch
