#pragma once

#include <string>

#include "exmatch/bounds/rectangle_search.hpp"
#include "exmatch/bounds/weight_matrix.hpp"
#include "exmatch/polytope/matrix.hpp"

namespace exmatch {

struct HyperplaneBound {
  bool defined = false;
  std::string reason;       // why the bound is undefined
  Rational value = 0;       // ⟨W,S⟩ / (‖S‖∞ · max_R ⟨W,R⟩)
  Rational inner = 0;       // ⟨W,S⟩
  Rational s_max = 0;       // ‖S‖∞
  RectangleValue max_rect;  // denominator witness
  /// Only an exhaustive rectangle search makes the bound a proven lower
  /// bound; local search can underestimate the denominator.
  bool certified = false;
};

/// Throws std::invalid_argument when dimensions differ, W has no positive
/// entry, or a forbidden weight sits on a nonzero slack entry.
HyperplaneBound hyperplane_bound(const RationalMatrix& s, const WeightMatrix& w,
                                 const SearchOptions& opts = {});

}  // namespace exmatch
