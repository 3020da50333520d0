#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "exmatch/bounds/weight_matrix.hpp"
#include "exmatch/core/rational.hpp"

namespace exmatch {

/// Row set × column set, both ascending.
struct Rectangle {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  bool empty() const { return rows.empty() || cols.empty(); }
  auto operator<=>(const Rectangle&) const = default;
};

/// ⟨W, R⟩, or none when R contains a forbidden entry.
std::optional<Rational> rectangle_value(const WeightMatrix& w, const Rectangle& r);

enum class SearchMode { exhaustive, local_search };

struct SearchOptions {
  SearchMode mode = SearchMode::exhaustive;
  std::size_t exhaustive_cap = 22;  // on min(rows, cols)
  std::size_t restarts = 32;        // random starts for local search
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct RectangleValue {
  Rational value = 0;
  Rectangle rect;
  bool exact = false;  // produced by exhaustive search
};

/// Maximum of ⟨W, R⟩ over rectangles avoiding forbidden entries. The empty
/// rectangle is admissible, so the value is ≥ 0.
///
/// Search runs over subsets of the smaller side; for each subset the other
/// side is every line whose partial sum is strictly positive and free of
/// forbidden entries. Ties go to the lexicographically smallest (rows, cols).
/// Exhaustive mode throws CapExceeded when the smaller side exceeds the cap.
/// Local search is 1-flip hill climbing from the empty set, every singleton
/// and `restarts` random subsets; its value never exceeds the exhaustive one.
RectangleValue max_rectangle_value(const WeightMatrix& w, const SearchOptions& opts = {});

}  // namespace exmatch
