#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "exmatch/core/rational.hpp"

namespace exmatch {

struct BiasReport {
  Rational density;  // Pr_{y ∈ X}[y ∈ Y]
  std::vector<std::size_t> unbiased;
  std::vector<std::size_t> biased;
};

/// X = X_0 × … × X_{m-1} with |X_i| = sizes[i]; `y` is the indicator of Y
/// over X in mixed-radix order, coordinate 0 varying fastest. Index i is
/// α-unbiased when Pr[Y]/(1+α) ≤ Pr[Y | y_i = j] ≤ (1+α)·Pr[Y] for every j.
/// Exact. Throws std::invalid_argument on a size mismatch and CapExceeded
/// when |X| exceeds `cap`.
BiasReport bias_report(const std::vector<std::size_t>& sizes, const std::vector<char>& y, const Rational& alpha,
                       std::uint64_t cap = std::uint64_t{1} << 26);

std::vector<std::size_t> unbiased_indices(const std::vector<std::size_t>& sizes, const std::vector<char>& y,
                                          const Rational& alpha);

}  // namespace exmatch
