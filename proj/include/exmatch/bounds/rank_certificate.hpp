#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "exmatch/bounds/nnmf.hpp"
#include "exmatch/core/rational.hpp"
#include "exmatch/polytope/matrix.hpp"

namespace exmatch {

/// Rank over the rationals, exact Gaussian elimination.
std::size_t rational_rank(const RationalMatrix& s);

/// S = W·H through its distinct nonzero rows (W selects, H lists them) or
/// distinct nonzero columns, whichever is fewer. Always exact.
Factorization distinct_line_factorization(const RationalMatrix& s);

struct RankOptions {
  bool use_cover = true;          // fractional rectangle cover as a lower bound
  bool use_nnmf = true;           // try to close the gap with verified NMF
  std::size_t nnmf_restarts = 10;
  std::size_t nnmf_iterations = 20000;
  std::uint64_t seed = 0;
};

/// lower ≤ rank⁺(S) ≤ upper, both ends proven: the lower end by rational
/// rank and the fractional cover number, the upper end by an exact
/// nonnegative factorization of that rank.
struct RankInterval {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t linear_rank = 0;
  Rational cover_value = 0;
  std::string upper_source;  // "distinct-lines" or "nnmf"
  Factorization witness;

  bool exact() const { return lower == upper; }
};

RankInterval certify_nonnegative_rank(const RationalMatrix& s, const RankOptions& opts = {});

}  // namespace exmatch
