#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "exmatch/polytope/matrix.hpp"

namespace exmatch {

/// Exact nonnegative factorization S = W·H.
struct Factorization {
  RationalMatrix w;  // rows × r
  RationalMatrix h;  // r × cols

  std::size_t rank() const { return w.cols(); }
};

/// W, H ≥ 0 and W·H = S exactly.
bool verify_factorization(const RationalMatrix& s, const Factorization& f);

struct NnmfOptions {
  std::size_t rank = 1;
  std::size_t restarts = 10;
  std::size_t max_iterations = 20000;
  double tolerance = 1e-6;  // on the max-norm reconstruction error
  std::uint64_t seed = 0;
};

struct NnmfResult {
  bool success = false;
  double error = 0.0;  // best max-norm error over restarts
  std::size_t restart = 0;
  Eigen::MatrixXd w;
  Eigen::MatrixXd h;
  /// Present when the floating-point factors could be rounded to an exact
  /// nonnegative factorization of S. Tried whenever the error is below 1% of
  /// max|S|, so it can be set even when `success` is false.
  std::optional<Factorization> exact;
};

/// Multiplicative-update NMF (Lee–Seung) in double precision. Heuristic: a
/// failure says nothing about rank⁺; only `exact` is a proof of rank⁺ ≤ r.
NnmfResult nnmf_upper_bound(const RationalMatrix& s, const NnmfOptions& opts);

/// Snaps W to the nearest columns of S (H to the nearest rows), then rounds W
/// to multiples of 1/q for small q after column scaling, and in each case solves
/// for an exact nonnegative H column by column, then tries the same with the
/// roles of W and H swapped.
std::optional<Factorization> round_to_exact(const RationalMatrix& s, const Eigen::MatrixXd& w,
                                            const Eigen::MatrixXd& h);

}  // namespace exmatch
