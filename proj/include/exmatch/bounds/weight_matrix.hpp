#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "exmatch/core/rational.hpp"
#include "exmatch/polytope/matrix.hpp"
#include "exmatch/polytope/slack_matrix.hpp"

namespace exmatch {

/// A finite rational or the forbidden value −∞.
class Weight {
 public:
  Weight() = default;
  Weight(Rational v) : value_(std::move(v)) {}  // NOLINT: implicit by design
  Weight(long v) : value_(v) {}                 // NOLINT

  static Weight forbidden() {
    Weight w;
    w.forbidden_ = true;
    return w;
  }

  bool is_forbidden() const { return forbidden_; }
  /// Throws std::logic_error on the forbidden value.
  const Rational& value() const;
  std::string to_string() const;

  bool operator==(const Weight& o) const {
    return forbidden_ == o.forbidden_ && (forbidden_ || value_ == o.value_);
  }

 private:
  Rational value_ = 0;
  bool forbidden_ = false;
};

class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Finite weights copied from a rational matrix.
  explicit WeightMatrix(const RationalMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Weight& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Weight& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool has_positive() const;
  bool has_forbidden() const;
  WeightMatrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Weight> data_;
};

/// ⟨W, S⟩ with forbidden · 0 = 0. Throws std::invalid_argument on a forbidden
/// weight over a nonzero slack entry or on a dimension mismatch.
Rational frobenius_product(const WeightMatrix& w, const RationalMatrix& s);

/// Per-entry distribution masses, keyed by (row, col).
using EntryMass = std::map<std::pair<std::size_t, std::size_t>, Rational>;

/// Weights by violation count c = slack + 1: forbidden when c = 1, +μ3 when
/// c = 3, −μ_{4k+3}/(4k+2) when c = 4k+3, 0 otherwise. Entries with c = 3 or
/// c = 4k+3 missing from the masses raise std::invalid_argument.
WeightMatrix build_parity_weight_matrix(const SlackMatrix& s, std::size_t k, const EntryMass& mu3,
                                        const EntryMass& mu4k3);

/// Uniform mass over every entry with the given violation count.
EntryMass uniform_mass(const SlackMatrix& s, std::size_t violations);

}  // namespace exmatch
