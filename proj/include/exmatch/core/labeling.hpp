#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "exmatch/core/graph.hpp"

namespace exmatch {

/// 0/1 assignment to every vertex of a bipartite graph, tagged with the red
/// parity it certifies against.
///
/// Storage order is u_1..u_{n_left} followed by v_1..v_{n_right}, which is
/// also the bitstring order used in files. Parity validity is a query, not a
/// construction invariant, so that violation sets can be evaluated for any
/// assignment.
class Labeling {
 public:
  Labeling() = default;
  Labeling(std::size_t n_left, std::vector<std::uint8_t> values, Parity target = Parity::odd);

  /// All-zero labeling sized for `g`.
  static Labeling zeros(const ColoredBipartiteGraph& g, Parity target = Parity::odd);
  static Labeling from_bitstring(const std::string& bits, std::size_t n_left,
                                 Parity target = Parity::odd);

  std::size_t n_left() const { return n_left_; }
  std::size_t n_right() const { return values_.size() - n_left_; }
  std::size_t size() const { return values_.size(); }
  Parity target() const { return target_; }

  std::uint8_t left(std::size_t u) const { return values_[u]; }
  std::uint8_t right(std::size_t v) const { return values_[n_left_ + v]; }
  std::uint8_t at(std::size_t global) const { return values_[global]; }
  const std::vector<std::uint8_t>& values() const { return values_; }

  void set_left(std::size_t u, std::uint8_t bit) { values_[u] = bit & 1u; }
  void set_right(std::size_t v, std::uint8_t bit) { values_[n_left_ + v] = bit & 1u; }

  std::size_t ones() const;

  /// Odd target: ones ≡ n (mod 2). Even target: the opposite class.
  /// n is taken as n_left; only meaningful on square graphs.
  bool is_parity_valid() const;

  bool fits(const ColoredBipartiteGraph& g) const {
    return n_left_ == g.n_left() && n_right() == g.n_right();
  }

  Labeling complemented() const;
  std::string to_bitstring() const;

  bool operator==(const Labeling& o) const {
    return n_left_ == o.n_left_ && values_ == o.values_ && target_ == o.target_;
  }

 private:
  std::size_t n_left_ = 0;
  std::vector<std::uint8_t> values_;
  Parity target_ = Parity::odd;
};

/// Parity class membership for a ones count on an n+n graph.
bool labeling_parity_ok(std::size_t ones, std::size_t n, Parity target);

}  // namespace exmatch
