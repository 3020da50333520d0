#include "exmatch/core/labeling.hpp"

#include <algorithm>
#include <stdexcept>

namespace exmatch {

bool labeling_parity_ok(std::size_t ones, std::size_t n, Parity target) {
  const bool same = (ones % 2) == (n % 2);
  return target == Parity::odd ? same : !same;
}

Labeling::Labeling(std::size_t n_left, std::vector<std::uint8_t> values, Parity target)
    : n_left_(n_left), values_(std::move(values)), target_(target) {
  if (n_left_ > values_.size()) throw std::invalid_argument("labeling shorter than left side");
  for (auto& b : values_) {
    if (b > 1) throw std::invalid_argument("labeling values must be 0 or 1");
  }
}

Labeling Labeling::zeros(const ColoredBipartiteGraph& g, Parity target) {
  return Labeling(g.n_left(), std::vector<std::uint8_t>(g.num_vertices(), 0), target);
}

Labeling Labeling::from_bitstring(const std::string& bits, std::size_t n_left, Parity target) {
  std::vector<std::uint8_t> values;
  values.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("labeling bitstring must be 0/1");
    values.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Labeling(n_left, std::move(values), target);
}

std::size_t Labeling::ones() const {
  return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), 1));
}

bool Labeling::is_parity_valid() const {
  return labeling_parity_ok(ones(), n_left_, target_);
}

Labeling Labeling::complemented() const {
  std::vector<std::uint8_t> flipped(values_.size());
  std::transform(values_.begin(), values_.end(), flipped.begin(),
                 [](std::uint8_t b) { return static_cast<std::uint8_t>(1u - b); });
  return Labeling(n_left_, std::move(flipped), target_);
}

std::string Labeling::to_bitstring() const {
  std::string s;
  s.reserve(values_.size());
  for (auto b : values_) s.push_back(static_cast<char>('0' + b));
  return s;
}

}  // namespace exmatch
