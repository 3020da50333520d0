#include "exmatch/bounds/weight_matrix.hpp"

#include <stdexcept>

namespace exmatch {

const Rational& Weight::value() const {
  if (forbidden_) throw std::logic_error("Weight::value on the forbidden weight");
  return value_;
}

std::string Weight::to_string() const {
  if (forbidden_) return "-inf";
  if (boost::multiprecision::denominator(value_) == 1) return numerator_string(value_);
  return numerator_string(value_) + "/" + denominator_string(value_);
}

WeightMatrix::WeightMatrix(const RationalMatrix& m) : WeightMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = Weight(m.at(i, j));
}

bool WeightMatrix::has_positive() const {
  for (const Weight& w : data_)
    if (!w.is_forbidden() && w.value() > 0) return true;
  return false;
}

bool WeightMatrix::has_forbidden() const {
  for (const Weight& w : data_)
    if (w.is_forbidden()) return true;
  return false;
}

WeightMatrix WeightMatrix::transposed() const {
  WeightMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rational frobenius_product(const WeightMatrix& w, const RationalMatrix& s) {
  if (w.rows() != s.rows() || w.cols() != s.cols()) {
    throw std::invalid_argument("frobenius_product: dimension mismatch");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      const Weight& x = w.at(i, j);
      if (x.is_forbidden()) {
        if (s.at(i, j) != 0) throw std::invalid_argument("frobenius_product: forbidden weight on nonzero slack");
        continue;
      }
      sum += x.value() * s.at(i, j);
    }
  }
  return sum;
}

WeightMatrix build_parity_weight_matrix(const SlackMatrix& s, std::size_t k, const EntryMass& mu3,
                                        const EntryMass& mu4k3) {
  if (k == 0) throw std::invalid_argument("build_parity_weight_matrix: k must be positive");
  const long big = static_cast<long>(4 * k + 3);
  WeightMatrix w(s.num_rows(), s.num_cols());
  for (std::size_t i = 0; i < s.num_rows(); ++i) {
    for (std::size_t j = 0; j < s.num_cols(); ++j) {
      if (j >= s.cols.size()) continue;  // degree columns carry weight 0
      const Rational count = s.entries.at(i, j) + 1;
      if (count == 1) {
        w.at(i, j) = Weight::forbidden();
      } else if (count == 3) {
        const auto it = mu3.find({i, j});
        if (it == mu3.end()) {
          throw std::invalid_argument("build_parity_weight_matrix: no mu3 mass for 3-violation entry (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
        }
        w.at(i, j) = Weight(it->second);
      } else if (count == big) {
        const auto it = mu4k3.find({i, j});
        if (it == mu4k3.end()) {
          throw std::invalid_argument("build_parity_weight_matrix: no mu4k+3 mass for entry (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
        }
        w.at(i, j) = Weight(Rational(-it->second / (big - 1)));
      }
    }
  }
  return w;
}

EntryMass uniform_mass(const SlackMatrix& s, std::size_t violations) {
  std::vector<std::pair<std::size_t, std::size_t>> hits;
  for (std::size_t i = 0; i < s.num_rows(); ++i)
    for (std::size_t j = 0; j < s.cols.size(); ++j)
      if (s.entries.at(i, j) + 1 == static_cast<long>(violations)) hits.emplace_back(i, j);
  EntryMass m;
  if (hits.empty()) return m;
  const Rational each(1, static_cast<long>(hits.size()));
  for (const auto& h : hits) m[h] = each;
  return m;
}

}  // namespace exmatch
