#include "exmatch/partition/unbiased.hpp"

#include <stdexcept>

#include "exmatch/core/errors.hpp"

namespace exmatch {

BiasReport bias_report(const std::vector<std::size_t>& sizes, const std::vector<char>& y, const Rational& alpha,
                       std::uint64_t cap) {
  if (alpha < 0) throw std::invalid_argument("bias_report: alpha must be nonnegative");
  std::uint64_t total = 1;
  for (std::size_t s : sizes) {
    if (s == 0) throw std::invalid_argument("bias_report: empty factor");
    if (total > cap / s) throw CapExceeded("bias_report: |X| exceeds cap");
    total *= s;
  }
  if (y.size() != total) throw std::invalid_argument("bias_report: indicator length differs from |X|");

  // hits[i][j] = |Y ∩ {y_i = j}|
  std::vector<std::vector<std::uint64_t>> hits(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) hits[i].assign(sizes[i], 0);
  std::uint64_t in_y = 0;
  std::vector<std::size_t> digit(sizes.size(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (y[idx]) {
      ++in_y;
      for (std::size_t i = 0; i < sizes.size(); ++i) ++hits[i][digit[i]];
    }
    for (std::size_t i = 0; i < sizes.size() && ++digit[i] == sizes[i]; ++i) digit[i] = 0;
  }

  BiasReport r;
  r.density = Rational(BigInt(in_y), BigInt(total));
  const Rational up = 1 + alpha;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < sizes[i] && ok; ++j) {
      // Pr[Y | y_i = j] = hits / (|X| / |X_i|)
      const Rational cond(BigInt(hits[i][j]) * sizes[i], BigInt(total));
      ok = r.density <= up * cond && cond <= up * r.density;
    }
    (ok ? r.unbiased : r.biased).push_back(i);
  }
  return r;
}

std::vector<std::size_t> unbiased_indices(const std::vector<std::size_t>& sizes, const std::vector<char>& y,
                                          const Rational& alpha) {
  return bias_report(sizes, y, alpha).unbiased;
}

}  // namespace exmatch
