#include "exmatch/bounds/hyperplane.hpp"

#include <stdexcept>

namespace exmatch {

HyperplaneBound hyperplane_bound(const RationalMatrix& s, const WeightMatrix& w, const SearchOptions& opts) {
  if (s.rows() != w.rows() || s.cols() != w.cols()) {
    throw std::invalid_argument("hyperplane_bound: dimension mismatch");
  }
  if (!w.has_positive()) throw std::invalid_argument("hyperplane_bound: weight matrix has no positive entry");
  HyperplaneBound b;
  b.inner = frobenius_product(w, s);
  b.s_max = s.max_abs();
  b.max_rect = max_rectangle_value(w, opts);
  b.certified = b.max_rect.exact;
  if (b.s_max == 0) {
    b.reason = "slack matrix is zero";
    return b;
  }
  if (b.max_rect.value <= 0) {
    b.reason = "maximum rectangle value is not positive";
    return b;
  }
  b.defined = true;
  b.value = b.inner / (b.s_max * b.max_rect.value);
  return b;
}

}  // namespace exmatch
