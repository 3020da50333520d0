#include "exmatch/partition/balance.hpp"

#include <algorithm>
#include <stdexcept>

#include "exmatch/core/errors.hpp"
#include "exmatch/partition/blocks.hpp"

namespace exmatch {

std::uint64_t block_matching_count(std::size_t k) {
  if (4 * k > 20) throw CapExceeded("(4k)! does not fit in 64 bits");
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= 4 * k; ++i) f *= i;
  return f;
}

std::size_t canonical_b_blocks(const Partition& t, const Matching& m) {
  std::size_t count = 0;
  for (const auto& b : t.b_blocks) {
    std::vector<Edge> want = canonical_block(b).matching;
    std::sort(want.begin(), want.end());
    count += restrict_matching(m, b) == want;
  }
  return count;
}

std::size_t canonical_a_blocks(const Partition& t, const Labeling& l) {
  std::size_t count = 0;
  for (const auto& a : t.a_blocks) count += restrict_labeling(l, a) == canonical_block(a).labels;
  return count;
}

namespace {

// count / m ≥ 1 / (2 c_k)
bool meets_share(std::size_t count, const Partition& t) {
  return static_cast<unsigned __int128>(count) * 2 * block_matching_count(t.k) >= t.m;
}

}  // namespace

bool is_balanced_matching(const Partition& t, const Matching& m) { return meets_share(canonical_b_blocks(t, m), t); }

bool is_balanced_labeling(const Partition& t, const Labeling& l) { return meets_share(canonical_a_blocks(t, l), t); }

std::vector<std::size_t> j_set(const Triple& x, const Labeling& l) {
  std::vector<std::size_t> j{0};
  for (std::size_t i = 0; i < x.t.m; ++i)
    if (restrict_labeling(l, x.t.a_blocks[i]) == canonical_block(x.t.a_blocks[i]).labels) j.push_back(i + 1);
  return j;
}

Triple block_swap(const Triple& x, const Labeling& l, std::size_t i) {
  const auto j = j_set(x, l);
  if (std::find(j.begin(), j.end(), i) == j.end())
    throw std::invalid_argument("block_swap: index " + std::to_string(i) + " not in J(T,L)");
  if (i == 0) return x;
  Triple y = x;
  std::swap(y.d, y.t.a_blocks[i - 1]);
  y.t.c_set.assign(y.h.begin(), y.h.end());
  y.t.c_set.insert(y.t.c_set.end(), y.d.begin(), y.d.end());
  std::sort(y.t.c_set.begin(), y.t.c_set.end());
  return y;
}

}  // namespace exmatch
