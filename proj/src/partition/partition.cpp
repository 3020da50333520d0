#include "exmatch/partition/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace exmatch {

std::size_t partition_size(std::size_t k, std::size_t m) { return 4 * k * (2 * m + 1) + 3; }

namespace {

void check_params(std::size_t n, std::size_t k, std::size_t m) {
  if (k == 0 || m == 0) throw std::invalid_argument("partition: k and m must be positive");
  if (n != partition_size(k, m))
    throw std::invalid_argument("partition: n=" + std::to_string(n) + " but 4k(2m+1)+3=" +
                                std::to_string(partition_size(k, m)));
}

}  // namespace

void validate_partition(const Partition& t) {
  check_params(t.n, t.k, t.m);
  if (t.a_blocks.size() != t.m || t.b_blocks.size() != t.m)
    throw std::invalid_argument("partition: expected m A-blocks and m B-blocks");
  if (t.c_set.size() != 4 * t.k + 3) throw std::invalid_argument("partition: |C| must be 4k+3");
  if (!std::is_sorted(t.c_set.begin(), t.c_set.end())) throw std::invalid_argument("partition: C not sorted");
  std::vector<char> seen(t.n, 0);
  auto mark = [&](const PairSeq& s) {
    for (std::size_t p : s) {
      if (p >= t.n) throw std::invalid_argument("partition: pair index out of range");
      if (seen[p]) throw std::invalid_argument("partition: pair " + std::to_string(p) + " used twice");
      seen[p] = 1;
    }
  };
  for (const auto& b : t.a_blocks) {
    if (b.size() != t.block_len()) throw std::invalid_argument("partition: A-block length must be 4k");
    mark(b);
  }
  for (const auto& b : t.b_blocks) {
    if (b.size() != t.block_len()) throw std::invalid_argument("partition: B-block length must be 4k");
    mark(b);
  }
  mark(t.c_set);
}

Partition sample_partition(std::size_t k, std::size_t m, Rng& rng) {
  const std::size_t n = partition_size(k, m);
  check_params(n, k, m);
  PairSeq perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  rng.shuffle(perm);
  Partition t;
  t.n = n;
  t.k = k;
  t.m = m;
  auto it = perm.begin();
  const auto len = static_cast<std::ptrdiff_t>(4 * k);
  for (std::size_t i = 0; i < m; ++i, it += len) t.a_blocks.emplace_back(it, it + len);
  for (std::size_t i = 0; i < m; ++i, it += len) t.b_blocks.emplace_back(it, it + len);
  t.c_set.assign(it, perm.end());
  std::sort(t.c_set.begin(), t.c_set.end());
  return t;
}

Partition sample_partition(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed) {
  check_params(n, k, m);
  Rng rng(seed);
  return sample_partition(k, m, rng);
}

void validate_triple(const Triple& x) {
  validate_partition(x.t);
  if (!std::is_sorted(x.h.begin(), x.h.end()) || std::adjacent_find(x.h.begin(), x.h.end()) != x.h.end())
    throw std::invalid_argument("triple: H must be 3 distinct sorted pairs");
  if (x.d.size() != 4 * x.t.k) throw std::invalid_argument("triple: |D| must be 4k");
  PairSeq all(x.h.begin(), x.h.end());
  all.insert(all.end(), x.d.begin(), x.d.end());
  std::sort(all.begin(), all.end());
  if (all != x.t.c_set) throw std::invalid_argument("triple: H and D must partition C");
}

}  // namespace exmatch
