#include "exmatch/core/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace exmatch {

std::uint64_t Rng::mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  // Rejection sampling on the top of the 64-bit range.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::vector<std::size_t> Rng::subset(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("subset larger than universe");
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(all[i], all[i + below(n - i)]);
  }
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

Rng Rng::split() { return Rng(mix(seed_ ^ mix(++splits_))); }

}  // namespace exmatch
