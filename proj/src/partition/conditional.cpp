#include "exmatch/partition/conditional.hpp"

#include <stdexcept>

#include "exmatch/core/errors.hpp"

namespace exmatch {

namespace {

// base^exp, or cap+1 on overflow past cap.
std::uint64_t capped_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw CapExceeded("block of " + std::to_string(n) + " pairs: (4k)! overflows");
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Odometer over a product of choice lists; calls f(indices) for each.
template <class F>
void for_each_product(const std::vector<std::size_t>& sizes, F&& f) {
  std::vector<std::size_t> idx(sizes.size(), 0);
  for (;;) {
    f(idx);
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == sizes[i]) idx[i++] = 0;
    if (i == idx.size()) return;
  }
}

}  // namespace

Rational matching_probability(const Partition& t, const std::vector<Edge>& c_matching, const MatchingPredicate& in_rows,
                              std::uint64_t cap) {
  const std::uint64_t per_block = factorial(t.block_len());
  const std::uint64_t total = capped_power(per_block, t.m, cap);
  if (total > cap) throw CapExceeded("matching_probability: ((4k)!)^m exceeds cap " + std::to_string(cap));
  std::vector<std::vector<std::vector<Edge>>> choices;
  for (const auto& b : t.b_blocks) choices.push_back(consistent_block_matchings(b, canonical_block(b).labels));
  std::vector<std::vector<Edge>> parts;
  for (const auto& a : t.a_blocks) parts.push_back(canonical_block(a).matching);
  const std::size_t first_b = parts.size();
  parts.resize(first_b + t.m);
  parts.push_back(c_matching);
  std::vector<std::size_t> sizes(t.m, per_block);
  std::uint64_t hits = 0;
  for_each_product(sizes, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < t.m; ++i) parts[first_b + i] = choices[i][idx[i]];
    if (in_rows(assemble_matching(t.n, parts))) ++hits;
  });
  return Rational(BigInt(hits), BigInt(total));
}

Rational labeling_probability(const Partition& t, const PairLabels& c_labels, const LabelingPredicate& in_cols,
                              std::uint64_t cap) {
  if (t.block_len() >= 32) throw CapExceeded("labeling_probability: block too large");
  const std::uint64_t per_block = std::uint64_t{1} << t.block_len();
  const std::uint64_t total = capped_power(per_block, t.m, cap);
  if (total > cap) throw CapExceeded("labeling_probability: (2^{4k})^m exceeds cap " + std::to_string(cap));
  std::vector<PairLabels> parts(t.m);
  for (const auto& b : t.b_blocks) parts.push_back(canonical_block(b).labels);
  parts.push_back(c_labels);
  std::vector<std::size_t> sizes(t.m, per_block);
  std::uint64_t hits = 0;
  for_each_product(sizes, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < t.m; ++i) parts[i] = block_labeling_from_bits(t.a_blocks[i], idx[i]);
    if (in_cols(assemble_labeling(t.n, parts))) ++hits;
  });
  return Rational(BigInt(hits), BigInt(total));
}

Rational matching_probability_product(const Partition& t, const BlockMatchingPredicate& in_block) {
  Rational p = 1;
  for (std::size_t i = 0; i < t.m; ++i) {
    const auto all = consistent_block_matchings(t.b_blocks[i], canonical_block(t.b_blocks[i]).labels);
    std::uint64_t hits = 0;
    for (const auto& mb : all) hits += in_block(i, mb) ? 1 : 0;
    p *= Rational(BigInt(hits), BigInt(all.size()));
  }
  return p;
}

Rational labeling_probability_product(const Partition& t, const BlockLabelingPredicate& in_block) {
  Rational p = 1;
  for (std::size_t i = 0; i < t.m; ++i) {
    const auto all = consistent_block_labelings(t.a_blocks[i]);
    std::uint64_t hits = 0;
    for (const auto& lb : all) hits += in_block(i, lb) ? 1 : 0;
    p *= Rational(BigInt(hits), BigInt(all.size()));
  }
  return p;
}

std::string triple_kind_name(TripleKind k) {
  switch (k) {
    case TripleKind::good: return "good";
    case TripleKind::small: return "small";
    case TripleKind::bad: return "bad";
  }
  return "?";
}

namespace {

bool close(const Rational& base, const Rational& alt, const Rational& one_plus_eps) {
  return alt > 0 && alt <= one_plus_eps * base && base <= one_plus_eps * alt;
}

}  // namespace

TripleClass classify_triple(const Triple& x, const RectanglePredicates& r, const ClassifyOptions& opts) {
  validate_triple(x);
  if (opts.epsilon <= 0 || opts.delta <= 0) throw std::invalid_argument("classify_triple: epsilon and delta must be positive");
  const Partition& t = x.t;
  const std::uint64_t n_alt_m = factorial(t.block_len());
  const std::uint64_t n_alt_l = std::uint64_t{1} << t.block_len();
  const std::uint64_t per_m = capped_power(n_alt_m, t.m, opts.cap);
  const std::uint64_t per_l = capped_power(n_alt_l, t.m, opts.cap);
  if (per_m > opts.cap || per_l > opts.cap || (n_alt_m + 1) * per_m + (n_alt_l + 1) * per_l > opts.cap)
    throw CapExceeded("classify_triple: enumeration exceeds cap " + std::to_string(opts.cap));

  const BlockObjects core = violation_core(x.h);
  const BlockObjects dd = canonical_block(x.d);
  auto join_m = [&](const std::vector<Edge>& d_part) {
    std::vector<Edge> c = core.matching;
    c.insert(c.end(), d_part.begin(), d_part.end());
    return c;
  };
  auto join_l = [&](const PairLabels& d_part) {
    PairLabels c = core.labels;
    c.insert(c.end(), d_part.begin(), d_part.end());
    return c;
  };

  TripleClass tc;
  const Rational one_plus_eps = 1 + opts.epsilon;
  tc.p_m = matching_probability(t, join_m(dd.matching), r.rows, opts.cap);
  tc.m_good = true;
  for (const auto& alt : consistent_block_matchings(x.d, dd.labels)) {
    if (!close(tc.p_m, matching_probability(t, join_m(alt), r.rows, opts.cap), one_plus_eps)) {
      tc.m_good = false;
      break;
    }
  }
  tc.p_l = labeling_probability(t, join_l(dd.labels), r.cols, opts.cap);
  tc.l_good = true;
  for (const auto& alt : consistent_block_labelings(x.d)) {
    if (!close(tc.p_l, labeling_probability(t, join_l(alt), r.cols, opts.cap), one_plus_eps)) {
      tc.l_good = false;
      break;
    }
  }
  const Rational delta_m = opts.delta * static_cast<long>(t.m);
  tc.m_small = at_most_power_of_two(tc.p_m, delta_m);
  tc.l_small = at_most_power_of_two(tc.p_l, delta_m);
  if (tc.small())
    tc.kind = TripleKind::small;
  else
    tc.kind = tc.good() ? TripleKind::good : TripleKind::bad;
  return tc;
}

}  // namespace exmatch
