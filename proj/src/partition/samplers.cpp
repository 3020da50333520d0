#include "exmatch/partition/samplers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "exmatch/core/violation.hpp"

namespace exmatch {

Matching sample_matching_given(const Partition& t, const std::vector<Edge>& c_matching, Rng& rng) {
  std::vector<std::vector<Edge>> parts;
  for (const auto& a : t.a_blocks) parts.push_back(canonical_block(a).matching);
  std::vector<std::size_t> perm(t.block_len());
  for (const auto& b : t.b_blocks) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    rng.shuffle(perm);
    parts.push_back(block_matching_from_permutation(b, canonical_block(b).labels, perm));
  }
  parts.push_back(c_matching);
  return assemble_matching(t.n, parts);
}

Labeling sample_labeling_given(const Partition& t, const PairLabels& c_labels, Rng& rng) {
  std::vector<PairLabels> parts;
  for (const auto& a : t.a_blocks) parts.push_back(block_labeling_from_bits(a, rng.below(std::uint64_t{1} << a.size())));
  for (const auto& b : t.b_blocks) parts.push_back(canonical_block(b).labels);
  parts.push_back(c_labels);
  return assemble_labeling(t.n, parts);
}

HdOutcome mu3_split(const PairSeq& c_order) {
  if (c_order.size() < 3) throw std::invalid_argument("mu3_split: ordering too short");
  std::array<std::size_t, 3> h{c_order[0], c_order[1], c_order[2]};
  std::sort(h.begin(), h.end());
  return {h, PairSeq(c_order.begin() + 3, c_order.end())};
}

HdOutcome alternative_split(const PairSeq& c_order, const Triple3& pos, const PermutationFamily& family) {
  const std::size_t k = family.k;
  if (c_order.size() != 4 * k + 3) throw std::invalid_argument("alternative_split: |C| must be 4k+3");
  std::array<std::size_t, 3> h{c_order[pos[0] - 1], c_order[pos[1] - 1], c_order[pos[2] - 1]};
  std::sort(h.begin(), h.end());
  PairSeq d(4 * k);
  const auto& sigma = family.sigma[family.index_of(pos)];
  for (std::size_t x = 1; x <= 2 * k + 3; ++x)
    if (sigma[x - 1] != 0) d[sigma[x - 1] - 1] = c_order[x - 1];
  std::copy(c_order.begin() + static_cast<std::ptrdiff_t>(2 * k + 3), c_order.end(),
            d.begin() + static_cast<std::ptrdiff_t>(2 * k));
  return {h, d};
}

namespace {

Mu3Sample finish_mu3(std::uint64_t seed, Triple x, Rng& rng) {
  const BlockObjects core = triple_core(x);
  Mu3Sample s;
  s.seed = seed;
  s.matching = sample_matching_given(x.t, core.matching, rng);
  s.labeling = sample_labeling_given(x.t, core.labels, rng);
  s.violations = count_violations(s.matching.edges(), s.labeling);
  s.triple = std::move(x);
  return s;
}

}  // namespace

Mu3Sample sample_mu3(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed) {
  Triple x;
  x.t = sample_partition(n, k, m, seed);
  Rng rng(Rng::mix(seed) ^ 0x6d75335fULL);
  PairSeq order = x.t.c_set;
  rng.shuffle(order);
  auto [h, d] = mu3_split(order);
  x.h = h;
  x.d = std::move(d);
  return finish_mu3(seed, std::move(x), rng);
}

Mu3Sample alternative_sample_mu3(std::size_t n, std::size_t k, std::size_t m, const PermutationFamily& family,
                                 std::uint64_t seed) {
  if (family.k != k) throw std::invalid_argument("alternative_sample_mu3: family built for another k");
  Triple x;
  x.t = sample_partition(n, k, m, seed);
  Rng rng(Rng::mix(seed) ^ 0x616c745fULL);
  PairSeq order = x.t.c_set;
  rng.shuffle(order);
  const std::vector<std::size_t> idx = rng.subset(2 * k + 3, 3);
  const Triple3 pos{idx[0] + 1, idx[1] + 1, idx[2] + 1};
  auto [h, d] = alternative_split(order, pos, family);
  x.h = h;
  x.d = std::move(d);
  return finish_mu3(seed, std::move(x), rng);
}

Mu4k3Sample sample_mu4k3(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed) {
  Mu4k3Sample s;
  s.seed = seed;
  s.partition = sample_partition(n, k, m, seed);
  Rng rng(Rng::mix(seed) ^ 0x6d75345fULL);
  s.c_order = s.partition.c_set;
  rng.shuffle(s.c_order);
  const BlockObjects c = canonical_C(s.c_order);
  s.matching = sample_matching_given(s.partition, c.matching, rng);
  s.labeling = sample_labeling_given(s.partition, c.labels, rng);
  s.violations = count_violations(s.matching.edges(), s.labeling);
  return s;
}

Rational HdDistribution::probability(const HdOutcome& o) const {
  auto it = counts.find(o);
  if (it == counts.end() || total == 0) return Rational(0);
  return Rational(BigInt(it->second), BigInt(total));
}

bool HdDistribution::same_as(const HdDistribution& other) const {
  if (counts.size() != other.counts.size()) return false;
  for (const auto& [o, c] : counts) {
    auto it = other.counts.find(o);
    if (it == other.counts.end()) return false;
    // c / total == c' / total'
    if (BigInt(c) * BigInt(other.total) != BigInt(it->second) * BigInt(total)) return false;
  }
  return true;
}

HdDistribution enumerate_mu3_generator(const PairSeq& c_set) {
  HdDistribution dist;
  PairSeq order = c_set;
  std::sort(order.begin(), order.end());
  do {
    ++dist.counts[mu3_split(order)];
    ++dist.total;
  } while (std::next_permutation(order.begin(), order.end()));
  return dist;
}

HdDistribution enumerate_alternative_generator(const PairSeq& c_set, const PermutationFamily& family) {
  HdDistribution dist;
  PairSeq order = c_set;
  std::sort(order.begin(), order.end());
  do {
    for (const Triple3& pos : family.triples) {
      ++dist.counts[alternative_split(order, pos, family)];
      ++dist.total;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return dist;
}

nlohmann::ordered_json partition_json(const Partition& t) {
  nlohmann::ordered_json j;
  j["n"] = t.n;
  j["k"] = t.k;
  j["m"] = t.m;
  j["A"] = t.a_blocks;
  j["B"] = t.b_blocks;
  j["C"] = t.c_set;
  return j;
}

nlohmann::ordered_json matching_json(const Matching& m) {
  auto arr = nlohmann::ordered_json::array();
  for (const Edge& e : m.edges()) arr.push_back({e.u, e.v, std::string(1, color_code(e.color))});
  return arr;
}

nlohmann::ordered_json sample_json(const Mu3Sample& s) {
  nlohmann::ordered_json j;
  j["seed"] = s.seed;
  j["T"] = partition_json(s.triple.t);
  j["H"] = s.triple.h;
  j["D"] = s.triple.d;
  j["M"] = matching_json(s.matching);
  j["L"] = s.labeling.to_bitstring();
  j["violations"] = s.violations;
  return j;
}

nlohmann::ordered_json sample_json(const Mu4k3Sample& s) {
  nlohmann::ordered_json j;
  j["seed"] = s.seed;
  j["T"] = partition_json(s.partition);
  j["C"] = s.c_order;
  j["M"] = matching_json(s.matching);
  j["L"] = s.labeling.to_bitstring();
  j["violations"] = s.violations;
  return j;
}

}  // namespace exmatch
