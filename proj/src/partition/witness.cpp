#include "exmatch/partition/witness.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace exmatch {

namespace {

bool contains(const std::array<std::size_t, 3>& h, std::size_t p) { return std::find(h.begin(), h.end(), p) != h.end(); }

std::size_t intersection_size(const std::array<std::size_t, 3>& a, const std::array<std::size_t, 3>& b) {
  std::size_t c = 0;
  for (std::size_t p : a) c += contains(b, p);
  return c;
}

// L_B(d) on the pair at position j of d (both vertices share it).
std::uint8_t lb_label(const PairSeq& d, std::size_t j) {
  const std::size_t k = d.size() / 4;
  return (j % (2 * k)) < k ? 1 : 0;
}

std::optional<std::size_t> position(const PairSeq& d, std::size_t p) {
  auto it = std::find(d.begin(), d.end(), p);
  if (it == d.end()) return std::nullopt;
  return static_cast<std::size_t>(it - d.begin());
}

// First (p1, p2) in H'∖H, in H' order, with different L_B(D) labels.
std::optional<std::pair<std::size_t, std::size_t>> separated_pairs(const WitnessConfig& c) {
  std::vector<std::size_t> diff;
  for (std::size_t p : c.h_prime)
    if (!contains(c.h, p)) diff.push_back(p);
  for (std::size_t a = 0; a < diff.size(); ++a)
    for (std::size_t b = a + 1; b < diff.size(); ++b) {
      auto pa = position(c.d, diff[a]), pb = position(c.d, diff[b]);
      if (pa && pb && lb_label(c.d, *pa) != lb_label(c.d, *pb)) return std::make_pair(diff[a], diff[b]);
    }
  return std::nullopt;
}

}  // namespace

std::vector<std::string> witness_precondition_failures(const WitnessConfig& c) {
  std::vector<std::string> out;
  try {
    validate_triple({c.t, c.h, c.d});
  } catch (const std::invalid_argument& e) {
    out.push_back(std::string("(T,H,D): ") + e.what());
  }
  try {
    validate_triple({c.t, c.h_prime, c.d_prime});
  } catch (const std::invalid_argument& e) {
    out.push_back(std::string("(T,H',D'): ") + e.what());
  }
  if (!out.empty()) return out;
  const std::size_t k = c.t.k;
  if (!std::equal(c.d.begin() + static_cast<std::ptrdiff_t>(2 * k), c.d.end(),
                  c.d_prime.begin() + static_cast<std::ptrdiff_t>(2 * k)))
    out.emplace_back("D2 and D2' differ");
  if (intersection_size(c.h, c.h_prime) > 1) out.emplace_back("|H ∩ H'| > 1");
  if (!separated_pairs(c)) out.emplace_back("no two pairs of H'\\H with different L_B(D) labels");
  return out;
}

WitnessChecks check_witness(const WitnessConfig& c, const std::vector<Edge>& matching, const PairLabels& labels) {
  WitnessChecks w;
  std::vector<int> lu(c.t.n, -1), lv(c.t.n, -1);
  for (const auto& pl : labels) {
    lu[pl.pair] = pl.u;
    lv[pl.pair] = pl.v;
  }
  w.i = std::all_of(c.h_prime.begin(), c.h_prime.end(), [&](std::size_t p) { return lu[p] == 1 && lv[p] == 0; });
  {
    PairLabels on_dp;
    bool labeled = true;
    for (std::size_t p : c.d_prime) {
      labeled = labeled && lu[p] >= 0 && lv[p] >= 0;
      on_dp.push_back({p, static_cast<std::uint8_t>(lu[p] & 1), static_cast<std::uint8_t>(lv[p] & 1)});
    }
    w.ii = labeled && consistent(canonical_block(c.d_prime).matching, on_dp);
  }
  w.iii = std::all_of(c.h.begin(), c.h.end(), [&](std::size_t p) {
    return std::find(matching.begin(), matching.end(),
                     Edge{static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p), Color::red}) != matching.end();
  });
  {
    std::vector<char> in_d(c.t.n, 0);
    for (std::size_t p : c.d) in_d[p] = 1;
    std::vector<Edge> md;
    std::vector<char> su(c.t.n, 0), sv(c.t.n, 0);
    bool disjoint = true;
    for (const Edge& e : matching) {
      if (!in_d[e.u] || !in_d[e.v]) continue;
      disjoint = disjoint && !su[e.u] && !sv[e.v];
      su[e.u] = sv[e.v] = 1;
      md.push_back(e);
    }
    w.iv = disjoint && md.size() == c.d.size() && consistent(md, canonical_block(c.d).labels);
  }
  {
    std::vector<char> in_c(c.t.n, 0), su(c.t.n, 0), sv(c.t.n, 0);
    for (std::size_t p : c.t.c_set) in_c[p] = 1;
    bool perfect = matching.size() == c.t.c_set.size();
    for (const Edge& e : matching) {
      perfect = perfect && in_c[e.u] && in_c[e.v] && !su[e.u] && !sv[e.v];
      su[e.u] = sv[e.v] = 1;
    }
    w.v = perfect && local_violations(matching, labels) == 1;
  }
  return w;
}

OneViolationWitness one_violation_witness(const WitnessConfig& c) {
  const auto failures = witness_precondition_failures(c);
  if (!failures.empty()) {
    std::string msg = "one_violation_witness: precondition failed";
    for (const auto& f : failures) msg += "; " + f;
    throw std::invalid_argument(msg);
  }
  OneViolationWitness w;
  const auto [p1, p2] = *separated_pairs(c);
  w.pair1 = p1;
  w.pair2 = p2;
  for (std::size_t p : c.h_prime)
    if (p != p1 && p != p2) w.pair3 = p;
  w.intersection = intersection_size(c.h, c.h_prime);
  for (std::size_t p : c.t.c_set) {
    w.labels.push_back({p, 1, static_cast<std::uint8_t>(contains(c.h_prime, p) ? 0 : 1)});
    const auto u = static_cast<std::uint32_t>(p);
    if (p == p1)
      w.matching.push_back({u, static_cast<std::uint32_t>(p2), Color::blue});
    else if (p == p2)
      w.matching.push_back({u, static_cast<std::uint32_t>(p1), Color::blue});
    else
      w.matching.push_back({u, u, Color::red});
  }
  for (const Edge& e : w.matching)
    if (local_violations(std::span<const Edge>(&e, 1), w.labels) != 0) w.violating.push_back(e);
  w.checks = check_witness(c, w.matching, w.labels);
  return w;
}

WitnessConfig random_witness_config(std::size_t k, std::size_t m, std::size_t intersection, Rng& rng) {
  if (intersection > 1) throw std::invalid_argument("random_witness_config: |H ∩ H'| must be 0 or 1");
  if (4 * k + 3 < 2 * k + 6 - intersection)
    throw std::invalid_argument("random_witness_config: C too small for D2 outside H ∪ H'");
  WitnessConfig c;
  c.t = sample_partition(k, m, rng);
  PairSeq order = c.t.c_set;
  rng.shuffle(order);
  // order = H, then H'∖H, then the rest; H' takes `intersection` pairs of H.
  std::copy_n(order.begin(), 3, c.h.begin());
  for (std::size_t i = 0; i < intersection; ++i) c.h_prime[i] = order[i];
  for (std::size_t i = intersection; i < 3; ++i) c.h_prime[i] = order[3 + i - intersection];
  const std::size_t used = 6 - intersection;
  const PairSeq d2(order.begin() + static_cast<std::ptrdiff_t>(used),
                   order.begin() + static_cast<std::ptrdiff_t>(used + 2 * k));
  PairSeq rest_h, rest_hp;  // C∖H∖D2 and C∖H'∖D2
  for (std::size_t p : c.t.c_set) {
    if (std::find(d2.begin(), d2.end(), p) != d2.end()) continue;
    if (!contains(c.h, p)) rest_h.push_back(p);
    if (!contains(c.h_prime, p)) rest_hp.push_back(p);
  }
  std::sort(c.h.begin(), c.h.end());
  std::sort(c.h_prime.begin(), c.h_prime.end());
  rng.shuffle(rest_hp);
  c.d_prime = rest_hp;
  c.d_prime.insert(c.d_prime.end(), d2.begin(), d2.end());
  for (;;) {
    rng.shuffle(rest_h);
    c.d = rest_h;
    c.d.insert(c.d.end(), d2.begin(), d2.end());
    if (separated_pairs(c)) return c;
  }
}

}  // namespace exmatch
