#include "exmatch/partition/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace exmatch {

namespace {

Edge straight_red(std::size_t p) {
  return {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p), Color::red};
}

Edge colored(std::size_t u, std::size_t v, std::uint8_t lu, std::uint8_t lv) {
  return {static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), lu == lv ? Color::red : Color::blue};
}

struct LabelLookup {
  std::unordered_map<std::size_t, std::pair<std::uint8_t, std::uint8_t>> by_pair;

  explicit LabelLookup(const PairLabels& labels) {
    for (const auto& pl : labels) by_pair[pl.pair] = {pl.u, pl.v};
  }
  // -1 when unlabeled
  int u(std::size_t p) const {
    auto it = by_pair.find(p);
    return it == by_pair.end() ? -1 : it->second.first;
  }
  int v(std::size_t p) const {
    auto it = by_pair.find(p);
    return it == by_pair.end() ? -1 : it->second.second;
  }
};

bool edge_consistent(const Edge& e, const LabelLookup& lk) {
  const int a = lk.u(e.u), b = lk.v(e.v);
  if (a < 0 || b < 0) return false;
  return e.is_red() ? a == b : a != b;
}

void fail(std::string* why, std::string msg) {
  if (why) *why = std::move(msg);
}

}  // namespace

BlockObjects canonical_block(const PairSeq& d) {
  if (d.empty() || d.size() % 4 != 0) throw std::invalid_argument("canonical_block: length must be 4k");
  const std::size_t k = d.size() / 4;
  BlockObjects out;
  for (std::size_t j = 0; j < 2 * k; ++j) out.matching.push_back(colored(d[j], d[2 * k + j], 0, 0));
  for (std::size_t j = 0; j < 2 * k; ++j) out.matching.push_back(colored(d[2 * k + j], d[j], 0, 0));
  for (std::size_t j = 0; j < 4 * k; ++j) {
    const std::uint8_t bit = (j % (2 * k)) < k ? 1 : 0;
    out.labels.push_back({d[j], bit, bit});
  }
  return out;
}

BlockObjects violation_core(std::span<const std::size_t> h) {
  if (h.size() != 3) throw std::invalid_argument("violation_core: |h| must be 3");
  BlockObjects out;
  for (std::size_t p : h) {
    out.matching.push_back(straight_red(p));
    out.labels.push_back({p, 1, 0});
  }
  return out;
}

BlockObjects canonical_C(const PairSeq& c) {
  if (c.size() < 7 || c.size() % 4 != 3) throw std::invalid_argument("canonical_C: length must be 4k+3");
  const std::size_t k = (c.size() - 3) / 4;
  BlockObjects out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    out.matching.push_back(straight_red(c[j]));
    if (j < 2 * k + 3)
      out.labels.push_back({c[j], 1, 0});
    else
      out.labels.push_back({c[j], 0, 1});
  }
  return out;
}

std::size_t local_violations(std::span<const Edge> edges, const PairLabels& labels) {
  const LabelLookup lk(labels);
  std::size_t bad = 0;
  for (const Edge& e : edges)
    if (!edge_consistent(e, lk)) ++bad;
  return bad;
}

bool consistent(std::span<const Edge> edges, const PairLabels& labels) {
  return local_violations(edges, labels) == 0;
}

std::vector<Edge> block_matching_from_permutation(const PairSeq& d, const PairLabels& labels,
                                                  std::span<const std::size_t> perm) {
  std::vector<Edge> out;
  out.reserve(d.size());
  for (std::size_t j = 0; j < d.size(); ++j)
    out.push_back(colored(d[j], d[perm[j]], labels[j].u, labels[perm[j]].v));
  return out;
}

std::vector<std::vector<Edge>> consistent_block_matchings(const PairSeq& d, const PairLabels& labels) {
  if (labels.size() != d.size()) throw std::invalid_argument("consistent_block_matchings: label size mismatch");
  std::vector<std::size_t> perm(d.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<Edge>> out;
  do {
    out.push_back(block_matching_from_permutation(d, labels, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

PairLabels block_labeling_from_bits(const PairSeq& d, std::uint64_t bits) {
  const std::size_t k2 = d.size() / 2;
  PairLabels out(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) out[j].pair = d[j];
  // Edge e < 2k is (u_{d_e}, v_{d_{2k+e}}); edge 2k+e is (u_{d_{2k+e}}, v_{d_e}).
  for (std::size_t e = 0; e < k2; ++e) {
    const std::uint8_t lo = (bits >> e) & 1u, hi = (bits >> (k2 + e)) & 1u;
    out[e].u = lo;
    out[k2 + e].v = lo;
    out[k2 + e].u = hi;
    out[e].v = hi;
  }
  return out;
}

std::vector<PairLabels> consistent_block_labelings(const PairSeq& d) {
  if (d.empty() || d.size() % 4 != 0 || d.size() > 24)
    throw std::invalid_argument("consistent_block_labelings: block length must be 4k ≤ 24");
  std::vector<PairLabels> out;
  const std::uint64_t total = std::uint64_t{1} << d.size();
  out.reserve(total);
  for (std::uint64_t b = 0; b < total; ++b) out.push_back(block_labeling_from_bits(d, b));
  return out;
}

Matching assemble_matching(std::size_t n, const std::vector<std::vector<Edge>>& parts) {
  std::vector<Edge> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  if (all.size() != n) throw std::invalid_argument("assemble_matching: parts do not cover G_n");
  std::vector<char> lu(n, 0), lv(n, 0);
  for (const Edge& e : all) {
    if (e.u >= n || e.v >= n || lu[e.u] || lv[e.v]) throw std::invalid_argument("assemble_matching: overlap");
    lu[e.u] = lv[e.v] = 1;
  }
  return Matching(std::move(all));
}

Labeling assemble_labeling(std::size_t n, const std::vector<PairLabels>& parts) {
  std::vector<std::uint8_t> values(2 * n, 0);
  std::vector<char> seen(n, 0);
  std::size_t count = 0;
  for (const auto& part : parts) {
    for (const auto& pl : part) {
      if (pl.pair >= n || seen[pl.pair]) throw std::invalid_argument("assemble_labeling: overlap");
      seen[pl.pair] = 1;
      values[pl.pair] = pl.u;
      values[n + pl.pair] = pl.v;
      ++count;
    }
  }
  if (count != n) throw std::invalid_argument("assemble_labeling: parts do not cover G_n");
  return Labeling(n, std::move(values), Parity::odd);
}

std::vector<Edge> restrict_matching(const Matching& m, std::span<const std::size_t> pairs) {
  std::vector<char> in(0);
  std::size_t mx = 0;
  for (std::size_t p : pairs) mx = std::max(mx, p + 1);
  in.assign(mx, 0);
  for (std::size_t p : pairs) in[p] = 1;
  std::vector<Edge> out;
  for (const Edge& e : m.edges())
    if (e.u < mx && e.v < mx && in[e.u] && in[e.v]) out.push_back(e);
  return out;
}

PairLabels restrict_labeling(const Labeling& l, std::span<const std::size_t> pairs) {
  PairLabels out;
  for (std::size_t p : pairs) out.push_back({p, l.left(p), l.right(p)});
  return out;
}

namespace {

// edge by left vertex; nullptr entries when M is not perfect on G_n.
bool index_perfect(std::size_t n, const Matching& m, std::vector<const Edge*>& by_u, std::string* why) {
  if (m.size() != n) {
    fail(why, "matching has " + std::to_string(m.size()) + " edges, expected " + std::to_string(n));
    return false;
  }
  by_u.assign(n, nullptr);
  std::vector<char> vseen(n, 0);
  for (const Edge& e : m.edges()) {
    if (e.u >= n || e.v >= n || by_u[e.u] || vseen[e.v]) {
      fail(why, "matching is not perfect on G_n");
      return false;
    }
    by_u[e.u] = &e;
    vseen[e.v] = 1;
  }
  return true;
}

}  // namespace

bool in_m_all(const Partition& t, const Matching& m, std::string* why) {
  std::vector<const Edge*> by_u;
  if (!index_perfect(t.n, m, by_u, why)) return false;
  for (std::size_t i = 0; i < t.m; ++i) {
    for (const Edge& e : canonical_block(t.a_blocks[i]).matching) {
      if (*by_u[e.u] != e) {
        fail(why, "A-block " + std::to_string(i + 1) + " differs from M_A");
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < t.m; ++i) {
    const BlockObjects b = canonical_block(t.b_blocks[i]);
    const LabelLookup lk(b.labels);
    for (std::size_t p : t.b_blocks[i]) {
      if (!edge_consistent(*by_u[p], lk)) {
        fail(why, "B-block " + std::to_string(i + 1) + " not consistent with L_B");
        return false;
      }
    }
  }
  std::vector<char> in_c(t.n, 0);
  for (std::size_t p : t.c_set) in_c[p] = 1;
  std::size_t red = 0;
  for (std::size_t p : t.c_set) {
    const Edge& e = *by_u[p];
    if (!in_c[e.v]) {
      fail(why, "C is not matched within itself");
      return false;
    }
    red += e.is_red();
  }
  if (red % 2 == 0) {
    fail(why, "M_C has an even number of red edges");
    return false;
  }
  return true;
}

bool in_l_all(const Partition& t, const Labeling& l, std::string* why) {
  if (l.n_left() != t.n || l.n_right() != t.n) {
    fail(why, "labeling size mismatch");
    return false;
  }
  for (std::size_t i = 0; i < t.m; ++i) {
    for (const PairLabel& pl : canonical_block(t.b_blocks[i]).labels) {
      if (l.left(pl.pair) != pl.u || l.right(pl.pair) != pl.v) {
        fail(why, "B-block " + std::to_string(i + 1) + " differs from L_B");
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < t.m; ++i) {
    const BlockObjects a = canonical_block(t.a_blocks[i]);
    if (!consistent(a.matching, restrict_labeling(l, t.a_blocks[i]))) {
      fail(why, "A-block " + std::to_string(i + 1) + " not consistent with M_A");
      return false;
    }
  }
  std::size_t ones = 0;
  for (std::size_t p : t.c_set) ones += l.left(p) + l.right(p);
  if (ones % 2 == 0) {
    fail(why, "L_C has an even number of ones");
    return false;
  }
  return true;
}

BlockObjects triple_core(const Triple& x) {
  BlockObjects core = violation_core(x.h);
  const BlockObjects dd = canonical_block(x.d);
  core.matching.insert(core.matching.end(), dd.matching.begin(), dd.matching.end());
  core.labels.insert(core.labels.end(), dd.labels.begin(), dd.labels.end());
  return core;
}

bool generated_by(const Triple& x, const Matching& m, const Labeling& l, std::string* why) {
  if (!in_m_all(x.t, m, why) || !in_l_all(x.t, l, why)) return false;
  const BlockObjects core = triple_core(x);
  std::vector<Edge> want = core.matching;
  std::sort(want.begin(), want.end());
  if (restrict_matching(m, x.t.c_set) != want) {
    fail(why, "M_C differs from M_3(H) ∪ M_A(D)");
    return false;
  }
  for (const PairLabel& pl : core.labels) {
    if (l.left(pl.pair) != pl.u || l.right(pl.pair) != pl.v) {
      fail(why, "L_C differs from L_3(H) ∪ L_B(D)");
      return false;
    }
  }
  return true;
}

}  // namespace exmatch
