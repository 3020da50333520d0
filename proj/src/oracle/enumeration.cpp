#include "exmatch/oracle/enumeration.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "exmatch/core/errors.hpp"

namespace exmatch {

namespace {

constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

// pair_edges[u][v] = {red edge, blue edge}, kAbsent where missing.
using PairTable = std::vector<std::vector<std::array<std::size_t, 2>>>;

PairTable pair_table(const ColoredBipartiteGraph& g) {
  PairTable t(g.n_left(), std::vector<std::array<std::size_t, 2>>(g.n_right(), {kAbsent, kAbsent}));
  for (std::size_t ei = 0; ei < g.num_edges(); ++ei) {
    const Edge& e = g.edge(ei);
    t[e.u][e.v][static_cast<std::size_t>(e.color)] = ei;
  }
  return t;
}

class Enumerator {
 public:
  using Sink = std::function<void(const std::vector<std::size_t>&)>;

  Enumerator(const ColoredBipartiteGraph& g, const PairTable& t)
      : g_(g), t_(t), perm_(g.n_left()), used_(g.n_right(), 0), chosen_(g.n_left()) {
    neighbors_.resize(g.n_left());
    for (std::size_t u = 0; u < g.n_left(); ++u)
      for (std::size_t v = 0; v < g.n_right(); ++v)
        if (t[u][v][0] != kAbsent || t[u][v][1] != kAbsent) neighbors_[u].push_back(v);
  }

  const std::vector<std::size_t>& neighbors(std::size_t u) const { return neighbors_[u]; }

  /// Enumerate with u=0 pinned to right vertex `v0` (or all when v0 = kAbsent).
  void run(std::size_t v0, const Sink& sink) {
    if (g_.n_left() == 0) {
      sink(chosen_);
      return;
    }
    if (v0 == kAbsent) {
      assign(0, sink);
    } else {
      perm_[0] = v0;
      used_[v0] = 1;
      assign(1, sink);
      used_[v0] = 0;
    }
  }

 private:
  void assign(std::size_t u, const Sink& sink) {
    if (u == g_.n_left()) {
      colors(0, sink);
      return;
    }
    for (std::size_t v : neighbors_[u]) {
      if (used_[v]) continue;
      used_[v] = 1;
      perm_[u] = v;
      assign(u + 1, sink);
      used_[v] = 0;
    }
  }

  void colors(std::size_t u, const Sink& sink) {
    if (u == g_.n_left()) {
      sink(chosen_);
      return;
    }
    for (std::size_t c = 0; c < 2; ++c) {
      const std::size_t ei = t_[u][perm_[u]][c];
      if (ei == kAbsent) continue;
      chosen_[u] = ei;
      colors(u + 1, sink);
    }
  }

  const ColoredBipartiteGraph& g_;
  const PairTable& t_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::size_t> perm_;
  std::vector<char> used_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

void for_each_perfect_matching(const ColoredBipartiteGraph& g,
                               const std::function<void(const std::vector<std::size_t>&)>& fn,
                               const EnumerationLimits& limits) {
  if (!g.is_square()) return;
  if (g.n_left() > limits.max_n) {
    throw CapExceeded("perfect-matching enumeration: n=" + std::to_string(g.n_left()) +
                      " exceeds cap " + std::to_string(limits.max_n));
  }
  const PairTable table = pair_table(g);
  Enumerator root(g, table);
  if (limits.threads <= 1 || g.n_left() < 2) {
    root.run(kAbsent, fn);
    return;
  }
  const auto& first = root.neighbors(0);
  std::vector<std::vector<std::vector<std::size_t>>> buffers(first.size());
  const std::size_t workers = std::min<std::size_t>(limits.threads, first.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      Enumerator local(g, table);
      for (std::size_t b = w; b < first.size(); b += workers) {
        local.run(first[b], [&](const std::vector<std::size_t>& pm) { buffers[b].push_back(pm); });
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& buf : buffers)
    for (const auto& pm : buf) fn(pm);
}

std::vector<Matching> enumerate_perfect_matchings(const ColoredBipartiteGraph& g,
                                                  const EnumerationLimits& limits) {
  std::vector<Matching> out;
  for_each_perfect_matching(
      g,
      [&](const std::vector<std::size_t>& pm) {
        std::vector<Edge> edges;
        edges.reserve(pm.size());
        for (std::size_t ei : pm) edges.push_back(g.edge(ei));
        out.emplace_back(std::move(edges));
      },
      limits);
  return out;
}

std::size_t count_perfect_matchings(const ColoredBipartiteGraph& g, const EnumerationLimits& limits) {
  std::size_t count = 0;
  for_each_perfect_matching(g, [&](const std::vector<std::size_t>&) { ++count; }, limits);
  return count;
}

std::vector<Matching> enumerate_exact_k(const ColoredBipartiteGraph& g, std::size_t k,
                                        const EnumerationLimits& limits) {
  std::vector<Matching> out;
  for (Matching& m : enumerate_perfect_matchings(g, limits)) {
    if (m.red_count() == k) out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matching> enumerate_parity_matchings(const ColoredBipartiteGraph& g, Parity target,
                                                 const EnumerationLimits& limits) {
  std::vector<Matching> out;
  for (Matching& m : enumerate_perfect_matchings(g, limits)) {
    if (m.red_parity() == target) out.push_back(std::move(m));
  }
  return out;
}

std::vector<Labeling> enumerate_labelings(std::size_t n, Parity target, const EnumerationLimits& limits) {
  const std::size_t bits = 2 * n;
  if (bits > limits.max_label_vertices) {
    throw CapExceeded("labeling enumeration: 2n=" + std::to_string(bits) + " exceeds cap " +
                      std::to_string(limits.max_label_vertices));
  }
  std::vector<Labeling> out;
  out.reserve(bits == 0 ? 1 : (std::size_t{1} << (bits - 1)));
  std::vector<std::uint8_t> values(bits);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << bits); ++x) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < bits; ++i) {
      values[i] = static_cast<std::uint8_t>((x >> (bits - 1 - i)) & 1u);
      ones += values[i];
    }
    if (labeling_parity_ok(ones, n, target)) out.emplace_back(n, values, target);
  }
  return out;
}

bool brute_force_parity_decision(const ColoredBipartiteGraph& g, Parity target,
                                 const EnumerationLimits& limits) {
  bool found = false;
  const std::size_t want = target == Parity::odd ? 1 : 0;
  for_each_perfect_matching(
      g,
      [&](const std::vector<std::size_t>& pm) {
        if (found) return;
        std::size_t red = 0;
        for (std::size_t ei : pm) red += g.edge(ei).is_red() ? 1 : 0;
        if (red % 2 == want) found = true;
      },
      limits);
  return found;
}

std::vector<bool> brute_force_relevant_edges(const ColoredBipartiteGraph& g,
                                             const EnumerationLimits& limits) {
  std::vector<bool> rel(g.num_edges(), false);
  for_each_perfect_matching(
      g,
      [&](const std::vector<std::size_t>& pm) {
        for (std::size_t ei : pm) rel[ei] = true;
      },
      limits);
  return rel;
}

}  // namespace exmatch
