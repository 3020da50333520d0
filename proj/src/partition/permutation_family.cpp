#include "exmatch/partition/permutation_family.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>

#include "exmatch/core/errors.hpp"

namespace exmatch {

std::vector<Triple3> all_triples(std::size_t universe) {
  std::vector<Triple3> out;
  for (std::size_t a = 1; a <= universe; ++a)
    for (std::size_t b = a + 1; b <= universe; ++b)
      for (std::size_t c = b + 1; c <= universe; ++c) out.push_back({a, b, c});
  return out;
}

std::size_t PermutationFamily::index_of(const Triple3& t) const {
  auto it = std::lower_bound(triples.begin(), triples.end(), t);
  if (it == triples.end() || *it != t) throw std::invalid_argument("permutation family: unknown triple");
  return static_cast<std::size_t>(it - triples.begin());
}

namespace {

bool in_triple(const Triple3& t, std::size_t x) { return t[0] == x || t[1] == x || t[2] == x; }

void check_triple(const Triple3& t, std::size_t universe) {
  if (!(1 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] <= universe))
    throw std::invalid_argument("permutation family: malformed triple");
}

}  // namespace

void validate_family(const PermutationFamily& f) {
  if (f.k == 0) throw std::invalid_argument("permutation family: k must be positive");
  if (f.triples != all_triples(f.universe()) || f.sigma.size() != f.triples.size())
    throw std::invalid_argument("permutation family: must list every 3-subset of [2k+3]");
  for (std::size_t i = 0; i < f.triples.size(); ++i) {
    const auto& s = f.sigma[i];
    if (s.size() != f.universe()) throw std::invalid_argument("permutation family: sigma length");
    std::vector<char> hit(2 * f.k + 1, 0);
    for (std::size_t x = 1; x <= f.universe(); ++x) {
      const std::size_t y = s[x - 1];
      if (in_triple(f.triples[i], x)) {
        if (y != 0) throw std::invalid_argument("permutation family: sigma defined on t");
        continue;
      }
      if (y < 1 || y > 2 * f.k || hit[y]) throw std::invalid_argument("permutation family: sigma not a bijection");
      hit[y] = 1;
    }
  }
}

PermutationFamily build_permutation_family(std::size_t k, Rng& rng) {
  if (k == 0) throw std::invalid_argument("permutation family: k must be positive");
  PermutationFamily f;
  f.k = k;
  f.triples = all_triples(2 * k + 3);
  for (const Triple3& t : f.triples) {
    std::vector<std::size_t> images(2 * k);
    std::iota(images.begin(), images.end(), std::size_t{1});
    rng.shuffle(images);
    std::vector<std::size_t> s(2 * k + 3, 0);
    std::size_t next = 0;
    for (std::size_t x = 1; x <= 2 * k + 3; ++x)
      if (!in_triple(t, x)) s[x - 1] = images[next++];
    f.sigma.push_back(std::move(s));
  }
  return f;
}

PermutationFamily build_permutation_family(std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return build_permutation_family(k, rng);
}

bool separates(const PermutationFamily& f, const Triple3& t, const Triple3& t_prime) {
  bool low = false, high = false;
  const auto& s = f.sigma[f.index_of(t)];
  for (std::size_t x : t_prime) {
    if (in_triple(t, x)) continue;
    (s[x - 1] <= f.k ? low : high) = true;
  }
  return low && high;
}

bool verify_family(const PermutationFamily& f, const std::vector<Triple3>& s) {
  if (s.size() < 10 * f.k) throw std::invalid_argument("verify_family: |S| must be at least 10k");
  std::set<Triple3> seen;
  for (const Triple3& t : s) {
    check_triple(t, f.universe());
    if (!seen.insert(t).second) throw std::invalid_argument("verify_family: repeated triple in S");
  }
  for (const Triple3& t : s)
    for (const Triple3& tp : s)
      if (separates(f, t, tp)) return true;
  return false;
}

namespace {

// Maximum independent set by branch and bound over 64-bit vertex masks.
struct Mis {
  std::vector<std::uint64_t> adj;
  std::uint64_t best = 0;
  int best_size = 0;

  void run(std::uint64_t chosen, int size, std::uint64_t cand) {
    if (cand == 0) {
      if (size > best_size) {
        best_size = size;
        best = chosen;
      }
      return;
    }
    if (size + std::popcount(cand) <= best_size) return;
    // Branch on the candidate of highest remaining degree.
    int v = -1, deg = -1;
    for (std::uint64_t c = cand; c; c &= c - 1) {
      const int u = std::countr_zero(c);
      const int d = std::popcount(adj[u] & cand);
      if (d > deg) {
        deg = d;
        v = u;
      }
    }
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (deg == 0) {
      run(chosen | cand, size + std::popcount(cand), 0);
      return;
    }
    run(chosen | bit, size + 1, cand & ~bit & ~adj[v]);
    run(chosen, size, cand & ~bit);
  }
};

}  // namespace

FamilyCheck verify_family_exhaustive(const PermutationFamily& f) {
  const std::size_t n = f.triples.size();
  if (n > 64) throw CapExceeded("verify_family_exhaustive: more than 64 triples (k ≥ 3)");
  Mis mis;
  mis.adj.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && (separates(f, f.triples[a], f.triples[b]) || separates(f, f.triples[b], f.triples[a])))
        mis.adj[a] |= std::uint64_t{1} << b;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  mis.run(0, 0, all);
  FamilyCheck fc;
  fc.largest_unseparated = static_cast<std::size_t>(mis.best_size);
  fc.ok = fc.largest_unseparated < 10 * f.k;
  if (!fc.ok)
    for (std::size_t i = 0; i < n; ++i)
      if ((mis.best >> i) & 1u) fc.counterexample.push_back(f.triples[i]);
  return fc;
}

FamilySearch find_verified_family(std::size_t k, std::uint64_t seed, std::size_t retry_cap) {
  Rng root(seed);
  for (std::size_t attempt = 1; attempt <= retry_cap; ++attempt) {
    const std::uint64_t s = root.next();
    PermutationFamily f = build_permutation_family(k, s);
    FamilyCheck check = verify_family_exhaustive(f);
    if (check.ok) return {std::move(f), attempt, s, std::move(check)};
  }
  throw CapExceeded("find_verified_family: no family passed within " + std::to_string(retry_cap) + " attempts");
}

nlohmann::ordered_json family_to_json(const PermutationFamily& f) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["k"] = f.k;
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < f.triples.size(); ++i) {
    std::vector<std::size_t> images;
    for (std::size_t x = 1; x <= f.universe(); ++x)
      if (f.sigma[i][x - 1] != 0) images.push_back(f.sigma[i][x - 1]);
    nlohmann::ordered_json e;
    e["t"] = f.triples[i];
    e["sigma"] = images;
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

PermutationFamily family_from_json(const nlohmann::json& j) {
  try {
    PermutationFamily f;
    f.k = j.at("k").get<std::size_t>();
    if (f.k == 0) throw FormatError("family: k must be positive");
    f.triples = all_triples(f.universe());
    f.sigma.assign(f.triples.size(), {});
    std::vector<char> filled(f.triples.size(), 0);
    for (const auto& e : j.at("entries")) {
      const auto tv = e.at("t").get<std::vector<std::size_t>>();
      if (tv.size() != 3) throw FormatError("family: t must have 3 elements");
      const Triple3 t{tv[0], tv[1], tv[2]};
      check_triple(t, f.universe());
      const std::size_t i = f.index_of(t);
      if (filled[i]) throw FormatError("family: duplicate entry");
      filled[i] = 1;
      const auto images = e.at("sigma").get<std::vector<std::size_t>>();
      if (images.size() != 2 * f.k) throw FormatError("family: sigma must have 2k images");
      std::vector<std::size_t> s(f.universe(), 0);
      std::size_t next = 0;
      for (std::size_t x = 1; x <= f.universe(); ++x)
        if (!in_triple(t, x)) s[x - 1] = images[next++];
      f.sigma[i] = std::move(s);
    }
    if (std::find(filled.begin(), filled.end(), 0) != filled.end()) throw FormatError("family: missing entries");
    validate_family(f);
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("family: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

void write_family_file(const std::string& path, const PermutationFamily& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << family_to_json(f).dump(2) << '\n';
}

PermutationFamily read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("family: ") + e.what());
  }
  return family_from_json(j);
}

}  // namespace exmatch
