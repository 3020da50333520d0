#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "exmatch/core/rng.hpp"
#include "json.hpp"

namespace exmatch {

/// Sorted 3-subset of [2k+3], 1-based.
using Triple3 = std::array<std::size_t, 3>;

/// All 3-subsets of [1, universe] in lexicographic order.
std::vector<Triple3> all_triples(std::size_t universe);

/// One bijection σ_t : [2k+3]∖t → [2k] per 3-subset t.
struct PermutationFamily {
  std::size_t k = 0;
  std::vector<Triple3> triples;                 // all_triples(2k+3)
  std::vector<std::vector<std::size_t>> sigma;  // sigma[i][x-1] = σ_t(x), 0 for x ∈ t

  std::size_t universe() const { return 2 * k + 3; }
  std::size_t index_of(const Triple3& t) const;
  std::size_t image(const Triple3& t, std::size_t x) const { return sigma[index_of(t)][x - 1]; }

  bool operator==(const PermutationFamily&) const = default;
};

/// Throws std::invalid_argument unless every σ_t is a bijection onto [2k].
void validate_family(const PermutationFamily& f);

/// Independent uniform bijections.
PermutationFamily build_permutation_family(std::size_t k, std::uint64_t seed);
PermutationFamily build_permutation_family(std::size_t k, Rng& rng);

/// Some v1, v2 ∈ t'∖t with 1 ≤ σ_t(v1) ≤ k < σ_t(v2) ≤ 2k.
bool separates(const PermutationFamily& f, const Triple3& t, const Triple3& t_prime);

/// Whether some t, t' ∈ s separate. Throws std::invalid_argument when
/// |s| < 10k, an entry is not a sorted 3-subset of [2k+3], or an entry
/// repeats.
bool verify_family(const PermutationFamily& f, const std::vector<Triple3>& s);

struct FamilyCheck {
  bool ok = false;
  /// Size of the largest S with no separating pair. The family satisfies the
  /// property for every |S| ≥ 10k iff this is below 10k.
  std::size_t largest_unseparated = 0;
  std::vector<Triple3> counterexample;  // such an S when !ok
};

/// Exhaustive check over all S via a maximum independent set of the
/// "no separating pair" graph on triples. CapExceeded past 64 triples (k ≥ 3).
FamilyCheck verify_family_exhaustive(const PermutationFamily& f);

struct FamilySearch {
  PermutationFamily family;
  std::size_t attempts = 0;
  std::uint64_t seed = 0;  // seed of the accepted family
  FamilyCheck check;
};

/// Builds families from seeds derived from `seed` until one passes the
/// exhaustive check. CapExceeded after `retry_cap` attempts.
FamilySearch find_verified_family(std::size_t k, std::uint64_t seed, std::size_t retry_cap = 10000);

/// {schema_version, k, entries: [{t, sigma}]}, sigma listing σ_t(x) for the
/// x ∉ t in increasing order.
nlohmann::ordered_json family_to_json(const PermutationFamily& f);
/// Throws FormatError on malformed input.
PermutationFamily family_from_json(const nlohmann::json& j);

void write_family_file(const std::string& path, const PermutationFamily& f);
PermutationFamily read_family_file(const std::string& path);

}  // namespace exmatch
