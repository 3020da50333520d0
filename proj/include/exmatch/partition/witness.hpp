#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "exmatch/core/graph.hpp"
#include "exmatch/core/rng.hpp"
#include "exmatch/partition/blocks.hpp"
#include "exmatch/partition/partition.hpp"

namespace exmatch {

/// Two triples (T, H, D) and (T, H', D') over the same partition.
struct WitnessConfig {
  Partition t;
  std::array<std::size_t, 3> h{};
  PairSeq d;
  std::array<std::size_t, 3> h_prime{};
  PairSeq d_prime;
};

/// Every failed precondition, empty when the configuration is valid: both
/// triples well formed, D2 = D2', |H ∩ H'| ≤ 1, and two pairs of H'∖H whose
/// right vertices get different L_B(D) labels.
std::vector<std::string> witness_precondition_failures(const WitnessConfig& c);

struct WitnessChecks {
  bool i = false;    // L'_{H'} = L_3(H')
  bool ii = false;   // L'_{D'} consistent with M_A(D')
  bool iii = false;  // M'_H = M_3(H)
  bool iv = false;   // M'_D perfect on D and consistent with L_B(D)
  bool v = false;    // M' perfect on C with exactly one edge violating L'

  bool all() const { return i && ii && iii && iv && v; }
};

/// Conditions (i)-(v) for any (M', L') on C, checked from their definitions.
WitnessChecks check_witness(const WitnessConfig& c, const std::vector<Edge>& matching, const PairLabels& labels);

struct OneViolationWitness {
  std::vector<Edge> matching;  // M' on C
  PairLabels labels;           // L' on C
  std::size_t pair1 = 0;       // (u1, v1), (u2, v2) ∈ H'∖H with different L_B(D)(v)
  std::size_t pair2 = 0;
  std::size_t pair3 = 0;       // the remaining pair of H'
  std::size_t intersection = 0;
  std::vector<Edge> violating;
  WitnessChecks checks;
};

/// L' = 1 on C except 0 on the right vertices of H'; M' = straight red
/// edges except blue (u1, v2) and (u2, v1). Throws std::invalid_argument
/// listing every failed precondition.
OneViolationWitness one_violation_witness(const WitnessConfig& c);

/// A uniformly drawn valid configuration with |H ∩ H'| = `intersection`.
/// Throws std::invalid_argument when impossible (intersection 0 needs k ≥ 2).
WitnessConfig random_witness_config(std::size_t k, std::size_t m, std::size_t intersection, Rng& rng);

}  // namespace exmatch
