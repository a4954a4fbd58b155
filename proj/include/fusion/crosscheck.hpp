#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusion/partition.hpp"

namespace fusion {

struct FusionTriple {
  Partition lambda;
  Partition mu;
  Partition nu;
};

/// Every (lambda, mu, nu) with lambda, mu in the level x rank box, nu in
/// P^{level,rank}, |lambda| + |mu| = |nu| <= max_weight. Negative max_weight
/// means no bound beyond the box.
std::vector<FusionTriple> admissible_triples(const FusionContext& ctx, int max_weight = -1);

/// Every (lambda, mu, nu) of ordinary partitions with lambda inside nu and
/// |lambda| + |mu| = |nu| <= max_weight.
std::vector<FusionTriple> classical_triples(int max_weight);

/// Level-rank image of nu: the fold of its transpose with width `level`.
/// Absent when the fold is not weakly decreasing.
std::optional<Partition> level_rank_image(const Partition& nu, const FusionContext& ctx);

struct IdentityCheck {
  std::string name;
  std::int64_t checked = 0;
  std::int64_t passed = 0;
  std::vector<std::string> failures;  ///< first few counterexamples

  bool ok() const { return checked == passed; }
  void record(bool good, const std::string& what);
};

struct CrosscheckReport {
  FusionContext ctx;
  int max_weight = 0;
  std::vector<IdentityCheck> checks;

  bool ok() const;
};

/// Runs method agreement, nonnegativity, the positive formula, the symmetry
/// laws and stability on admissible_triples(ctx, max_weight), the crystal
/// involution on classical_triples(max_weight) and the inverse Kostka
/// identity for every m <= max_weight.
CrosscheckReport crosscheck(const FusionContext& ctx, int max_weight);

}  // namespace fusion
