#pragma once

#include <cstdint>
#include <vector>

#include "fusion/partition.hpp"
#include "fusion/shape.hpp"
#include "fusion/tableau.hpp"

namespace fusion {

/// A column-strict tableau stays column-strict when superposed with its own
/// translate by (-level, +rank). Only the top base row meets the translate,
/// so this reduces to entry(x, rank-1) < entry(x + level, 0).
bool is_cylindric(const SkewTableau& t, const FusionContext& ctx);

/// Cylindric tableaux of the given shape and content, in the same order as
/// enumerate_skew_tableaux. Both shape partitions must lie in
/// P^{level,rank}; throws std::invalid_argument otherwise.
std::vector<SkewTableau> enumerate_cylindric(const SkewShape& shape, const Composition& content,
                                             const FusionContext& ctx);

std::int64_t cylindric_kostka(const SkewShape& shape, const Composition& content, const FusionContext& ctx);

/// Level-restricted Pieri rule: nu in P^{level,rank} with nu/lambda a
/// horizontal r-strip and nu_1 - lambda_rank <= level. Requires lambda in
/// P^{level,rank} and 1 <= r <= level.
std::vector<Partition> fusion_pieri(const Partition& lambda, int r, const FusionContext& ctx);

bool is_horizontal_strip(const Partition& outer, const Partition& inner);

}  // namespace fusion
