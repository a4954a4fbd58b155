#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fusion/shape.hpp"

namespace fusion::detail {

using Rows = std::vector<std::vector<int>>;

/// Extra constraint tying row rank-1 to row 0 shifted by level columns:
/// entry(x, rank-1) < entry(x + level, 0).
struct CylinderWrap {
  int level = 0;
  int rank = 0;
};

/// Backtracking fill of `shape` with the given content, bottom row first,
/// left to right, trying letters in increasing order. The visitor returns
/// false to stop early.
void fill_skew(const SkewShape& shape, const std::vector<int>& content, std::optional<CylinderWrap> wrap,
               const std::function<bool(const Rows&)>& visit);

}  // namespace fusion::detail
