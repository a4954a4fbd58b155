#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fusion/partition.hpp"
#include "fusion/shape.hpp"
#include "fusion/tableau.hpp"

namespace fusion {

/// Connected skew shape without a 2x2 square. start_row is the row of its
/// topmost cell in column 1, which is where the ribbon is anchored.
struct Ribbon {
  int start_row = 0;
  int bottom_row = 0;
  std::vector<Cell> cells;  ///< row order, bottom row first

  int length() const { return static_cast<int>(cells.size()); }
  int height() const { return start_row - bottom_row; }

  friend bool operator==(const Ribbon&, const Ribbon&) = default;
};

/// Tiling of a partition by ribbons that each meet the first column
/// (Egecioglu-Remmel tabloid).
struct Tabloid {
  Partition shape;
  std::vector<Ribbon> ribbons;  ///< ordered by start_row
  Composition weight;           ///< one entry per row of shape
  int sign = 1;
  Partition type;

  friend bool operator==(const Tabloid&, const Tabloid&) = default;
};

/// Draws ribbons of the prescribed lengths bottom-up, the i-th anchored at
/// the i-th first-column cell (zero means no ribbon is anchored there).
/// Absent when no tabloid has this weight. Throws std::invalid_argument when
/// beta has nonzero entries past the last row of mu, and std::logic_error if
/// two different tilings share a weight.
std::optional<Tabloid> weight_to_tabloid(const Composition& beta, const Partition& mu);

/// All tabloids of shape mu, ordered by decreasing weight (lexicographic).
std::vector<Tabloid> enumerate_tabloids(const Partition& mu);

/// Signed count of tabloids of shape mu and type alpha: the (alpha, mu)
/// entry of the inverse Kostka matrix.
std::int64_t inverse_kostka(const Partition& alpha, const Partition& mu);

}  // namespace fusion
