#pragma once

#include <compare>
#include <vector>

#include "fusion/partition.hpp"

namespace fusion {

/// Lattice cell. Columns are 1-based within the base diagram; rows are
/// 0-based from the bottom (French convention).
struct Cell {
  int col = 0;
  int row = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.row <=> b.row; c != 0) return c;
    return a.col <=> b.col;
  }
};

/// Skew diagram outer/inner with inner contained in outer.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);
  explicit SkewShape(Partition outer) : SkewShape(std::move(outer), Partition{}) {}

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }

  int rows() const { return outer_.length(); }
  int size() const { return outer_.size() - inner_.size(); }
  bool empty() const { return size() == 0; }

  /// Row y occupies columns first_col(y) .. last_col(y); empty when
  /// first_col(y) > last_col(y).
  int first_col(int row) const { return inner_.part(row) + 1; }
  int last_col(int row) const { return outer_.part(row); }
  int row_length(int row) const { return outer_.part(row) - inner_.part(row); }

  bool has_cell(int col, int row) const {
    return row >= 0 && col >= first_col(row) && col <= last_col(row);
  }

  /// Number of cells in column `col`.
  int column_height(int col) const;

  /// Cells in row order (bottom row first, left to right).
  std::vector<Cell> cells() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// Shape built only when inner is contained in outer.
bool is_skew(const Partition& outer, const Partition& inner);

}  // namespace fusion
