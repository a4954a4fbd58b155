#pragma once

#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "fusion/partition.hpp"
#include "fusion/shape.hpp"

namespace fusion {

/// Union of a skew shape and its translate by (-level, +rank). The base copy
/// occupies rows 0 .. rank-1 and the translate rows rank .. 2 rank-1.
class SuperposedShape {
 public:
  SuperposedShape(SkewShape base, FusionContext ctx);

  const std::set<Cell>& cells() const { return cells_; }
  const SkewShape& base_window() const { return base_; }
  const FusionContext& context() const { return ctx_; }

  bool empty() const { return cells_.empty(); }
  bool contains(Cell c) const { return cells_.count(c) != 0; }
  int min_col() const;
  int max_col() const;

  /// Rows occupied in `col`, ascending.
  std::vector<int> column_rows(int col) const;

  /// True when columns col and col+1 have a cell in a common row.
  bool columns_touch(int col) const;

  /// Edge-connectivity of the cell set (an empty set counts as connected).
  bool is_connected() const;

 private:
  SkewShape base_;
  FusionContext ctx_;
  std::set<Cell> cells_;
};

/// Requires shape.outer() in P^{level,rank}; throws std::invalid_argument
/// otherwise.
SuperposedShape superpose(const SkewShape& shape, const FusionContext& ctx);

/// Rightmost column c of the superposition, with c+1 not past the last
/// occupied column, such that columns c and c+1 share no edge.
std::optional<int> cutting_point(const SkewShape& shape, const FusionContext& ctx);

enum class TransformCase { cut, sl2 };

std::string_view to_string(TransformCase c);

struct WindowTransform {
  Partition outer;
  Partition inner;
  TransformCase kind = TransformCase::cut;
  int column = 0;  ///< right edge of the window
};

/// Skew shape cut out of the superposition by the columns c-level+1 .. c,
/// shifted so the leftmost occupied column is 1 and with empty bottom rows
/// dropped. Absent when the window is not a skew shape of the right size.
std::optional<WindowTransform> window_shape(const SuperposedShape& sup, int c, TransformCase kind);

/// Positive-formula reshaping: the cutting-point window when one exists,
/// otherwise (mu with at most two parts, rank >= 2) the window ending at the
/// rightmost height-two column of the base diagram.
/// Requires inner in R^{level,rank}, outer in P^{level,rank} and
/// |mu| = |outer| - |inner|.
std::optional<WindowTransform> theorem1_transform(const SkewShape& shape, const Partition& mu,
                                                  const FusionContext& ctx);

}  // namespace fusion
