#include "fusion/superposition.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace fusion {

SuperposedShape::SuperposedShape(SkewShape base, FusionContext ctx) : base_(std::move(base)), ctx_(ctx) {
  for (const Cell& c : base_.cells()) {
    cells_.insert(c);
    cells_.insert({c.col - ctx_.level, c.row + ctx_.rank});
  }
}

int SuperposedShape::min_col() const {
  int m = 0;
  bool first = true;
  for (const Cell& c : cells_) {
    if (first || c.col < m) m = c.col;
    first = false;
  }
  return m;
}

int SuperposedShape::max_col() const {
  int m = 0;
  bool first = true;
  for (const Cell& c : cells_) {
    if (first || c.col > m) m = c.col;
    first = false;
  }
  return m;
}

std::vector<int> SuperposedShape::column_rows(int col) const {
  std::vector<int> rows;
  for (const Cell& c : cells_) {
    if (c.col == col) rows.push_back(c.row);
  }
  return rows;
}

bool SuperposedShape::columns_touch(int col) const {
  for (int row : column_rows(col)) {
    if (contains({col + 1, row})) return true;
  }
  return false;
}

bool SuperposedShape::is_connected() const {
  if (cells_.empty()) return true;
  std::set<Cell> seen{*cells_.begin()};
  std::deque<Cell> queue{*cells_.begin()};
  while (!queue.empty()) {
    Cell c = queue.front();
    queue.pop_front();
    for (Cell d : {Cell{c.col + 1, c.row}, Cell{c.col - 1, c.row}, Cell{c.col, c.row + 1},
                   Cell{c.col, c.row - 1}}) {
      if (contains(d) && seen.insert(d).second) queue.push_back(d);
    }
  }
  return seen.size() == cells_.size();
}

SuperposedShape superpose(const SkewShape& shape, const FusionContext& ctx) {
  if (!in_level_rank(shape.outer(), ctx)) {
    throw std::invalid_argument("superpose: outer shape " + to_string(shape.outer()) +
                                " is not of level " + std::to_string(ctx.level) + " and rank " +
                                std::to_string(ctx.rank));
  }
  return SuperposedShape(shape, ctx);
}

std::optional<int> cutting_point(const SkewShape& shape, const FusionContext& ctx) {
  SuperposedShape sup = superpose(shape, ctx);
  if (sup.empty()) return std::nullopt;
  for (int c = sup.max_col() - 1; c >= sup.min_col(); --c) {
    if (!sup.columns_touch(c)) return c;
  }
  return std::nullopt;
}

std::string_view to_string(TransformCase c) { return c == TransformCase::cut ? "cut" : "sl2"; }

std::optional<WindowTransform> window_shape(const SuperposedShape& sup, int c, TransformCase kind) {
  const int lo = c - sup.context().level;  // exclusive
  std::map<int, std::vector<int>> by_row;
  int min_col = 0;
  bool first = true;
  for (const Cell& cell : sup.cells()) {
    if (cell.col <= lo || cell.col > c) continue;
    by_row[cell.row].push_back(cell.col);
    if (first || cell.col < min_col) min_col = cell.col;
    first = false;
  }
  if (by_row.empty()) return std::nullopt;

  const int bottom = by_row.begin()->first;
  const int top = by_row.rbegin()->first;
  const int height = top - bottom + 1;
  std::vector<int> outer(static_cast<std::size_t>(height), -1);
  std::vector<int> inner(static_cast<std::size_t>(height), -1);
  int count = 0;
  for (auto& [row, cols] : by_row) {
    std::sort(cols.begin(), cols.end());
    if (cols.back() - cols.front() + 1 != static_cast<int>(cols.size())) return std::nullopt;
    const auto r = static_cast<std::size_t>(row - bottom);
    outer[r] = cols.back() - min_col + 1;
    inner[r] = cols.front() - min_col;
    count += static_cast<int>(cols.size());
  }
  // An empty interior row sits flush with the nearest occupied row above it.
  int above = 0;
  for (int r = height - 1; r >= 0; --r) {
    auto& o = outer[static_cast<std::size_t>(r)];
    auto& i = inner[static_cast<std::size_t>(r)];
    if (o < 0) {
      o = above;
      i = above;
    } else {
      above = o;
    }
  }
  if (!is_partition_sequence(outer) || !is_partition_sequence(inner)) return std::nullopt;
  Partition nu(outer);
  Partition lam(inner);
  if (!nu.contains(lam) || nu.size() - lam.size() != count || count != sup.base_window().size()) {
    return std::nullopt;
  }
  return WindowTransform{std::move(nu), std::move(lam), kind, c};
}

std::optional<WindowTransform> theorem1_transform(const SkewShape& shape, const Partition& mu,
                                                  const FusionContext& ctx) {
  if (!in_box(shape.inner(), ctx)) {
    throw std::invalid_argument("inner shape " + to_string(shape.inner()) + " does not fit in the box");
  }
  if (!in_level_rank(shape.outer(), ctx)) {
    throw std::invalid_argument("outer shape " + to_string(shape.outer()) + " is not of level " +
                                std::to_string(ctx.level) + " and rank " + std::to_string(ctx.rank));
  }
  if (mu.size() != shape.size()) {
    throw std::invalid_argument("|mu| must equal the number of cells of the skew shape");
  }
  if (shape.empty()) return std::nullopt;

  SuperposedShape sup = superpose(shape, ctx);
  if (auto c = cutting_point(shape, ctx)) {
    return window_shape(sup, *c, TransformCase::cut);
  }
  if (mu.length() <= 2 && ctx.rank >= 2) {
    for (int col = shape.outer().part(0); col >= 1; --col) {
      if (shape.column_height(col) == 2) return window_shape(sup, col, TransformCase::sl2);
    }
  }
  return std::nullopt;
}

}  // namespace fusion
