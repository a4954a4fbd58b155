#include "fusion/shape.hpp"

#include <stdexcept>

namespace fusion {

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) {
    throw std::invalid_argument("skew shape: " + to_string(inner_) + " is not contained in " +
                                to_string(outer_));
  }
}

int SkewShape::column_height(int col) const {
  int h = 0;
  for (int y = 0; y < rows(); ++y) {
    if (has_cell(col, y)) ++h;
  }
  return h;
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int y = 0; y < rows(); ++y) {
    for (int x = first_col(y); x <= last_col(y); ++x) out.push_back({x, y});
  }
  return out;
}

bool is_skew(const Partition& outer, const Partition& inner) { return outer.contains(inner); }

}  // namespace fusion
