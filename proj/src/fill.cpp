#include "fill.hpp"

#include <algorithm>

namespace fusion::detail {

namespace {

struct Slot {
  int col;
  int row;
  int above;       // cells stacked above in the same column
  bool has_left;
  bool has_below;
  bool wrapped;    // constrained by the cylinder wrap
};

class Filler {
 public:
  Filler(const SkewShape& shape, const std::vector<int>& content, std::optional<CylinderWrap> wrap,
         const std::function<bool(const Rows&)>& visit)
      : shape_(shape), remaining_(content), wrap_(wrap), visit_(visit) {
    alphabet_ = static_cast<int>(content.size());
    rows_.resize(static_cast<std::size_t>(shape.rows()));
    for (int y = 0; y < shape.rows(); ++y) {
      rows_[static_cast<std::size_t>(y)].assign(static_cast<std::size_t>(std::max(0, shape.row_length(y))), 0);
      for (int x = shape.first_col(y); x <= shape.last_col(y); ++x) {
        Slot s{x, y, 0, x > shape.first_col(y), shape.has_cell(x, y - 1), false};
        while (shape.has_cell(x, y + 1 + s.above)) ++s.above;
        if (wrap_ && y == wrap_->rank - 1 && shape.has_cell(x + wrap_->level, 0)) s.wrapped = true;
        slots_.push_back(s);
      }
    }
  }

  void run() { place(0); }

 private:
  int& entry(int col, int row) {
    return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - shape_.first_col(row))];
  }

  bool place(std::size_t idx) {
    if (idx == slots_.size()) return visit_(rows_);
    const Slot& s = slots_[idx];
    int lo = 1;
    int hi = alphabet_ - s.above;
    if (s.has_left) lo = std::max(lo, entry(s.col - 1, s.row));
    if (s.has_below) lo = std::max(lo, entry(s.col, s.row - 1) + 1);
    if (s.wrapped) hi = std::min(hi, entry(s.col + wrap_->level, 0) - 1);
    for (int v = lo; v <= hi; ++v) {
      int& left = remaining_[static_cast<std::size_t>(v - 1)];
      if (left == 0) continue;
      --left;
      entry(s.col, s.row) = v;
      const bool go_on = place(idx + 1);
      ++left;
      if (!go_on) return false;
    }
    return true;
  }

  const SkewShape& shape_;
  std::vector<int> remaining_;
  std::optional<CylinderWrap> wrap_;
  const std::function<bool(const Rows&)>& visit_;
  int alphabet_ = 0;
  Rows rows_;
  std::vector<Slot> slots_;
};

}  // namespace

void fill_skew(const SkewShape& shape, const std::vector<int>& content, std::optional<CylinderWrap> wrap,
               const std::function<bool(const Rows&)>& visit) {
  long total = 0;
  for (int c : content) {
    if (c < 0) return;
    total += c;
  }
  if (total != shape.size()) return;
  Filler(shape, content, wrap, visit).run();
}

}  // namespace fusion::detail
