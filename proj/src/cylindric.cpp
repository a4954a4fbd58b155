#include "fusion/cylindric.hpp"

#include <stdexcept>

#include "fill.hpp"

namespace fusion {

namespace {

void require_level_rank(const SkewShape& shape, const FusionContext& ctx) {
  if (!in_level_rank(shape.outer(), ctx) || !in_level_rank(shape.inner(), ctx)) {
    throw std::invalid_argument("cylindric shapes need outer and inner of level " + std::to_string(ctx.level) +
                                " and rank " + std::to_string(ctx.rank));
  }
}

}  // namespace

bool is_cylindric(const SkewTableau& t, const FusionContext& ctx) {
  const SkewShape& s = t.shape();
  const int top = ctx.rank - 1;
  for (int x = s.first_col(top); x <= s.last_col(top); ++x) {
    if (s.has_cell(x + ctx.level, 0) && t.at(x, top) >= t.at(x + ctx.level, 0)) return false;
  }
  return true;
}

std::vector<SkewTableau> enumerate_cylindric(const SkewShape& shape, const Composition& content,
                                             const FusionContext& ctx) {
  require_level_rank(shape, ctx);
  std::vector<SkewTableau> out;
  detail::fill_skew(shape, content, detail::CylinderWrap{ctx.level, ctx.rank}, [&](const detail::Rows& rows) {
    out.emplace_back(shape, rows);
    return true;
  });
  return out;
}

std::int64_t cylindric_kostka(const SkewShape& shape, const Composition& content, const FusionContext& ctx) {
  require_level_rank(shape, ctx);
  std::int64_t n = 0;
  detail::fill_skew(shape, content, detail::CylinderWrap{ctx.level, ctx.rank}, [&](const detail::Rows&) {
    ++n;
    return true;
  });
  return n;
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  for (int i = 0; i + 1 < outer.length(); ++i) {
    if (outer.part(i + 1) > inner.part(i)) return false;
  }
  return true;
}

std::vector<Partition> fusion_pieri(const Partition& lambda, int r, const FusionContext& ctx) {
  if (r < 1 || r > ctx.level) {
    throw std::invalid_argument("fusion Pieri rule needs 1 <= r <= level");
  }
  if (!in_level_rank(lambda, ctx)) {
    throw std::invalid_argument(to_string(lambda) + " is not of level " + std::to_string(ctx.level) +
                                " and rank " + std::to_string(ctx.rank));
  }
  // Row i gains a_i cells with a_i <= lambda_{i-1} - lambda_i (row 0 unbounded).
  std::vector<Partition> out;
  const auto base = lambda.padded(ctx.rank);
  std::vector<int> add(base.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == base.size()) {
      if (left != 0) return;
      std::vector<int> parts(base);
      for (std::size_t j = 0; j < parts.size(); ++j) parts[j] += add[j];
      Partition nu(std::move(parts));
      if (in_level_rank(nu, ctx) && nu.part(0) - lambda.part(ctx.rank - 1) <= ctx.level) out.push_back(nu);
      return;
    }
    const int cap = i == 0 ? left : std::min(left, base[i - 1] - base[i]);
    for (int a = cap; a >= 0; --a) {
      add[i] = a;
      self(self, i + 1, left - a);
    }
    add[i] = 0;
  };
  rec(rec, 0, r);
  return out;
}

}  // namespace fusion
