#pragma once

// Slow, independent reference computations used only by the tests. Nothing
// here calls into the enumeration or straightening code it is checking.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "fusion/partition.hpp"

namespace oracle {

using Grid = std::map<std::pair<int, int>, int>;  // (col,row) -> letter

inline std::vector<std::pair<int, int>> skew_cells(const fusion::Partition& outer, const fusion::Partition& inner) {
  std::vector<std::pair<int, int>> cells;
  for (int y = 0; y < outer.length(); ++y) {
    for (int x = inner.part(y) + 1; x <= outer.part(y); ++x) cells.emplace_back(x, y);
  }
  return cells;
}

/// Every map cells -> {1..k}, kept when it is column-strict with the content.
inline std::vector<Grid> all_fillings(const fusion::Partition& outer, const fusion::Partition& inner,
                                      const std::vector<int>& content) {
  const auto cells = skew_cells(outer, inner);
  const int k = static_cast<int>(content.size());
  std::vector<Grid> out;
  if (k == 0) {
    if (cells.empty()) out.emplace_back();
    return out;
  }
  std::vector<int> letters(cells.size(), 1);
  for (;;) {
    Grid g;
    std::vector<int> count(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      g[cells[i]] = letters[i];
      ++count[static_cast<std::size_t>(letters[i] - 1)];
    }
    bool ok = count == content;
    for (auto& [cell, v] : g) {
      if (!ok) break;
      auto right = g.find({cell.first + 1, cell.second});
      if (right != g.end() && right->second < v) ok = false;
      auto up = g.find({cell.first, cell.second + 1});
      if (up != g.end() && up->second <= v) ok = false;
    }
    if (ok) out.push_back(g);
    std::size_t i = 0;
    while (i < letters.size() && letters[i] == k) letters[i++] = 1;
    if (i == letters.size()) break;
    ++letters[i];
  }
  return out;
}

/// Column reading word: sort cells by column ascending, row descending.
inline std::vector<int> column_word(const Grid& g) {
  std::vector<std::pair<int, int>> cells;
  for (auto& [c, v] : g) cells.push_back(c);
  std::sort(cells.begin(), cells.end(), [](auto a, auto b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  });
  std::vector<int> w;
  for (auto c : cells) w.push_back(g.at(c));
  return w;
}

inline bool suffixes_are_partitions(const std::vector<int>& w) {
  for (std::size_t start = 0; start <= w.size(); ++start) {
    std::map<int, int> cnt;
    for (std::size_t i = start; i < w.size(); ++i) ++cnt[w[i]];
    int maxletter = cnt.empty() ? 0 : cnt.rbegin()->first;
    for (int a = 2; a <= maxletter; ++a) {
      if (cnt[a] > cnt[a - 1]) return false;
    }
  }
  return true;
}

inline std::int64_t brute_lr(const fusion::Partition& lambda, const fusion::Partition& mu,
                             const fusion::Partition& nu) {
  if (!nu.contains(lambda) || lambda.size() + mu.size() != nu.size()) return 0;
  std::int64_t n = 0;
  for (const Grid& g : all_fillings(nu, lambda, mu.parts())) {
    if (suffixes_are_partitions(column_word(g))) ++n;
  }
  return n;
}

/// Tabloids by brute-force labelling: every cell of mu gets the row index of
/// the first-column cell anchoring its ribbon. Returns (weight, sign) pairs.
inline std::set<std::pair<std::vector<int>, int>> brute_tabloids(const fusion::Partition& mu) {
  const auto cells = skew_cells(mu, {});
  const int rows = mu.length();
  std::set<std::pair<std::vector<int>, int>> out;
  if (cells.empty()) {
    out.insert({{}, 1});
    return out;
  }
  std::vector<int> label(cells.size(), 0);
  for (;;) {
    std::vector<std::set<std::pair<int, int>>> groups(static_cast<std::size_t>(rows));
    for (std::size_t i = 0; i < cells.size(); ++i) groups[static_cast<std::size_t>(label[i])].insert(cells[i]);
    bool ok = true;
    int height = 0;
    std::vector<int> weight(static_cast<std::size_t>(rows), 0);
    for (int r = 0; r < rows && ok; ++r) {
      const auto& grp = groups[static_cast<std::size_t>(r)];
      weight[static_cast<std::size_t>(r)] = static_cast<int>(grp.size());
      if (grp.empty()) continue;
      // The anchor is the topmost first-column cell of the ribbon.
      if (!grp.count({1, r}) || grp.count({1, r + 1})) {
        ok = false;
        break;
      }
      // Ribbon: a path from the anchor where each step goes right or down.
      std::pair<int, int> cur{1, r};
      std::size_t visited = 1;
      int lo = r;
      while (true) {
        std::pair<int, int> right{cur.first + 1, cur.second};
        std::pair<int, int> down{cur.first, cur.second - 1};
        const bool has_r = grp.count(right) != 0;
        const bool has_d = grp.count(down) != 0;
        if (has_r && has_d) {
          ok = false;
          break;
        }
        if (!has_r && !has_d) break;
        cur = has_r ? right : down;
        lo = std::min(lo, cur.second);
        ++visited;
      }
      if (visited != grp.size()) ok = false;
      // No 2x2 block.
      for (auto c : grp) {
        if (grp.count({c.first + 1, c.second}) && grp.count({c.first, c.second + 1}) &&
            grp.count({c.first + 1, c.second + 1})) {
          ok = false;
        }
      }
      height += r - lo;
    }
    if (ok) out.insert({weight, height % 2 == 0 ? 1 : -1});
    std::size_t i = 0;
    while (i < label.size() && label[i] == rows - 1) label[i++] = 0;
    if (i == label.size()) break;
    ++label[i];
  }
  return out;
}

/// Applies affine Weyl generators to nu + rho breadth-first and returns
/// (-1)^length of the shortest word reaching gamma + rho, or 0 when gamma +
/// rho is not reached within max_length steps.
inline int affine_orbit_sign(const std::vector<int>& gamma, const std::vector<int>& nu, int level, int rank,
                             int max_length) {
  auto shift = [&](std::vector<int> v) {
    for (int k = 0; k < rank; ++k) v[static_cast<std::size_t>(k)] += rank - 1 - k;
    return v;
  };
  const auto target = shift(gamma);
  std::map<std::vector<int>, int> dist;
  std::deque<std::vector<int>> queue;
  dist[shift(nu)] = 0;
  queue.push_back(shift(nu));
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    const int d = dist[v];
    if (v == target) return d % 2 == 0 ? 1 : -1;
    if (d == max_length) continue;
    std::vector<std::vector<int>> next;
    for (int i = 0; i + 1 < rank; ++i) {
      auto w = v;
      std::swap(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i + 1)]);
      next.push_back(w);
    }
    auto w = v;
    w.front() = v.back() + level + rank;
    w.back() = v.front() - level - rank;
    next.push_back(w);
    for (auto& x : next) {
      if (!dist.count(x)) {
        dist[x] = d + 1;
        queue.push_back(x);
      }
    }
  }
  return 0;
}

/// Inverse of an upper-unitriangular integer matrix.
inline std::vector<std::vector<std::int64_t>> unitriangular_inverse(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<std::int64_t>> inv(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    inv[j][j] = 1;
    for (std::size_t ii = j; ii-- > 0;) {
      std::int64_t s = 0;
      for (std::size_t k = ii + 1; k <= j; ++k) s += m[ii][k] * inv[k][j];
      inv[ii][j] = -s;
    }
  }
  return inv;
}

}  // namespace oracle
