#include "fusion/tabloid.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fusion {

namespace {

struct Search {
  const std::vector<int>& target;  // mu, padded
  const Composition& beta;
  std::vector<int> kappa;
  std::vector<Ribbon> ribbons;
  std::vector<std::vector<Ribbon>> found;

  void step(std::size_t i) {
    if (i == beta.size()) {
      if (kappa == target) found.push_back(ribbons);
      return;
    }
    const int len = beta[i];
    if (len == 0) {
      step(i + 1);
      return;
    }
    const int top = static_cast<int>(i);
    // The anchor cell (1, top) must be free, hence row top is still empty.
    if (kappa[i] != 0) return;
    // Grow downward: rows top .. b+1 take old kappa[j-1] + 1, row b takes the rest.
    int used = 0;
    for (int b = top; b >= 0; --b) {
      const int rest = len - used;
      if (rest < 1) break;
      const int old_b = kappa[static_cast<std::size_t>(b)];
      const int new_b = old_b + rest;
      const bool fits_below = b == 0 || new_b <= kappa[static_cast<std::size_t>(b - 1)];
      if (fits_below && new_b <= target[static_cast<std::size_t>(b)]) {
        bool ok = true;
        for (int j = b + 1; j <= top && ok; ++j) {
          ok = kappa[static_cast<std::size_t>(j - 1)] + 1 <= target[static_cast<std::size_t>(j)];
        }
        if (ok) place(i, b, rest);
      }
      if (b == 0) break;
      // Extending one more row down: row b now spans old kappa[b] + 1 .. kappa[b-1] + 1.
      used += kappa[static_cast<std::size_t>(b - 1)] + 1 - old_b;
    }
  }

  void place(std::size_t i, int bottom, int rest) {
    const int top = static_cast<int>(i);
    const std::vector<int> saved = kappa;
    Ribbon r;
    r.start_row = top;
    r.bottom_row = bottom;
    for (int j = bottom; j <= top; ++j) {
      const int from = saved[static_cast<std::size_t>(j)] + 1;
      const int to = j == bottom ? saved[static_cast<std::size_t>(j)] + rest
                                 : saved[static_cast<std::size_t>(j - 1)] + 1;
      for (int x = from; x <= to; ++x) r.cells.push_back({x, j});
      kappa[static_cast<std::size_t>(j)] = to;
    }
    ribbons.push_back(std::move(r));
    step(i + 1);
    ribbons.pop_back();
    kappa = saved;
  }
};

Partition type_of(const Composition& weight) {
  std::vector<int> parts(weight);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

void compositions(int remaining, std::size_t slots, Composition& cur, std::vector<Composition>& out) {
  if (cur.size() + 1 == slots) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur.push_back(k);
    compositions(remaining - k, slots, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::optional<Tabloid> weight_to_tabloid(const Composition& beta_in, const Partition& mu) {
  Composition beta(beta_in);
  while (static_cast<int>(beta.size()) > mu.length() && beta.back() == 0) beta.pop_back();
  if (static_cast<int>(beta.size()) > mu.length()) {
    throw std::invalid_argument("weight has more entries than " + to_string(mu) + " has rows");
  }
  beta.resize(static_cast<std::size_t>(mu.length()), 0);
  for (int b : beta) {
    if (b < 0) return std::nullopt;
  }

  const std::vector<int> target = mu.parts();
  Search search{target, beta, std::vector<int>(target.size(), 0), {}, {}};
  search.step(0);
  if (search.found.empty()) return std::nullopt;
  if (search.found.size() > 1) {
    throw std::logic_error("two tabloids of shape " + to_string(mu) + " share a weight");
  }

  Tabloid t;
  t.shape = mu;
  t.ribbons = std::move(search.found.front());
  t.weight = beta;
  int height = 0;
  for (const Ribbon& r : t.ribbons) height += r.height();
  t.sign = height % 2 == 0 ? 1 : -1;
  t.type = type_of(beta);
  return t;
}

std::vector<Tabloid> enumerate_tabloids(const Partition& mu) {
  std::vector<Tabloid> out;
  if (mu.empty()) {
    out.push_back(Tabloid{mu, {}, {}, 1, {}});
    return out;
  }
  std::vector<Composition> weights;
  Composition cur;
  compositions(mu.size(), static_cast<std::size_t>(mu.length()), cur, weights);
  for (const Composition& w : weights) {
    if (auto t = weight_to_tabloid(w, mu)) out.push_back(std::move(*t));
  }
  return out;
}

std::int64_t inverse_kostka(const Partition& alpha, const Partition& mu) {
  if (alpha.size() != mu.size()) return 0;
  std::int64_t sum = 0;
  for (const Tabloid& t : enumerate_tabloids(mu)) {
    if (t.type == alpha) sum += t.sign;
  }
  return sum;
}

}  // namespace fusion
