#include "fusion/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace fusion {

bool is_partition_sequence(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!is_partition_sequence(parts_)) {
    throw std::invalid_argument("partition parts must be nonnegative and weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

std::vector<int> Partition::padded(int n) const {
  if (n < length()) {
    throw std::invalid_argument("partition " + to_string(*this) + " has more than " +
                                std::to_string(n) + " parts");
  }
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(n), 0);
  return out;
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i) {
    if (other.part(i) > part(i)) return false;
  }
  return true;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.part(i));
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

FusionContext::FusionContext(int level, int rank) : level(level), rank(rank) {
  if (level < 1 || rank < 1) {
    throw std::invalid_argument("level and rank must be positive");
  }
}

Classification classify(const Partition& p, const FusionContext& ctx) {
  Classification c;
  if (p.length() > ctx.rank) return c;
  c.in_P = p.part(0) - p.part(ctx.rank - 1) <= ctx.level;
  c.in_R = p.part(0) <= ctx.level;
  return c;
}

Partition transpose(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.part(0)), 0);
  for (int r : p.parts()) {
    for (int c = 0; c < r; ++c) ++cols[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(cols));
}

Partition complement(const Partition& p, const FusionContext& ctx) {
  if (!in_box(p, ctx)) {
    throw std::invalid_argument("complement: " + to_string(p) + " does not fit in the " +
                                std::to_string(ctx.level) + "x" + std::to_string(ctx.rank) + " box");
  }
  std::vector<int> out(static_cast<std::size_t>(ctx.rank));
  for (int i = 0; i < ctx.rank; ++i) {
    out[static_cast<std::size_t>(i)] = ctx.level - p.part(ctx.rank - 1 - i);
  }
  return Partition(std::move(out));
}

namespace {

void partitions_rec(int remaining, int max_part, int parts_left, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (parts_left == 0) return;
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int m, int max_parts, int max_part) {
  std::vector<Partition> out;
  if (m < 0) return out;
  std::vector<int> cur;
  partitions_rec(m, max_part < 0 ? m : max_part, max_parts < 0 ? m : max_parts, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(int width, int height) {
  std::vector<Partition> out;
  for (int m = 0; m <= width * height; ++m) {
    auto level = partitions_of(m, height, width);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Partition add_full_column(const Partition& p, int n) {
  auto parts = p.padded(n);
  for (int& x : parts) ++x;
  return Partition(std::move(parts));
}

bool has_full_column(const Partition& p, int n) { return n >= 1 && p.length() == n; }

Partition remove_full_column(const Partition& p, int n) {
  if (!has_full_column(p, n)) {
    throw std::invalid_argument(to_string(p) + " has no column of height " + std::to_string(n));
  }
  auto parts = p.parts();
  for (int& x : parts) --x;
  return Partition(std::move(parts));
}

std::vector<int> fold_parts(const Partition& p, int width) {
  std::vector<int> out(static_cast<std::size_t>(width), 0);
  for (int i = 0; i < p.length(); ++i) out[static_cast<std::size_t>(i % width)] += p.part(i);
  return out;
}

Partition parse_partition(const std::string& text) {
  if (text == "-" || text.empty()) return {};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const char* first = text.data() + pos;
    const char* last = text.data() + next;
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw std::invalid_argument("malformed partition '" + text + "'");
    }
    parts.push_back(value);
    pos = next + 1;
  }
  if (!is_partition_sequence(parts)) {
    throw std::invalid_argument("partition '" + text + "' is not weakly decreasing and nonnegative");
  }
  return Partition(std::move(parts));
}

}  // namespace fusion
