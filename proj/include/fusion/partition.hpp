#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace fusion {

/// Integer partition kept in canonical form: weakly decreasing, strictly
/// positive parts (trailing zeros are dropped on construction).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// 0-based part; zero past the end.
  int part(int i) const {
    return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  /// Parts padded with zeros to length n. Throws when p has more than n parts.
  std::vector<int> padded(int n) const;

  bool contains(const Partition& other) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Level and rank of a type-A fusion ring.
struct FusionContext {
  int level = 1;
  int rank = 1;

  FusionContext() = default;
  FusionContext(int level, int rank);

  int modulus() const { return level + rank; }
};

struct Classification {
  bool in_P = false;  ///< at most `rank` parts and p_1 - p_rank <= level
  bool in_R = false;  ///< fits inside the level x rank box
};

Classification classify(const Partition& p, const FusionContext& ctx);
inline bool in_level_rank(const Partition& p, const FusionContext& ctx) { return classify(p, ctx).in_P; }
inline bool in_box(const Partition& p, const FusionContext& ctx) { return classify(p, ctx).in_R; }

Partition transpose(const Partition& p);

/// Complement of p inside the level x rank rectangle. Throws
/// std::invalid_argument when p does not fit.
Partition complement(const Partition& p, const FusionContext& ctx);

/// All partitions of m with at most max_parts parts, each at most max_part,
/// in lexicographically decreasing order. Negative bounds mean unbounded.
std::vector<Partition> partitions_of(int m, int max_parts = -1, int max_part = -1);

/// All partitions fitting in the width x height box, ordered by size then
/// lexicographically decreasing.
std::vector<Partition> partitions_in_box(int width, int height);

/// Partition with one extra column of height n (every one of the first n
/// parts incremented). Throws when p has more than n parts.
Partition add_full_column(const Partition& p, int n);

/// Removes one column of height n, if present.
bool has_full_column(const Partition& p, int n);
Partition remove_full_column(const Partition& p, int n);

/// Cyclic fold used by level-rank duality: entry j is the sum of
/// parts j, j + width, j + 2 width, ... (0-based j < width). The result is a
/// composition; it is not guaranteed to be weakly decreasing.
std::vector<int> fold_parts(const Partition& p, int width);

/// Parses "3,2,1", "-" (empty) or "3,2,0,0". Throws std::invalid_argument.
Partition parse_partition(const std::string& text);

/// True when the sequence is weakly decreasing and nonnegative.
bool is_partition_sequence(const std::vector<int>& parts);

}  // namespace fusion
