#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusion/partition.hpp"
#include "fusion/shape.hpp"

namespace fusion {

using Word = std::vector<int>;
/// counts[i] is the multiplicity of letter i+1.
using Composition = std::vector<int>;

/// Column-strict filling of a skew shape: rows weakly increase to the right,
/// columns strictly increase upwards. rows()[y] lists row y left to right.
class SkewTableau {
 public:
  SkewTableau() = default;
  /// Throws std::invalid_argument unless the rows fit the shape and the
  /// filling is column-strict with positive letters.
  SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  int at(int col, int row) const {
    return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - shape_.first_col(row))];
  }
  int max_letter() const;
  Composition content(int alphabet) const;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

std::string to_string(const SkewTableau& t);

/// All column-strict fillings of `shape` with the given content, in
/// lexicographic order of the concatenated rows (bottom row first).
std::vector<SkewTableau> enumerate_skew_tableaux(const SkewShape& shape, const Composition& content);

/// Number of fillings; equals enumerate_skew_tableaux(...).size().
std::int64_t kostka(const SkewShape& shape, const Composition& content);

/// Cells in column reading order: columns left to right, each top to bottom.
std::vector<Cell> reading_order(const SkewShape& shape);

Word reading_word(const SkewTableau& t);

/// Inverse of reading_word on a fixed shape; absent when the word has the
/// wrong length or the filling it produces is not column-strict.
std::optional<SkewTableau> tableau_from_word(const SkewShape& shape, const Word& word);

/// Every suffix has weakly decreasing content.
bool is_lattice(const Word& w);

Composition content_of(const Word& w, int alphabet);

/// Classical Littlewood-Richardson coefficient: lattice column-strict
/// fillings of nu/lambda with content mu. Zero for incompatible inputs.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Parses letters either as a digit string ("4123") or comma separated.
Word parse_word(const std::string& text);
std::string to_string(const Word& w);

}  // namespace fusion
