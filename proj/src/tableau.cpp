#include "fusion/tableau.hpp"

#include <algorithm>
#include <stdexcept>

#include "fill.hpp"

namespace fusion {

SkewTableau::SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  // Tolerate trailing empty rows beyond the outer shape, nothing else.
  while (static_cast<int>(rows_.size()) > shape_.rows() && rows_.back().empty()) rows_.pop_back();
  if (static_cast<int>(rows_.size()) != shape_.rows()) {
    throw std::invalid_argument("tableau has " + std::to_string(rows_.size()) + " rows, shape has " +
                                std::to_string(shape_.rows()));
  }
  for (int y = 0; y < shape_.rows(); ++y) {
    const auto& row = rows_[static_cast<std::size_t>(y)];
    if (static_cast<int>(row.size()) != shape_.row_length(y)) {
      throw std::invalid_argument("tableau row " + std::to_string(y + 1) + " has the wrong length");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] < 1) throw std::invalid_argument("tableau letters must be positive");
      if (i > 0 && row[i] < row[i - 1]) throw std::invalid_argument("tableau rows must weakly increase");
    }
  }
  for (const Cell& c : shape_.cells()) {
    if (shape_.has_cell(c.col, c.row - 1) && at(c.col, c.row - 1) >= at(c.col, c.row)) {
      throw std::invalid_argument("tableau columns must strictly increase upwards");
    }
  }
}

int SkewTableau::max_letter() const {
  int m = 0;
  for (const auto& row : rows_) {
    for (int v : row) m = std::max(m, v);
  }
  return m;
}

Composition SkewTableau::content(int alphabet) const {
  Composition out(static_cast<std::size_t>(std::max(alphabet, max_letter())), 0);
  for (const auto& row : rows_) {
    for (int v : row) ++out[static_cast<std::size_t>(v - 1)];
  }
  return out;
}

std::string to_string(const SkewTableau& t) {
  std::string s;
  for (std::size_t y = 0; y < t.rows().size(); ++y) {
    if (y) s += " ";
    s += "[";
    for (std::size_t i = 0; i < t.rows()[y].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(t.rows()[y][i]);
    }
    s += "]";
  }
  return s;
}

std::vector<SkewTableau> enumerate_skew_tableaux(const SkewShape& shape, const Composition& content) {
  std::vector<SkewTableau> out;
  detail::fill_skew(shape, content, std::nullopt, [&](const detail::Rows& rows) {
    out.emplace_back(shape, rows);
    return true;
  });
  return out;
}

std::int64_t kostka(const SkewShape& shape, const Composition& content) {
  std::int64_t n = 0;
  detail::fill_skew(shape, content, std::nullopt, [&](const detail::Rows&) {
    ++n;
    return true;
  });
  return n;
}

std::vector<Cell> reading_order(const SkewShape& shape) {
  std::vector<Cell> cells = shape.cells();
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.col != b.col) return a.col < b.col;
    return a.row > b.row;
  });
  return cells;
}

Word reading_word(const SkewTableau& t) {
  Word w;
  for (const Cell& c : reading_order(t.shape())) w.push_back(t.at(c.col, c.row));
  return w;
}

std::optional<SkewTableau> tableau_from_word(const SkewShape& shape, const Word& word) {
  if (static_cast<int>(word.size()) != shape.size()) return std::nullopt;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  for (int y = 0; y < shape.rows(); ++y) rows[static_cast<std::size_t>(y)].resize(static_cast<std::size_t>(shape.row_length(y)));
  std::size_t i = 0;
  for (const Cell& c : reading_order(shape)) {
    rows[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col - shape.first_col(c.row))] = word[i++];
  }
  try {
    return SkewTableau(shape, std::move(rows));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

bool is_lattice(const Word& w) {
  std::vector<int> counts;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int a = *it;
    if (a < 1) return false;
    if (static_cast<int>(counts.size()) < a) counts.resize(static_cast<std::size_t>(a), 0);
    const int now = ++counts[static_cast<std::size_t>(a - 1)];
    if (a > 1 && now > counts[static_cast<std::size_t>(a - 2)]) return false;
  }
  return true;
}

Composition content_of(const Word& w, int alphabet) {
  int m = alphabet;
  for (int a : w) m = std::max(m, a);
  Composition out(static_cast<std::size_t>(m), 0);
  for (int a : w) ++out[static_cast<std::size_t>(a - 1)];
  return out;
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!nu.contains(lambda) || lambda.size() + mu.size() != nu.size()) return 0;
  const SkewShape shape(nu, lambda);
  const std::vector<Cell> order = reading_order(shape);
  std::int64_t n = 0;
  std::vector<int> counts(static_cast<std::size_t>(mu.length()) + 1);
  detail::fill_skew(shape, mu.parts(), std::nullopt, [&](const detail::Rows& rows) {
    std::fill(counts.begin(), counts.end(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int a = rows[static_cast<std::size_t>(it->row)][static_cast<std::size_t>(it->col - shape.first_col(it->row))];
      const int now = ++counts[static_cast<std::size_t>(a - 1)];
      if (a > 1 && now > counts[static_cast<std::size_t>(a - 2)]) return true;
    }
    ++n;
    return true;
  });
  return n;
}

Word parse_word(const std::string& text) {
  Word w;
  if (text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      const std::string tok = text.substr(pos, next - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("malformed word '" + text + "'");
      }
      w.push_back(std::stoi(tok));
      pos = next + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("malformed word '" + text + "'");
      w.push_back(ch - '0');
    }
  }
  for (int a : w) {
    if (a < 1) throw std::invalid_argument("word letters must be positive");
  }
  return w;
}

std::string to_string(const Word& w) {
  bool wide = std::any_of(w.begin(), w.end(), [](int a) { return a > 9; });
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace fusion
