#pragma once

#include <string>
#include <vector>

#include "chromhom/bigint.hpp"
#include "chromhom/partition.hpp"

namespace chromhom {

/// A filling of a Young diagram with positive integers.
class Tableau {
 public:
  Tableau() = default;

  /// Throws std::invalid_argument if row lengths do not match `shape`.
  Tableau(Partition shape, std::vector<std::vector<int>> rows);

  /// Builds the tableau whose shape is read off the row lengths.
  static Tableau from_rows(std::vector<std::vector<int>> rows);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int at(int row, int col) const { return rows_.at(row).at(col); }

  /// Rows weakly increase, columns strictly increase.
  bool is_ssyt() const;
  /// Semistandard with content 1^n.
  bool is_syt() const;

  /// content()[v - 1] = number of entries equal to v.
  std::vector<int> content() const;

  /// All entries row by row.
  std::vector<int> reading_word() const;

  /// Rows separated by '/', e.g. "123/45"; entries above 9 are comma separated.
  std::string to_string() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Box (r, c) holds arm + leg + 1.
Tableau hook_lengths(const Partition& shape);

/// Number of standard Young tableaux, by the hook length formula.
/// Throws InternalError if the division is not exact.
BigInt f_syt(const Partition& shape);

/// All SYT of the shape, sorted lexicographically by rows.
std::vector<Tableau> enumerate_syt(const Partition& shape);

/// All SSYT of the shape with the given content, sorted by reading word.
/// Throws std::invalid_argument if |shape| != |content|.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& content);

/// Kostka number K_{shape,content}: the SSYT count, memoized process-wide.
BigInt kostka(const Partition& shape, const Partition& content);

}  // namespace chromhom
