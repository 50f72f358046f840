#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace chromhom {

/// Integer matrix in compressed-column form. Entries within a column are
/// sorted by row and no zero is ever stored.
class SparseMatrix {
 public:
  struct Entry {
    std::uint32_t row;
    std::int64_t value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  struct Triplet {
    std::size_t row;
    std::size_t col;
    std::int64_t value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  /// Duplicate positions are summed; resulting zeros are dropped. Throws
  /// std::out_of_range on an index outside the dimensions.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  std::size_t nnz() const noexcept;
  bool is_zero() const noexcept { return nnz() == 0; }

  std::span<const Entry> column(std::size_t c) const { return columns_[c]; }
  std::int64_t at(std::size_t r, std::size_t c) const;

  /// Columns [begin, begin + count) applied to a dense vector of length count.
  std::vector<std::int64_t> apply_columns(std::size_t begin, std::span<const std::int64_t> x) const;
  std::vector<std::int64_t> apply(std::span<const std::int64_t> x) const { return apply_columns(0, x); }

  /// Dense row-major copy.
  std::vector<std::vector<std::int64_t>> to_dense() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

}  // namespace chromhom
