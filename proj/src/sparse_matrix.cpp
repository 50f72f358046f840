#include "chromhom/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chromhom {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> triplets) {
  SparseMatrix m(rows, cols);
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  for (std::size_t i = 0; i < triplets.size();) {
    const auto& t = triplets[i];
    if (t.row >= rows || t.col >= cols) throw std::out_of_range("sparse matrix index out of range");
    std::int64_t sum = 0;
    std::size_t j = i;
    for (; j < triplets.size() && triplets[j].row == t.row && triplets[j].col == t.col; ++j)
      sum += triplets[j].value;
    if (sum != 0) m.columns_[t.col].push_back({static_cast<std::uint32_t>(t.row), sum});
    i = j;
  }
  return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({static_cast<std::uint32_t>(i), 1});
  return m;
}

std::size_t SparseMatrix::nnz() const noexcept {
  std::size_t total = 0;
  for (const auto& c : columns_) total += c.size();
  return total;
}

std::int64_t SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.row < row; });
  return (it != col.end() && it->row == r) ? it->value : 0;
}

std::vector<std::int64_t> SparseMatrix::apply_columns(std::size_t begin,
                                                      std::span<const std::int64_t> x) const {
  if (begin + x.size() > cols()) throw std::out_of_range("apply_columns: range exceeds matrix");
  std::vector<std::int64_t> out(rows_, 0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 0) continue;
    for (const auto& e : columns_[begin + j]) out[e.row] += e.value * x[j];
  }
  return out;
}

std::vector<std::vector<std::int64_t>> SparseMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols(), 0));
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& e : columns_[c]) out[e.row][c] = e.value;
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  SparseMatrix out(a.rows(), b.cols());
  std::map<std::uint32_t, std::int64_t> acc;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    acc.clear();
    for (const auto& eb : b.columns_[c])
      for (const auto& ea : a.columns_[eb.row]) acc[ea.row] += ea.value * eb.value;
    for (auto [r, v] : acc)
      if (v != 0) out.columns_[c].push_back({r, v});
  }
  return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference: dimension mismatch");
  std::vector<SparseMatrix::Triplet> t;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (const auto& e : a.columns_[c]) t.push_back({e.row, c, e.value});
    for (const auto& e : b.columns_[c]) t.push_back({e.row, c, -e.value});
  }
  return SparseMatrix::from_triplets(a.rows(), a.cols(), std::move(t));
}

}  // namespace chromhom
