#pragma once

#include "framed/numeric.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace framed {

using SparseEntry = std::pair<std::uint32_t, Rational>;
/// Sorted by index, no explicit zeros.
using SparseVector = std::vector<SparseEntry>;

/// Column-compressed matrix over Q.
class SparseMatrixQ {
public:
  SparseMatrixQ() = default;
  SparseMatrixQ(std::size_t rows, std::size_t cols);

  static SparseMatrixQ identity(std::size_t n);
  static SparseMatrixQ zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVector& column(std::size_t j) const { return columns_[j]; }
  std::size_t nonzeros() const;

  /// Accumulates value into (row, col). Call finalize() before reading.
  void add(std::size_t row, std::size_t col, const Rational& value);
  /// Sorts every column, merges duplicates, and drops zeros.
  void finalize();

  Rational at(std::size_t row, std::size_t col) const;
  bool is_zero() const;
  SparseMatrixQ transpose() const;
  std::size_t rank() const;

  friend bool operator==(const SparseMatrixQ& x, const SparseMatrixQ& y);
  friend SparseMatrixQ operator*(const SparseMatrixQ& x, const SparseMatrixQ& y);
  friend SparseMatrixQ operator+(const SparseMatrixQ& x, const SparseMatrixQ& y);
  friend SparseMatrixQ operator-(const SparseMatrixQ& x, const SparseMatrixQ& y);
  friend SparseMatrixQ operator*(const Rational& s, const SparseMatrixQ& x);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> columns_;
};

/// Rank of a family of sparse vectors (any order, any common ambient dimension).
std::size_t sparse_rank(std::vector<SparseVector> vectors);

}  // namespace framed
