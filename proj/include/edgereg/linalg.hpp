#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "edgereg/field.hpp"

namespace edgereg {

/// Dense matrix of exact rationals (always in lowest terms). Reduction to
/// GF(p) happens inside rank().
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ExactMatrix from_integers(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, mpq_class v);
  ExactMatrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

/// Rank over the given field by Gaussian elimination with lowest-index
/// pivoting. Throws InputError if some denominator vanishes mod p.
std::size_t rank(const ExactMatrix& m, const FieldSpec& field);

/// Column-sparse integer matrix; the carrier for simplicial boundary maps.
class SparseIntMatrix {
 public:
  using Entry = std::pair<std::uint32_t, std::int64_t>;  // (row, value)

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  /// Sorts by row, merges duplicates and drops zeros.
  void set_column(std::size_t c, std::vector<Entry> entries);
  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }
  ExactMatrix to_dense() const;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

/// Left-to-right column reduction. Entry c of the result is the pivot (lowest
/// nonzero) row of reduced column c, or -1 when that column reduced to zero or
/// was flagged in `skip`. Over Q the reduction is fraction-free on integers,
/// switching to arbitrary precision when 64-bit arithmetic would overflow.
std::vector<std::int64_t> reduce_columns(const SparseIntMatrix& m, const FieldSpec& field,
                                         std::span<const bool> skip = {});

std::size_t rank(const SparseIntMatrix& m, const FieldSpec& field);

}  // namespace edgereg
