#pragma once

#include <cstdint>
#include <vector>

#include "birat/field.hpp"

namespace birat {

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coef& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coef at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Coef* row(std::size_t r) { return data_.data() + r * cols_; }
  const Coef* row(std::size_t r) const { return data_.data() + r * cols_; }
  void append_row(const std::vector<Coef>& r);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Coef> data_;
};

/// Reduced row echelon form in place; returns pivot columns (size = rank).
/// Zero rows are dropped from the matrix.
std::vector<std::size_t> row_reduce(Matrix& m, const Field& f);

std::size_t rank(Matrix m, const Field& f);

/// Basis of {v : m v = 0}.
std::vector<std::vector<Coef>> kernel(Matrix m, const Field& f);

/// Unique x with m x = b when it exists.
bool solve(Matrix m, const std::vector<Coef>& b, const Field& f, std::vector<Coef>& x);

/// Row space built one row at a time (echelon form against earlier pivots).
class RowEchelon {
 public:
  RowEchelon(std::size_t cols, const Field& f) : cols_(cols), field_(f), piv_of_(cols, -1) {}

  /// Whether the row was independent of the rows added so far.
  bool add(const std::vector<Coef>& row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  /// Basis of the row space as a matrix.
  Matrix basis() const;

 private:
  std::size_t cols_;
  Field field_;
  std::vector<std::vector<Coef>> rows_;
  std::vector<std::int32_t> piv_of_;
  std::vector<std::int64_t> buf_;
};

/// y = m x.
std::vector<Coef> mat_vec(const Matrix& m, const std::vector<Coef>& x, const Field& f);

}  // namespace birat
