#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "opstruct/rational.hpp"

namespace opstruct {

// Small dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  const std::vector<Rational>& entries() const { return entries_; }

  Matrix transpose() const;
  // Copy with column c replaced by `column` (length rows()).
  Matrix with_column(std::size_t c, std::span<const Rational> column) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Fraction-free (Bareiss) determinant. Rows are first scaled to integers so
// the elimination runs on mpz values with exact divisions only.
Rational det(const Matrix& m);

// Laplace expansion along the first row; independent of det() and meant for
// small matrices (n <= 8).
Rational det_by_minors(const Matrix& m);

struct RowEchelon {
  Matrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}; one vector per free column.
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

}  // namespace opstruct
