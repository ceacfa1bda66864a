#include "opstruct/matrix.hpp"

#include <utility>

#include "opstruct/error.hpp"

namespace opstruct {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::invalid_parameter, "matrix entry count does not match shape");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::invalid_parameter, "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::with_column(std::size_t c, std::span<const Rational> column) const {
  if (c >= cols_ || column.size() != rows_) {
    throw Error(ErrorKind::index_out_of_range, "column replacement out of range");
  }
  Matrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) out(r, c) = column[r];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::invalid_parameter, "matrix shapes do not conform");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Rational det(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::non_square, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& v = m(r, c);
      a[r * n + c] = v.get_num() * (row_lcm / v.get_den());
    }
    scale *= row_lcm;
  }

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = std::move(t);
      }
    }
    prev = a[k * n + k];
  }
  Rational out(mpz_class(sign * a[n * n - 1]), scale);
  out.canonicalize();
  return out;
}

Rational det_by_minors(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::non_square, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  if (n > 8) throw Error(ErrorKind::invalid_parameter, "expansion by minors limited to n <= 8");
  Rational total;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(m(0, c)) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc) {
        if (cc == c) continue;
        minor(r - 1, k++) = m(r, cc);
      }
    Rational term = m(0, c) * det_by_minors(minor);
    if (c % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = 0; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) -= f * m(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace opstruct
