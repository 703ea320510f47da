#pragma once

#include <castelnuovo/integer.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

namespace castelnuovo {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  explicit IntMatrix(const std::vector<std::vector<Integer>>& rows, std::size_t cols = 0);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Integer>& d, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> row(std::size_t r) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  IntMatrix transposed() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Smith normal form U * M * V = diag(d), with d[i] | d[i+1] and d.size() == min(rows, cols).
struct SnfResult {
  std::vector<Integer> d;
  IntMatrix u;
  IntMatrix v;
};

/// Elementary row/column reduction, pivoting on the smallest nonzero magnitude.
/// Throws std::invalid_argument on an empty matrix.
SnfResult snf(const IntMatrix& m);

/// Exact rank over the rationals (fraction-free elimination).
std::size_t rank(const IntMatrix& m);

/// Determinant by Bareiss elimination. The 0x0 determinant is 1.
Integer determinant(const IntMatrix& m);

/// One exact solution of a * x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<RationalVector> solve(const IntMatrix& a, const RationalVector& b);

}  // namespace castelnuovo
