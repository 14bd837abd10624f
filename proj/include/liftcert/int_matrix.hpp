#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "liftcert/integer.hpp"

namespace liftcert {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Integer>& entries);
  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows,
                                const std::vector<std::vector<Integer>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<Integer> column(std::size_t j) const;
  std::vector<Integer> row(std::size_t i) const;

  IntMatrix transpose() const;
  IntMatrix pow(unsigned long exponent) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  bool is_zero() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<Integer>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const IntMatrix& a, const Integer& s);
std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v);

/// Fraction-free Bareiss elimination; independent of the normal-form code.
Integer determinant(const IntMatrix& m);

/// Characteristic polynomial det(xI - M), coefficients from the constant term
/// up to the (monic) leading term. Faddeev-LeVerrier with exact division.
std::vector<Integer> characteristic_polynomial(const IntMatrix& m);

/// Exact remainder of `num` modulo the monic polynomial `den` (both low-to-high).
std::vector<Integer> polynomial_remainder(std::vector<Integer> num,
                                          const std::vector<Integer>& den);

std::string to_string(const IntMatrix& m);

}  // namespace liftcert
