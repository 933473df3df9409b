#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "seifert/numbertheory/integer.hpp"

namespace seifert {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-wise literal; throws std::invalid_argument on ragged input.
  IntegerMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static IntegerMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  [[nodiscard]] std::span<const Integer> entries() const noexcept {
    return data_;
  }

  [[nodiscard]] IntegerMatrix transposed() const;
  [[nodiscard]] bool is_diagonal() const;
  [[nodiscard]] std::string str() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source,
                        const Integer& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source,
                        const Integer& factor);
  void negate_row(std::size_t r);

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
  friend std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Throws std::invalid_argument on a dimension mismatch.
IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
std::vector<Integer> operator*(const IntegerMatrix& a,
                               std::span<const Integer> x);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntegerMatrix& a);

}  // namespace seifert
