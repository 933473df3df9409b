#include "seifert/numbertheory/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace seifert {

IntegerMatrix::IntegerMatrix(
    std::initializer_list<std::initializer_list<Integer>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntegerMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

std::string IntegerMatrix::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                     const Integer& factor) {
  if (factor.is_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Integer& s = (*this)(source, c);
    if (!s.is_zero()) (*this)(target, c) += factor * s;
  }
}

void IntegerMatrix::add_col_multiple(std::size_t target, std::size_t source,
                                     const Integer& factor) {
  if (factor.is_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Integer& s = (*this)(r, source);
    if (!s.is_zero()) (*this)(r, target) += factor * s;
  }
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
  IntegerMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

std::vector<Integer> operator*(const IntegerMatrix& a,
                               std::span<const Integer> x) {
  if (a.cols() != x.size()) {
    throw std::invalid_argument("matrix-vector dimension mismatch");
  }
  std::vector<Integer> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) y[i] += a(i, k) * x[k];
  return y;
}

Integer determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Integer(1);
  IntegerMatrix m = a;
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return Integer(0);
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  Integer d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

}  // namespace seifert
