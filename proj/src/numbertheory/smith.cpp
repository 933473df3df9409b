#include "seifert/numbertheory/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace seifert {
namespace {

bool smaller_magnitude(const Integer& x, const Integer& y) {
  return abs(x) < abs(y);
}

// Applies every elementary operation to the working matrix and mirrors it
// into the accumulated left/right transforms.
struct Reducer {
  IntegerMatrix m;
  IntegerMatrix u;
  IntegerMatrix v;

  void swap_rows(std::size_t a, std::size_t b) {
    m.swap_rows(a, b);
    u.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    m.swap_cols(a, b);
    v.swap_cols(a, b);
  }
  void add_row(std::size_t target, std::size_t source, const Integer& f) {
    m.add_row_multiple(target, source, f);
    u.add_row_multiple(target, source, f);
  }
  void add_col(std::size_t target, std::size_t source, const Integer& f) {
    m.add_col_multiple(target, source, f);
    v.add_col_multiple(target, source, f);
  }
  void negate_row(std::size_t r) {
    m.negate_row(r);
    u.negate_row(r);
  }
};

// Clears row and column t around the pivot at (t, t), then enforces that the
// pivot divides the remaining submatrix.
void settle_pivot(Reducer& red, std::size_t t) {
  const std::size_t rows = red.m.rows();
  const std::size_t cols = red.m.cols();
  for (;;) {
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (red.m(i, t).is_zero()) continue;
      Integer q = red.m(i, t) / red.m(t, t);
      red.add_row(i, t, -q);
      if (!red.m(i, t).is_zero()) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (red.m(t, j).is_zero()) continue;
      Integer q = red.m(t, j) / red.m(t, t);
      red.add_col(j, t, -q);
      if (!red.m(t, j).is_zero()) clean = false;
    }
    if (!clean) {
      // A remainder strictly smaller than the pivot survived; promote it.
      std::size_t best_i = t, best_j = t;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Integer& x = red.m(i, t);
        if (!x.is_zero() && smaller_magnitude(x, red.m(best_i, best_j))) {
          best_i = i;
          best_j = t;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Integer& x = red.m(t, j);
        if (!x.is_zero() && smaller_magnitude(x, red.m(best_i, best_j))) {
          best_i = t;
          best_j = j;
        }
      }
      red.swap_rows(t, best_i);
      red.swap_cols(t, best_j);
      continue;
    }
    bool divisible = true;
    for (std::size_t i = t + 1; i < rows && divisible; ++i) {
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (!divides(red.m(t, t), red.m(i, j))) {
          red.add_row(t, i, Integer(1));
          divisible = false;
          break;
        }
      }
    }
    if (divisible) return;
  }
}

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> d;
  d.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) d.push_back(s(i, i));
  return d;
}

SmithForm smith_normal_form(const IntegerMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Reducer red{a, IntegerMatrix::identity(rows), IntegerMatrix::identity(cols)};

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        const Integer& x = red.m(i, j);
        if (x.is_zero()) continue;
        if (pi == rows || smaller_magnitude(x, red.m(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    red.swap_rows(t, pi);
    red.swap_cols(t, pj);
    settle_pivot(red, t);
    if (red.m(t, t).sign() < 0) red.negate_row(t);
  }
  return SmithForm{std::move(red.u), std::move(red.m), std::move(red.v), t};
}

std::vector<std::optional<std::vector<Integer>>> lattice_member_many(
    const IntegerMatrix& b, std::span<const std::vector<Integer>> targets) {
  for (const auto& target : targets) {
    if (target.size() != b.rows()) {
      throw std::invalid_argument("lattice_member: target length " +
                                  std::to_string(target.size()) +
                                  " does not match " +
                                  std::to_string(b.rows()) + " rows");
    }
  }
  SmithForm f = smith_normal_form(b);
  std::vector<std::optional<std::vector<Integer>>> out;
  out.reserve(targets.size());
  for (const auto& target : targets) {
    // b x = t  <=>  s (v^-1 x) = u t
    std::vector<Integer> w = f.u * std::span<const Integer>(target);
    std::vector<Integer> y(b.cols());
    bool solvable = true;
    for (std::size_t k = 0; k < w.size() && solvable; ++k) {
      if (k < f.rank) {
        const Integer& d = f.s(k, k);
        if (!divides(d, w[k])) {
          solvable = false;
        } else {
          y[k] = w[k] / d;
        }
      } else if (!w[k].is_zero()) {
        solvable = false;
      }
    }
    if (!solvable) {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(f.v * std::span<const Integer>(y));
    }
  }
  return out;
}

std::optional<std::vector<Integer>> lattice_member(const IntegerMatrix& b,
                                                   std::span<const Integer> v) {
  std::vector<std::vector<Integer>> one{std::vector<Integer>(v.begin(), v.end())};
  return std::move(lattice_member_many(b, one).front());
}

}  // namespace seifert
