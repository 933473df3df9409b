#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "seifert/numbertheory/matrix.hpp"

namespace seifert {

/// Smith decomposition u * a * v == s with u, v unimodular and
/// s = diag(d_1, ..., d_rank, 0, ...) where d_1 | d_2 | ... and d_i > 0.
struct SmithForm {
  IntegerMatrix u;
  IntegerMatrix s;
  IntegerMatrix v;
  std::size_t rank = 0;

  /// The nonzero diagonal entries d_1, ..., d_rank.
  [[nodiscard]] std::vector<Integer> invariant_factors() const;
};

/// Pivots on the entry of least absolute value at every step, which keeps
/// intermediate coefficients small on the sparse matrices seen in practice.
SmithForm smith_normal_form(const IntegerMatrix& a);

/// Integer solution x of b * x == v, or nullopt if v is not in the column
/// lattice of b. Throws std::invalid_argument if v.size() != b.rows().
std::optional<std::vector<Integer>> lattice_member(const IntegerMatrix& b,
                                                   std::span<const Integer> v);

/// Same as lattice_member for several right-hand sides sharing one
/// decomposition of b.
std::vector<std::optional<std::vector<Integer>>> lattice_member_many(
    const IntegerMatrix& b, std::span<const std::vector<Integer>> targets);

}  // namespace seifert
