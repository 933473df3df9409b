#pragma once

#include <span>
#include <string>
#include <vector>

#include "seifert/applications/census.hpp"

namespace seifert {

/// One family of fibrations over a fixed base: b ranges over [-6, 6] and
/// each a_i over the listed values.
struct TableRow {
  std::string family;               ///< e.g. "(b, 1/2, 1/3, a/5)"
  Rational chi;                     ///< chi(B), constant on the family
  std::vector<CensusRecord> sweep;  ///< every tuple, normalized
  std::vector<SeifertInvariants> vanishing;  ///< sweep tuples with e(nu) = 0
  Integer min_order;  ///< least b_1 ... b_n |e(M)| over the sweep
};

struct SeifertTable {
  std::string name;  ///< "spherical" or "euclidean"
  std::vector<TableRow> rows;
};

inline constexpr std::int64_t kTableBMin = -6;
inline constexpr std::int64_t kTableBMax = 6;

/// Bases S^2(2,2,2), S^2(2,2,k) for 3 <= k <= 12, S^2(2,3,3), S^2(2,3,4)
/// and S^2(2,3,5); the second cone pair is fixed to 1/b_2.
SeifertTable spherical_table();

/// Bases S^2(2,3,6), S^2(2,4,4), S^2(3,3,3), S^2(2,2,2,2) with all a_i = 1.
SeifertTable euclidean_table();

enum class TableFormat { Text, Csv, Json };

/// Columns: table, family, chi, tuples, vanishing, h1, min_order. The
/// vanishing tuples are compact descriptors; h1 gives their first homology.
std::string render_tables(std::span<const SeifertTable> tables, TableFormat format);

}  // namespace seifert
