#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "seifert/eulerclass.hpp"
#include "seifert/foliations.hpp"

namespace seifert {

/// Ranges for a census of normalized invariants (g; b, a_1/b_1, ...) with
/// 0 <= n <= max_n, 2 <= b_i <= max_cone_order, b_min <= b <= b_max and
/// genus_min <= g <= genus_max. Empty ranges give an empty census.
struct CensusBounds {
  std::int64_t max_n = 3;
  std::int64_t max_cone_order = 5;
  std::int64_t b_min = -3;
  std::int64_t b_max = 3;
  std::int64_t genus_min = 0;
  std::int64_t genus_max = 0;
};

/// Throws std::invalid_argument on a negative max_n, max_cone_order or
/// genus bound.
void validate(const CensusBounds& bounds);

/// Number of tuples enumerate_census() visits.
Integer census_size(const CensusBounds& bounds);

/// Every multiset of n reduced cone pairs with orders in [2, max_order], as
/// a list sorted by (b_i, a_i), in lexicographic order. The span is only
/// valid during the call.
void for_each_cone_list(std::int64_t n, std::int64_t max_order,
                        const std::function<void(std::span<const ConePair>)>& visit);

/// Visits the census in order genus, n, cone list, b.
void enumerate_census(const CensusBounds& bounds,
                      const std::function<void(const SeifertInvariants&)>& visit);
std::vector<SeifertInvariants> enumerate_census(const CensusBounds& bounds);

/// Everything derived from one normalized tuple.
struct CensusRecord {
  SeifertInvariants invariants;
  Geometry geometry = Geometry::Hyperbolic;
  Rational euler_number;
  Rational chi;
  HomologyGroup h1;
  VanishingVerdict vanishing;
  FoliationVerdict ctf;
};

/// Normalizes first.
CensusRecord make_record(const SeifertInvariants& inv);

/// Rational homology spheres with a horizontal foliation whose normal
/// bundle has nonzero Euler class.
bool ctf_without_zero_euler(const CensusRecord& r);

enum class CensusFormat { Csv, JsonLines };

/// Column order: descriptor, geometry, e, chi, h1_rank, h1_torsion,
/// enu_vanishes, witness_m, ctf, certificate. CSV quoting follows RFC 4180;
/// h1_torsion lists the invariant factors separated by spaces.
class CensusWriter {
 public:
  CensusWriter(std::ostream& out, CensusFormat format);
  void write(const CensusRecord& r);

 private:
  std::ostream& out_;
  CensusFormat format_;
};

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(std::string_view s);

/// Closed-form decision against the cohomology oracle on every census tuple.
struct OracleSweepReport {
  std::uint64_t instances = 0;
  std::uint64_t vanishing = 0;
  std::vector<std::string> disagreements;  ///< compact descriptors
};

/// Shares the congruence solution and the Smith decomposition of the H^2
/// relations across all b and genus values of one cone list.
OracleSweepReport oracle_sweep(const CensusBounds& bounds);

}  // namespace seifert
