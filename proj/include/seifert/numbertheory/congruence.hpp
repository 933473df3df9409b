#pragma once

#include <optional>
#include <vector>

#include "seifert/numbertheory/integer.hpp"

namespace seifert {

struct ExtGcd {
  Integer g;  ///< gcd(|a|, |b|), never negative
  Integer x;
  Integer y;  ///< a*x + b*y == g
};

/// Extended Euclid. ext_gcd(0, 0) is (0, 0, 0).
ExtGcd ext_gcd(const Integer& a, const Integer& b);

/// Inverse of a modulo m (m >= 1), as the least non-negative residue, or
/// nullopt when gcd(a, m) != 1.
std::optional<Integer> mod_inverse(const Integer& a, const Integer& m);

struct Congruence {
  Integer residue;
  Integer modulus;  ///< >= 1
};

using CongruenceSystem = std::vector<Congruence>;

/// Solution set { residue + r * modulus : r in Z } of a congruence system.
struct CrtSolution {
  Integer residue;  ///< canonical: 0 <= residue < modulus
  Integer modulus;  ///< lcm of all moduli

  friend bool operator==(const CrtSolution&, const CrtSolution&) = default;
};

/// Solves a system of congruences with arbitrary (not necessarily coprime)
/// moduli by pairwise merging. Returns nullopt when the system is
/// inconsistent. The empty system yields residue 0 modulo 1. Throws
/// std::invalid_argument on a modulus below 1.
std::optional<CrtSolution> solve_crt(const CongruenceSystem& system);

/// Solutions of a * x = r (mod m), m >= 1, as a single residue class, or
/// nullopt when gcd(a, m) does not divide r. Throws std::invalid_argument
/// on m < 1.
std::optional<Congruence> solve_linear_congruence(const Integer& a,
                                                  const Integer& r,
                                                  const Integer& m);

/// Merges one more congruence into an existing solution set.
std::optional<CrtSolution> merge_congruence(const CrtSolution& acc,
                                            const Congruence& next);

}  // namespace seifert
