#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seifert/invariants.hpp"

namespace seifert {

/// (c, d) with the fraction at index i bounded by c/d, the one at index j by
/// (d - c)/d, and every other fraction by 1/d.
struct EligiblePair {
  Integer c;
  Integer d;
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const EligiblePair&, const EligiblePair&) = default;
};

/// Calls visit(pair) for every coprime 0 < c < d and ordered pair (i, j) of
/// distinct indices such that f_i < c/d, f_j < (d - c)/d and f_k < 1/d for
/// all other k, all strict. Ordered by (i, j), then d, then c; stops early
/// when visit returns false. Requires at least three fractions, each in
/// (0, 1); throws std::invalid_argument otherwise.
///
/// The search is finite: a third index k forces d a_k < b_k.
void for_each_eligible_pair(std::span<const Rational> fractions,
                            const std::function<bool(const EligiblePair&)>& visit);

std::vector<EligiblePair> eligible_pairs(std::span<const Rational> fractions);
std::optional<EligiblePair> first_eligible_pair(std::span<const Rational> fractions);

/// Re-checks the strict inequalities of a certificate from scratch.
bool certificate_holds(std::span<const Rational> fractions,
                       const EligiblePair& pair);

enum class FoliationAnswer { Yes, No, OutOfScope };

std::string_view to_string(FoliationAnswer a);

/// What the verdict rests on.
enum class FoliationBasis {
  HyperbolicCriterion,   ///< conditions (1)-(3) for genus 0, hyperbolic base
  EuclideanEulerZero,    ///< horizontal torus fibration over the circle
  EuclideanEulerNonzero, ///< classical nonexistence; not re-derived here
  SphericalFinite,       ///< finite fundamental group
  Unsupported,           ///< genus >= 1 or bad base orbifold
};

std::string_view to_string(FoliationBasis b);

struct FoliationCertificate {
  int condition = 1;  ///< 1, 2 or 3
  /// Present for conditions 2 and 3. For condition 3 the inequalities refer
  /// to the complementary fractions (b_i - a_i)/b_i.
  std::optional<EligiblePair> pair;
};

struct FoliationVerdict {
  FoliationAnswer answer = FoliationAnswer::OutOfScope;
  FoliationBasis basis = FoliationBasis::Unsupported;
  std::optional<FoliationCertificate> certificate;

  [[nodiscard]] std::string certificate_str() const;
};

/// Existence of a foliation transverse to the fibres, for genus 0 bases.
///
/// Hyperbolic base (then n >= 3), with 0 < a_i < b_i: yes iff
///   (1) 2 - n <= b <= -2, or
///   (2) b = -1 and an eligible (c, d) exists for the fractions a_i/b_i, or
///   (3) b = 1 - n and one exists for the fractions (b_i - a_i)/b_i.
/// Euclidean base: yes iff e(M) = 0. The "only if" half is imported from
/// the classical theory of horizontal foliations and not derived here.
/// Spherical base: no. Genus >= 1 or a bad base: OutOfScope.
///
/// Throws std::invalid_argument unless 0 < a_i < b_i for every pair.
FoliationVerdict admits_horizontal_foliation(const SeifertInvariants& inv);

}  // namespace seifert
