#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seifert/numbertheory.hpp"

namespace seifert {

/// Unnormalised Seifert pair a/b describing one exceptional fibre.
struct ConePair {
  Integer a;
  Integer b;

  friend bool operator==(const ConePair&, const ConePair&) = default;
  /// Canonical order: by cone order b first, then by a.
  friend std::strong_ordering operator<=>(const ConePair& x,
                                          const ConePair& y) {
    if (auto c = x.b <=> y.b; c != 0) return c;
    return x.a <=> y.a;
  }
};

class InvalidInvariants : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invariants (g; b, a_1/b_1, ..., a_n/b_n) of a closed oriented Seifert
/// fibred manifold with orientable base of genus g.
///
/// Construction validates gcd(a_i, b_i) = 1 and b_i >= 1; pairs with b_i = 1
/// are not exceptional fibres and are folded into b straight away, so every
/// stored pair has b_i >= 2. The tuple is kept exactly as given otherwise;
/// see normalize() for the canonical form.
class SeifertInvariants {
 public:
  SeifertInvariants() = default;
  /// Throws InvalidInvariants naming the offending field.
  SeifertInvariants(std::int64_t genus, Integer b, std::vector<ConePair> cones);

  [[nodiscard]] std::int64_t genus() const noexcept { return genus_; }
  [[nodiscard]] const Integer& b() const noexcept { return b_; }
  [[nodiscard]] const std::vector<ConePair>& cones() const noexcept {
    return cones_;
  }
  [[nodiscard]] std::size_t n() const noexcept { return cones_.size(); }

  /// 0 < a_i < b_i for every pair.
  [[nodiscard]] bool has_reduced_cones() const;
  /// Reduced cones in canonical (b_i, a_i) order.
  [[nodiscard]] bool is_normalized() const;

  friend bool operator==(const SeifertInvariants&,
                         const SeifertInvariants&) = default;

 private:
  std::int64_t genus_ = 0;
  Integer b_{0};
  std::vector<ConePair> cones_;
};

enum class Geometry { Spherical, Euclidean, Hyperbolic, BadOrbifold };

std::string_view to_string(Geometry g);

struct BaseOrbifold {
  std::int64_t genus = 0;
  std::vector<Integer> cone_orders;
  Rational chi;
};

/// Finitely generated abelian group Z^rank + Z/d_1 + ... with d_1 | d_2 | ...
struct HomologyGroup {
  std::int64_t rank = 0;
  std::vector<Integer> torsion;  ///< every entry >= 2

  /// Order of the torsion subgroup (1 when there is none).
  [[nodiscard]] Integer torsion_order() const;
  [[nodiscard]] bool is_finite() const noexcept { return rank == 0; }
  /// e.g. "Z^2 + Z/2 + Z/6", "0" for the trivial group.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Equivalent invariants with 0 < a_i < b_i, pairs sorted by (b_i, a_i) and
/// the integer parts absorbed into b. Two tuples describe the same oriented
/// fibration iff their normal forms coincide.
SeifertInvariants normalize(const SeifertInvariants& inv);

/// (g; -b, -a_1/b_1, ...) in normal form: the same fibration with the
/// orientation of the manifold reversed.
SeifertInvariants orientation_reverse(const SeifertInvariants& inv);

/// Orientation- and fibre-preserving equivalence.
bool equivalent(const SeifertInvariants& x, const SeifertInvariants& y);

/// Equivalence allowing an orientation reversal as well, i.e. the moves
/// "shift a_i by multiples of b_i" and "negate every coordinate".
bool equivalent_unoriented(const SeifertInvariants& x,
                           const SeifertInvariants& y);

/// e(M) = b + sum a_i / b_i.
Rational euler_number(const SeifertInvariants& inv);

/// chi(B) = 2 - 2g - n + sum 1 / b_i.
Rational orbifold_euler_char(const SeifertInvariants& inv);

BaseOrbifold base_orbifold(const SeifertInvariants& inv);

/// Teardrops and unequal spindles are bad; otherwise the sign of chi(B).
Geometry base_geometry(const SeifertInvariants& inv);

/// Abelianised relation matrix of pi_1(M) without the 2g free surface
/// generators: columns x_1..x_n, h; rows b_i x_i + a_i h and
/// x_1 + ... + x_n - b h. For n = 0 this is the 1x1 matrix [-b].
IntegerMatrix homology_relation_matrix(const SeifertInvariants& inv);

/// H_1(M) = Z^{2g} + coker(homology_relation_matrix).
HomologyGroup first_homology(const SeifertInvariants& inv);

/// |T_1(M)|. Uses b_1 ... b_n |e(M)| when e(M) != 0 and the Smith form of
/// the relation matrix otherwise.
Integer torsion_order(const SeifertInvariants& inv);

bool is_rational_homology_sphere(const SeifertInvariants& inv);

/// b_1 * ... * b_n (1 when n = 0).
Integer cone_order_product(const SeifertInvariants& inv);

}  // namespace seifert
