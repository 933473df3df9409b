#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "seifert/invariants.hpp"

namespace seifert {

/// Presentation of H^2 of the base orbifold group: generators A_0, ..., A_n
/// subject to A_0 = b_i A_i. Row i of the relation matrix is
/// A_0 - b_i A_i, i.e. (1, 0, ..., -b_i, ..., 0).
struct H2Presentation {
  std::vector<Integer> orders;  ///< b_1, ..., b_n
  IntegerMatrix relations;      ///< n x (n + 1)

  [[nodiscard]] std::size_t n() const noexcept { return orders.size(); }
};

/// Coefficients of A_0, A_1, ..., A_n.
struct CohomologyClass {
  std::vector<Integer> coeffs;

  friend bool operator==(const CohomologyClass&,
                         const CohomologyClass&) = default;
};

H2Presentation h2_presentation(const SeifertInvariants& inv);

/// Euler class of the central extension Z -> pi_1(M) -> pi_1(B):
/// -(b A_0 + a_1 A_1 + ... + a_n A_n).
CohomologyClass euler_class_extension(const SeifertInvariants& inv);

/// Euler class of the discrete faithful representation of pi_1(B):
/// (n - chi(|B|)) A_0 - A_1 - ... - A_n, with chi(|B|) = 2 - 2g.
CohomologyClass euler_class_dfr(const SeifertInvariants& inv);

/// Unique representative d A_0 + sum c_i A_i with 0 <= c_i < b_i.
/// Throws std::invalid_argument on a length mismatch.
CohomologyClass normal_form(const CohomologyClass& cls,
                            const H2Presentation& pres);

/// An integer m with e(phi) = m e(E_M) in H^2, or nullopt if none exists.
/// Decided by integer lattice membership: e(phi) must lie in the span of
/// the relation vectors together with e(E_M); the coefficient on e(E_M) of
/// any solution is a valid m. Expects normalized input.
std::optional<Integer> vanishes_via_oracle(const SeifertInvariants& inv);

/// The oracle for the same fibration data (b and cone pairs) over several
/// base genera at once; one Smith decomposition serves every genus.
std::vector<std::optional<Integer>> vanishes_via_oracle_for_genera(
    const SeifertInvariants& inv, std::span<const std::int64_t> genera);

/// The same membership question posed inside H^2 itself. Smith-decomposes
/// the relation lattice of a fixed list of cone pairs once; then for any b
/// and genus, e(phi) = m e(E_M) becomes one linear equation in m per
/// invariant factor of the quotient, solved exactly.
class EulerClassOracle {
 public:
  /// Cone pairs as stored by SeifertInvariants (b_i >= 2).
  explicit EulerClassOracle(std::span<const ConePair> cones);

  /// Least non-negative m with e(phi) = m e(E_M) in H^2 when every m in a
  /// residue class works, the unique m otherwise; nullopt if none.
  [[nodiscard]] std::optional<Integer> witness(const Integer& b,
                                               std::int64_t genus) const;

 private:
  // Rows of U restricted to coordinates that carry information: those with
  // invariant factor d != 1 (d = 0 for the free part).
  struct Coordinate {
    Integer d;
    Integer at_t0;  // U e(phi) for genus 0
    Integer at_v0;  // U e(E_M) for b = 0
    Integer at_e0;  // U A_0
  };
  std::vector<Coordinate> coords_;
};

}  // namespace seifert
