#pragma once

#include <optional>
#include <string_view>

#include "seifert/invariants.hpp"

namespace seifert {

/// Which clause of the vanishing criterion decided the verdict.
enum class VanishingReason {
  N0Bundle,                   ///< n = 0: decided by m * b = chi(B)
  CongruenceInconsistent,     ///< no m with m a_i = 1 (mod b_i) for all i
  EulerCharMismatch,          ///< e(M) != 0 and chi/e is not an admissible m
  Witness,                    ///< e(M) != 0 and m = chi/e is admissible
  EulerNumberZeroChiNonzero,  ///< e(M) = 0 but chi(B) != 0
  ChiZeroEulerZero,           ///< e(M) = chi(B) = 0, congruences solvable
};

std::string_view to_string(VanishingReason r);

/// Outcome of deciding whether e(nu_M) vanishes. When it does, witness_m
/// satisfies m a_i = 1 (mod b_i) and m e(M) = chi(B) (for n = 0:
/// m b = chi(B)).
struct VanishingVerdict {
  bool vanishes = false;
  std::optional<Integer> witness_m;
  VanishingReason reason = VanishingReason::N0Bundle;
};

/// The congruences m a_i = 1 (mod b_i), one per exceptional fibre.
CongruenceSystem witness_congruences(const SeifertInvariants& inv);

/// Decides vanishing of the Euler class of the normal bundle of the
/// fibration: e(nu_M) = 0 iff some integer m satisfies m a_i = 1 (mod b_i)
/// for all i and m e(M) = chi(B).
///
/// When e(M) != 0 the only candidate is m = chi/e, so the test is whether
/// chi/e is an integer in the residue class solving the congruences. When
/// e(M) = 0 it reduces to chi(B) = 0 plus solvability, and the least
/// non-negative solution is reported.
VanishingVerdict euler_class_vanishes(const SeifertInvariants& inv);

/// Same decision from precomputed pieces, for sweeps that share the
/// congruence solution across many b and genus values. `congruences` is the
/// solve_crt result for witness_congruences (ignored when n = 0).
VanishingVerdict decide_vanishing(std::size_t n, const Integer& b,
                                  const std::optional<CrtSolution>& congruences,
                                  const Rational& euler, const Rational& chi);

/// Necessary condition: M is a circle bundle over the torus, or
/// e(M) = chi(B) = 0, or both are nonzero and chi(B)/e(M) is an integer.
bool necessary_condition(const SeifertInvariants& inv);

/// a_i = a_j (mod gcd(b_i, b_j)) for every pair of exceptional fibres.
/// Expects normalized input.
bool gcd_necessary_condition(const SeifertInvariants& inv);

/// Whether b_1 ... b_n chi(B) is an integer multiple of |T_1(M)|.
/// Throws std::domain_error when e(M) = 0.
bool torsion_divisibility_check(const SeifertInvariants& inv);

}  // namespace seifert
