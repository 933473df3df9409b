#pragma once

#include <stdexcept>

#include "seifert/eulerclass.hpp"
#include "seifert/foliations.hpp"

namespace seifert {

class InvalidSlope : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dehn surgery slope p/q in lowest terms with q > 0, excluding the fibre
/// slope 6 of the trefoil exterior.
class SurgerySlope {
 public:
  /// Throws InvalidSlope when q <= 0, gcd(p, q) != 1 or p/q = 6.
  SurgerySlope(Integer p, Integer q);

  [[nodiscard]] const Integer& p() const noexcept { return p_; }
  [[nodiscard]] const Integer& q() const noexcept { return q_; }
  [[nodiscard]] Rational value() const { return Rational(p_, q_); }

 private:
  Integer p_;
  Integer q_;
};

/// p/q surgery on the right-handed trefoil. The exterior fibres over the
/// disc with cone points of orders 2 and 3 and regular fibre slope
/// h = 6 mu + lambda; the filling adds a third pair (q, p - 6q). Normalized;
/// when |p - 6q| = 1 the third pair is absorbed into b and the result is a
/// lens space.
///
/// Checks: |H_1| = |p| and e(M) = p / (6 (p - 6q)).
SeifertInvariants trefoil_surgery(const SurgerySlope& slope);

/// Whether the surgered manifold carries a co-oriented taut foliation.
/// On these rational homology spheres such a foliation is horizontal, so
/// this is admits_horizontal_foliation() == Yes; lens-space and other
/// non-hyperbolic outputs have none.
bool trefoil_ctf(const SurgerySlope& slope);

/// trefoil_ctf() and the Euler class of the normal bundle vanishes.
bool trefoil_zero_euler_ctf(const SurgerySlope& slope);

/// The closed-form predictions: p/q < 1, and additionally |p| divides
/// |q| - 1 (taken literally, so p = 0 needs q = 1 and p = +-1 always holds).
bool predicted_ctf(const SurgerySlope& slope);
bool predicted_zero_euler_ctf(const SurgerySlope& slope);

}  // namespace seifert
