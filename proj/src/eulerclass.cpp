#include "seifert/eulerclass.hpp"

#include <stdexcept>

namespace seifert {

std::string_view to_string(VanishingReason r) {
  switch (r) {
    case VanishingReason::N0Bundle: return "n0-bundle";
    case VanishingReason::CongruenceInconsistent: return "congruence-inconsistent";
    case VanishingReason::EulerCharMismatch: return "euler-char-mismatch";
    case VanishingReason::Witness: return "witness";
    case VanishingReason::EulerNumberZeroChiNonzero: return "euler-zero-chi-nonzero";
    case VanishingReason::ChiZeroEulerZero: return "chi-zero-euler-zero";
  }
  return "?";
}

CongruenceSystem witness_congruences(const SeifertInvariants& inv) {
  CongruenceSystem sys;
  sys.reserve(inv.n());
  for (const auto& [a, order] : inv.cones()) {
    // gcd(a, order) = 1, so the inverse exists.
    sys.push_back({*mod_inverse(a, order), order});
  }
  return sys;
}

VanishingVerdict decide_vanishing(std::size_t n, const Integer& b,
                                  const std::optional<CrtSolution>& congruences,
                                  const Rational& euler, const Rational& chi) {
  if (n == 0) {
    // m b = chi(B), chi(B) = 2 - 2g is an integer here.
    const Integer& target = chi.num();
    if (b.is_zero()) {
      if (target.is_zero()) return {true, Integer(0), VanishingReason::N0Bundle};
      return {false, std::nullopt, VanishingReason::N0Bundle};
    }
    if (divides(b, target)) return {true, target / b, VanishingReason::N0Bundle};
    return {false, std::nullopt, VanishingReason::N0Bundle};
  }
  if (!congruences) {
    return {false, std::nullopt, VanishingReason::CongruenceInconsistent};
  }
  if (euler.is_zero()) {
    if (!chi.is_zero()) {
      return {false, std::nullopt, VanishingReason::EulerNumberZeroChiNonzero};
    }
    return {true, congruences->residue, VanishingReason::ChiZeroEulerZero};
  }
  const Rational m = chi / euler;
  if (m.is_integer() &&
      floor_mod(m.num() - congruences->residue, congruences->modulus).is_zero()) {
    return {true, m.num(), VanishingReason::Witness};
  }
  return {false, std::nullopt, VanishingReason::EulerCharMismatch};
}

VanishingVerdict euler_class_vanishes(const SeifertInvariants& inv) {
  const SeifertInvariants norm = inv.is_normalized() ? inv : normalize(inv);
  std::optional<CrtSolution> crt;
  if (norm.n() > 0) crt = solve_crt(witness_congruences(norm));
  return decide_vanishing(norm.n(), norm.b(), crt, euler_number(norm),
                          orbifold_euler_char(norm));
}

bool necessary_condition(const SeifertInvariants& inv) {
  if (inv.genus() == 1 && inv.n() == 0) return true;
  const Rational e = euler_number(inv);
  const Rational chi = orbifold_euler_char(inv);
  if (e.is_zero() && chi.is_zero()) return true;
  if (e.is_zero() || chi.is_zero()) return false;
  return (chi / e).is_integer();
}

bool gcd_necessary_condition(const SeifertInvariants& inv) {
  const auto& cones = inv.cones();
  for (std::size_t i = 0; i < cones.size(); ++i) {
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      const Integer d = gcd(cones[i].b, cones[j].b);
      if (!divides(d, cones[i].a - cones[j].a)) return false;
    }
  }
  return true;
}

bool torsion_divisibility_check(const SeifertInvariants& inv) {
  const Rational e = euler_number(inv);
  if (e.is_zero()) {
    throw std::domain_error("torsion_divisibility_check requires e(M) != 0");
  }
  const Integer product = cone_order_product(inv);
  const Rational scaled_chi = Rational(product) * orbifold_euler_char(inv);
  const Integer torsion = (Rational(product) * abs(e)).num();
  return scaled_chi.is_integer() && divides(torsion, scaled_chi.num());
}

}  // namespace seifert
