#include "seifert/numbertheory/congruence.hpp"

#include <stdexcept>

namespace seifert {

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  if (a.is_zero() && b.is_zero()) return {Integer(0), Integer(0), Integer(0)};
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = old_r / r;
    Integer next_r = old_r - q * r;
    old_r = std::move(r);
    r = std::move(next_r);
    Integer next_s = old_s - q * s;
    old_s = std::move(s);
    s = std::move(next_s);
    Integer next_t = old_t - q * t;
    old_t = std::move(t);
    t = std::move(next_t);
  }
  if (old_r.sign() < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::optional<Integer> mod_inverse(const Integer& a, const Integer& m) {
  if (m.sign() <= 0) throw std::invalid_argument("modulus must be >= 1");
  ExtGcd e = ext_gcd(floor_mod(a, m), m);
  if (e.g != Integer(1)) return std::nullopt;
  return floor_mod(e.x, m);
}

std::optional<Congruence> solve_linear_congruence(const Integer& a,
                                                  const Integer& r,
                                                  const Integer& m) {
  if (m.sign() <= 0) {
    throw std::invalid_argument("congruence modulus must be >= 1, got " +
                                m.str());
  }
  ExtGcd e = ext_gcd(a, m);
  if (!divides(e.g, r)) return std::nullopt;
  // a x = r (mod m)  <=>  (a/g) x = r/g (mod m/g), and a * e.x = g (mod m).
  Integer mg = m / e.g;
  return Congruence{floor_mod((r / e.g) * e.x, mg), mg};
}

std::optional<CrtSolution> merge_congruence(const CrtSolution& acc,
                                            const Congruence& next) {
  if (next.modulus.sign() <= 0) {
    throw std::invalid_argument("congruence modulus must be >= 1, got " +
                                next.modulus.str());
  }
  // x = acc.residue + acc.modulus * t must satisfy x = next.residue mod m2.
  const Integer& m1 = acc.modulus;
  const Integer& m2 = next.modulus;
  ExtGcd e = ext_gcd(m1, m2);
  Integer diff = next.residue - acc.residue;
  if (!divides(e.g, diff)) return std::nullopt;
  Integer m2g = m2 / e.g;
  // m1 * e.x = g (mod m2), so t = (diff / g) * e.x (mod m2 / g).
  Integer t = floor_mod((diff / e.g) * e.x, m2g);
  Integer modulus = m1 * m2g;
  return CrtSolution{floor_mod(acc.residue + m1 * t, modulus), modulus};
}

std::optional<CrtSolution> solve_crt(const CongruenceSystem& system) {
  CrtSolution acc{Integer(0), Integer(1)};
  for (const auto& c : system) {
    auto merged = merge_congruence(acc, c);
    if (!merged) return std::nullopt;
    acc = std::move(*merged);
  }
  return acc;
}

}  // namespace seifert
