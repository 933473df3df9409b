#include "seifert/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace seifert {
namespace {

CohomologyClass dfr_class(std::size_t n, std::int64_t genus) {
  CohomologyClass cls;
  cls.coeffs.assign(n + 1, Integer(-1));
  cls.coeffs[0] = Integer(static_cast<std::int64_t>(n)) - Integer(2 - 2 * genus);
  return cls;
}

// Columns: the n relation vectors, then e(E_M).
IntegerMatrix membership_matrix(const SeifertInvariants& inv) {
  const std::size_t n = inv.n();
  const CohomologyClass ext = euler_class_extension(inv);
  IntegerMatrix m(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    m(0, i) = 1;
    m(i + 1, i) = -inv.cones()[i].b;
  }
  for (std::size_t r = 0; r <= n; ++r) m(r, n) = ext.coeffs[r];
  return m;
}

}  // namespace

H2Presentation h2_presentation(const SeifertInvariants& inv) {
  H2Presentation pres;
  const std::size_t n = inv.n();
  pres.relations = IntegerMatrix(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    pres.orders.push_back(inv.cones()[i].b);
    pres.relations(i, 0) = 1;
    pres.relations(i, i + 1) = -inv.cones()[i].b;
  }
  return pres;
}

CohomologyClass euler_class_extension(const SeifertInvariants& inv) {
  CohomologyClass cls;
  cls.coeffs.reserve(inv.n() + 1);
  cls.coeffs.push_back(-inv.b());
  for (const auto& c : inv.cones()) cls.coeffs.push_back(-c.a);
  return cls;
}

CohomologyClass euler_class_dfr(const SeifertInvariants& inv) {
  return dfr_class(inv.n(), inv.genus());
}

CohomologyClass normal_form(const CohomologyClass& cls,
                            const H2Presentation& pres) {
  if (cls.coeffs.size() != pres.n() + 1) {
    throw std::invalid_argument("normal_form: class has " +
                                std::to_string(cls.coeffs.size()) +
                                " coefficients, presentation expects " +
                                std::to_string(pres.n() + 1));
  }
  CohomologyClass out = cls;
  for (std::size_t i = 0; i < pres.n(); ++i) {
    // c A_i = q b_i A_i + r A_i = q A_0 + r A_i
    const Integer& order = pres.orders[i];
    out.coeffs[0] += floor_div(cls.coeffs[i + 1], order);
    out.coeffs[i + 1] = floor_mod(cls.coeffs[i + 1], order);
  }
  return out;
}

std::vector<std::optional<Integer>> vanishes_via_oracle_for_genera(
    const SeifertInvariants& inv, std::span<const std::int64_t> genera) {
  const IntegerMatrix m = membership_matrix(inv);
  std::vector<std::vector<Integer>> targets;
  targets.reserve(genera.size());
  for (std::int64_t g : genera) targets.push_back(dfr_class(inv.n(), g).coeffs);
  auto solutions = lattice_member_many(m, targets);
  std::vector<std::optional<Integer>> out;
  out.reserve(solutions.size());
  for (auto& x : solutions) {
    if (x) {
      out.emplace_back(std::move(x->back()));
    } else {
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

EulerClassOracle::EulerClassOracle(std::span<const ConePair> cones) {
  const std::size_t n = cones.size();
  IntegerMatrix rel(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    rel(0, i) = 1;
    rel(i + 1, i) = -cones[i].b;
  }
  const SmithForm f = smith_normal_form(rel);
  const CohomologyClass t0 = dfr_class(n, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    Integer d = k < f.rank ? f.s(k, k) : Integer(0);
    if (d == Integer(1)) continue;
    Coordinate c{std::move(d), Integer(0), Integer(0), f.u(k, 0)};
    for (std::size_t j = 0; j <= n; ++j) c.at_t0 += f.u(k, j) * t0.coeffs[j];
    // e(E_M) at b = 0 is (0, -a_1, ..., -a_n)
    for (std::size_t j = 0; j < n; ++j) c.at_v0 -= f.u(k, j + 1) * cones[j].a;
    coords_.push_back(std::move(c));
  }
  // Free coordinates first: once one of them fixes m, the torsion
  // coordinates only need checking.
  std::stable_partition(coords_.begin(), coords_.end(),
                        [](const Coordinate& c) { return c.d.is_zero(); });
}

std::optional<Integer> EulerClassOracle::witness(const Integer& b,
                                                 std::int64_t genus) const {
  // e(phi) = t0 + 2g A_0 and e(E_M) = v0 - b A_0.
  std::optional<Integer> fixed;
  CrtSolution acc{Integer(0), Integer(1)};
  const Integer two_g(2 * genus);
  for (const auto& c : coords_) {
    const Integer coef = c.at_v0 - b * c.at_e0;
    const Integer rhs = c.at_t0 + two_g * c.at_e0;
    if (c.d.is_zero()) {
      if (coef.is_zero()) {
        if (!rhs.is_zero()) return std::nullopt;
      } else {
        if (!divides(coef, rhs)) return std::nullopt;
        Integer m = rhs / coef;
        if (fixed && *fixed != m) return std::nullopt;
        fixed = std::move(m);
      }
    } else if (fixed) {
      if (!divides(c.d, coef * *fixed - rhs)) return std::nullopt;
    } else {
      auto sol = solve_linear_congruence(coef, rhs, c.d);
      if (!sol) return std::nullopt;
      auto merged = merge_congruence(acc, *sol);
      if (!merged) return std::nullopt;
      acc = std::move(*merged);
    }
  }
  if (fixed) {
    if (!floor_mod(*fixed - acc.residue, acc.modulus).is_zero()) return std::nullopt;
    return fixed;
  }
  return acc.residue;
}

std::optional<Integer> vanishes_via_oracle(const SeifertInvariants& inv) {
  const std::int64_t g = inv.genus();
  return vanishes_via_oracle_for_genera(inv, std::span(&g, 1)).front();
}

}  // namespace seifert
