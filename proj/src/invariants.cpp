#include "seifert/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace seifert {

SeifertInvariants::SeifertInvariants(std::int64_t genus, Integer b,
                                     std::vector<ConePair> cones)
    : genus_(genus), b_(std::move(b)) {
  if (genus < 0) {
    throw InvalidInvariants("genus: must be >= 0, got " + std::to_string(genus));
  }
  cones_.reserve(cones.size());
  for (std::size_t i = 0; i < cones.size(); ++i) {
    auto& [a, order] = cones[i];
    const std::string field = "cone[" + std::to_string(i) + "]";
    if (order.sign() <= 0) {
      throw InvalidInvariants(field + ": cone order must be >= 1, got " +
                              a.str() + "/" + order.str());
    }
    if (gcd(a, order) != Integer(1)) {
      throw InvalidInvariants(field + ": gcd(" + a.str() + ", " + order.str() +
                              ") != 1");
    }
    if (order == Integer(1)) {
      b_ += a;
      continue;
    }
    cones_.push_back(std::move(cones[i]));
  }
}

bool SeifertInvariants::has_reduced_cones() const {
  return std::all_of(cones_.begin(), cones_.end(), [](const ConePair& p) {
    return p.a.sign() > 0 && p.a < p.b;
  });
}

bool SeifertInvariants::is_normalized() const {
  return has_reduced_cones() && std::is_sorted(cones_.begin(), cones_.end());
}

std::string_view to_string(Geometry g) {
  switch (g) {
    case Geometry::Spherical: return "spherical";
    case Geometry::Euclidean: return "euclidean";
    case Geometry::Hyperbolic: return "hyperbolic";
    case Geometry::BadOrbifold: return "bad";
  }
  return "?";
}

Integer HomologyGroup::torsion_order() const {
  Integer order(1);
  for (const auto& d : torsion) order *= d;
  return order;
}

std::string HomologyGroup::str() const {
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << '^' << rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

SeifertInvariants normalize(const SeifertInvariants& inv) {
  Integer b = inv.b();
  std::vector<ConePair> cones;
  cones.reserve(inv.n());
  for (const auto& [a, order] : inv.cones()) {
    Integer r = floor_mod(a, order);
    b += floor_div(a, order);
    cones.push_back({std::move(r), order});
  }
  std::sort(cones.begin(), cones.end());
  return SeifertInvariants(inv.genus(), std::move(b), std::move(cones));
}

SeifertInvariants orientation_reverse(const SeifertInvariants& inv) {
  std::vector<ConePair> cones;
  cones.reserve(inv.n());
  for (const auto& [a, order] : inv.cones()) cones.push_back({-a, order});
  return normalize(SeifertInvariants(inv.genus(), -inv.b(), std::move(cones)));
}

bool equivalent(const SeifertInvariants& x, const SeifertInvariants& y) {
  return normalize(x) == normalize(y);
}

bool equivalent_unoriented(const SeifertInvariants& x,
                           const SeifertInvariants& y) {
  return equivalent(x, y) || normalize(orientation_reverse(x)) == normalize(y);
}

Rational euler_number(const SeifertInvariants& inv) {
  Rational e(inv.b());
  for (const auto& [a, order] : inv.cones()) e += Rational(a, order);
  return e;
}

Rational orbifold_euler_char(const SeifertInvariants& inv) {
  Rational chi(Integer(2 - 2 * inv.genus()) - Integer(inv.n()));
  for (const auto& c : inv.cones()) chi += Rational(Integer(1), c.b);
  return chi;
}

BaseOrbifold base_orbifold(const SeifertInvariants& inv) {
  BaseOrbifold base;
  base.genus = inv.genus();
  for (const auto& c : inv.cones()) base.cone_orders.push_back(c.b);
  base.chi = orbifold_euler_char(inv);
  return base;
}

Geometry base_geometry(const SeifertInvariants& inv) {
  const auto& cones = inv.cones();
  if (inv.genus() == 0 &&
      (inv.n() == 1 || (inv.n() == 2 && cones[0].b != cones[1].b))) {
    return Geometry::BadOrbifold;
  }
  const int s = orbifold_euler_char(inv).sign();
  if (s > 0) return Geometry::Spherical;
  if (s == 0) return Geometry::Euclidean;
  return Geometry::Hyperbolic;
}

IntegerMatrix homology_relation_matrix(const SeifertInvariants& inv) {
  const std::size_t n = inv.n();
  IntegerMatrix m(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = inv.cones()[i].b;
    m(i, n) = inv.cones()[i].a;
    m(n, i) = 1;
  }
  m(n, n) = -inv.b();
  return m;
}

HomologyGroup first_homology(const SeifertInvariants& inv) {
  const IntegerMatrix rel = homology_relation_matrix(inv);
  const SmithForm f = smith_normal_form(rel);
  HomologyGroup h;
  h.rank = 2 * inv.genus() + static_cast<std::int64_t>(rel.cols() - f.rank);
  for (auto& d : f.invariant_factors()) {
    if (d != Integer(1)) h.torsion.push_back(d);
  }
  return h;
}

Integer cone_order_product(const SeifertInvariants& inv) {
  Integer p(1);
  for (const auto& c : inv.cones()) p *= c.b;
  return p;
}

Integer torsion_order(const SeifertInvariants& inv) {
  const Rational e = euler_number(inv);
  if (e.is_zero()) return first_homology(inv).torsion_order();
  const Rational order = Rational(cone_order_product(inv)) * abs(e);
  // b_1 ... b_n e(M) is always integral.
  return order.num();
}

bool is_rational_homology_sphere(const SeifertInvariants& inv) {
  return first_homology(inv).rank == 0;
}

}  // namespace seifert
