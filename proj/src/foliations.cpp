#include "seifert/foliations.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "seifert/eulerclass.hpp"

namespace seifert {
namespace {

bool below(const Rational& f, const Integer& num, const Integer& den) {
  // f < num/den with den > 0
  return f.num() * den < num * f.den();
}

void check_fractions(std::span<const Rational> fractions) {
  if (fractions.size() < 3) {
    throw std::invalid_argument("eligible pair search needs at least 3 fractions");
  }
  for (const auto& f : fractions) {
    if (f.sign() <= 0 || f >= Rational(1)) {
      throw std::invalid_argument("fraction " + f.str() + " is not in (0, 1)");
    }
  }
}

std::vector<Rational> fractions_of(const SeifertInvariants& inv) {
  std::vector<Rational> out;
  out.reserve(inv.n());
  for (const auto& c : inv.cones()) out.emplace_back(c.a, c.b);
  return out;
}

std::vector<Rational> complements_of(const SeifertInvariants& inv) {
  std::vector<Rational> out;
  out.reserve(inv.n());
  for (const auto& c : inv.cones()) out.emplace_back(c.b - c.a, c.b);
  return out;
}

}  // namespace

void for_each_eligible_pair(
    std::span<const Rational> fractions,
    const std::function<bool(const EligiblePair&)>& visit) {
  check_fractions(fractions);
  const std::size_t n = fractions.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rational& fi = fractions[i];
      const Rational& fj = fractions[j];
      auto rest_below = [&](const Integer& d) {
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          if (!(d * fractions[k].num() < fractions[k].den())) return false;
        }
        return true;
      };
      for (Integer d(2); rest_below(d); d += 1) {
        // f_i < c/d  <=>  c > d f_i;  f_j < (d-c)/d  <=>  c < d (1 - f_j)
        Integer lo = std::max(Integer(1), floor_div(d * fi.num(), fi.den()) + 1);
        Integer hi = std::min(
            d - 1, floor_div(d * (fj.den() - fj.num()) - 1, fj.den()));
        for (Integer c = lo; c <= hi; c += 1) {
          if (gcd(c, d) != Integer(1)) continue;
          if (!visit(EligiblePair{c, d, i, j})) return;
        }
      }
    }
  }
}

std::vector<EligiblePair> eligible_pairs(std::span<const Rational> fractions) {
  std::vector<EligiblePair> out;
  for_each_eligible_pair(fractions, [&](const EligiblePair& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::optional<EligiblePair> first_eligible_pair(
    std::span<const Rational> fractions) {
  std::optional<EligiblePair> found;
  for_each_eligible_pair(fractions, [&](const EligiblePair& p) {
    found = p;
    return false;
  });
  return found;
}

bool certificate_holds(std::span<const Rational> fractions,
                       const EligiblePair& pair) {
  const std::size_t n = fractions.size();
  if (pair.i >= n || pair.j >= n || pair.i == pair.j) return false;
  if (!(Integer(0) < pair.c && pair.c < pair.d)) return false;
  if (gcd(pair.c, pair.d) != Integer(1)) return false;
  for (std::size_t k = 0; k < n; ++k) {
    Integer bound = k == pair.i ? pair.c : k == pair.j ? pair.d - pair.c : Integer(1);
    if (!below(fractions[k], bound, pair.d)) return false;
  }
  return true;
}

std::string_view to_string(FoliationAnswer a) {
  switch (a) {
    case FoliationAnswer::Yes: return "yes";
    case FoliationAnswer::No: return "no";
    case FoliationAnswer::OutOfScope: return "out-of-scope";
  }
  return "?";
}

std::string_view to_string(FoliationBasis b) {
  switch (b) {
    case FoliationBasis::HyperbolicCriterion: return "hyperbolic-criterion";
    case FoliationBasis::EuclideanEulerZero: return "euclidean-euler-zero";
    case FoliationBasis::EuclideanEulerNonzero: return "euclidean-euler-nonzero";
    case FoliationBasis::SphericalFinite: return "spherical-finite";
    case FoliationBasis::Unsupported: return "unsupported";
  }
  return "?";
}

std::string FoliationVerdict::certificate_str() const {
  if (!certificate) return "";
  std::ostringstream os;
  os << "cond" << certificate->condition;
  if (certificate->pair) {
    const auto& p = *certificate->pair;
    os << ":c=" << p.c << ",d=" << p.d << ",i=" << p.i << ",j=" << p.j;
  }
  return os.str();
}

FoliationVerdict admits_horizontal_foliation(const SeifertInvariants& inv) {
  if (!inv.has_reduced_cones()) {
    throw std::invalid_argument(
        "admits_horizontal_foliation: invariants must satisfy 0 < a_i < b_i");
  }
  const Geometry geom = base_geometry(inv);
  if (inv.genus() != 0 || geom == Geometry::BadOrbifold) {
    return {FoliationAnswer::OutOfScope, FoliationBasis::Unsupported, std::nullopt};
  }
  if (geom == Geometry::Spherical) {
    return {FoliationAnswer::No, FoliationBasis::SphericalFinite, std::nullopt};
  }
  if (geom == Geometry::Euclidean) {
    if (euler_number(inv).is_zero()) {
      return {FoliationAnswer::Yes, FoliationBasis::EuclideanEulerZero, std::nullopt};
    }
    return {FoliationAnswer::No, FoliationBasis::EuclideanEulerNonzero, std::nullopt};
  }

  const Integer n(static_cast<std::int64_t>(inv.n()));
  const Integer& b = inv.b();
  FoliationVerdict v{FoliationAnswer::No, FoliationBasis::HyperbolicCriterion,
                     std::nullopt};
  if (Integer(2) - n <= b && b <= Integer(-2)) {
    v.answer = FoliationAnswer::Yes;
    v.certificate = FoliationCertificate{1, std::nullopt};
  } else if (b == Integer(-1)) {
    const auto fractions = fractions_of(inv);
    if (auto pair = first_eligible_pair(fractions)) {
      v.answer = FoliationAnswer::Yes;
      v.certificate = FoliationCertificate{2, std::move(pair)};
    }
  } else if (b == Integer(1) - n) {
    const auto fractions = complements_of(inv);
    if (auto pair = first_eligible_pair(fractions)) {
      v.answer = FoliationAnswer::Yes;
      v.certificate = FoliationCertificate{3, std::move(pair)};
    }
  }
  return v;
}

}  // namespace seifert
