#include "seifert/applications/census.hpp"

#include <numeric>
#include <stdexcept>

#include "seifert/cohomology.hpp"
#include "seifert/descriptor.hpp"
#include "seifert/json_util.hpp"

namespace seifert {
namespace {

std::vector<ConePair> cone_alphabet(std::int64_t max_order) {
  std::vector<ConePair> out;
  for (std::int64_t order = 2; order <= max_order; ++order) {
    for (std::int64_t a = 1; a < order; ++a) {
      if (std::gcd(a, order) == 1) out.push_back({Integer(a), Integer(order)});
    }
  }
  return out;
}

void extend(const std::vector<ConePair>& alphabet, std::size_t from,
            std::int64_t remaining, std::vector<ConePair>& current,
            const std::function<void(std::span<const ConePair>)>& visit) {
  if (remaining == 0) {
    visit(current);
    return;
  }
  for (std::size_t k = from; k < alphabet.size(); ++k) {
    current.push_back(alphabet[k]);
    extend(alphabet, k, remaining - 1, current, visit);
    current.pop_back();
  }
}

Integer binomial(Integer top, std::int64_t k) {
  Integer r(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (top - Integer(k - i)) / Integer(i);
  }
  return r;
}

std::string torsion_field(const HomologyGroup& h) {
  std::string out;
  for (const auto& d : h.torsion) {
    if (!out.empty()) out += ' ';
    out += d.str();
  }
  return out;
}

}  // namespace

void validate(const CensusBounds& bounds) {
  if (bounds.max_n < 0) throw std::invalid_argument("max-n: must be >= 0");
  if (bounds.max_cone_order < 0) {
    throw std::invalid_argument("max-cone-order: must be >= 0");
  }
  if (bounds.genus_min < 0) throw std::invalid_argument("genus-min: must be >= 0");
  if (bounds.genus_max < 0) throw std::invalid_argument("genus-max: must be >= 0");
}

Integer census_size(const CensusBounds& bounds) {
  validate(bounds);
  if (bounds.b_min > bounds.b_max || bounds.genus_min > bounds.genus_max) {
    return Integer(0);
  }
  const auto letters = static_cast<std::int64_t>(cone_alphabet(bounds.max_cone_order).size());
  Integer lists(0);
  for (std::int64_t n = 0; n <= bounds.max_n; ++n) {
    lists += binomial(Integer(letters + n - 1), n);
  }
  return lists * Integer(bounds.b_max - bounds.b_min + 1) *
         Integer(bounds.genus_max - bounds.genus_min + 1);
}

void for_each_cone_list(std::int64_t n, std::int64_t max_order,
                        const std::function<void(std::span<const ConePair>)>& visit) {
  if (n < 0) return;
  const auto alphabet = cone_alphabet(max_order);
  std::vector<ConePair> current;
  current.reserve(static_cast<std::size_t>(n));
  extend(alphabet, 0, n, current, visit);
}

void enumerate_census(const CensusBounds& bounds,
                      const std::function<void(const SeifertInvariants&)>& visit) {
  validate(bounds);
  for (std::int64_t g = bounds.genus_min; g <= bounds.genus_max; ++g) {
    for (std::int64_t n = 0; n <= bounds.max_n; ++n) {
      for_each_cone_list(n, bounds.max_cone_order, [&](std::span<const ConePair> cones) {
        const std::vector<ConePair> list(cones.begin(), cones.end());
        for (std::int64_t b = bounds.b_min; b <= bounds.b_max; ++b) {
          visit(SeifertInvariants(g, Integer(b), list));
        }
      });
    }
  }
}

std::vector<SeifertInvariants> enumerate_census(const CensusBounds& bounds) {
  std::vector<SeifertInvariants> out;
  enumerate_census(bounds, [&](const SeifertInvariants& inv) { out.push_back(inv); });
  return out;
}

CensusRecord make_record(const SeifertInvariants& inv) {
  CensusRecord r;
  r.invariants = inv.is_normalized() ? inv : normalize(inv);
  r.geometry = base_geometry(r.invariants);
  r.euler_number = euler_number(r.invariants);
  r.chi = orbifold_euler_char(r.invariants);
  r.h1 = first_homology(r.invariants);
  r.vanishing = euler_class_vanishes(r.invariants);
  r.ctf = admits_horizontal_foliation(r.invariants);
  return r;
}

bool ctf_without_zero_euler(const CensusRecord& r) {
  return r.h1.is_finite() && r.ctf.answer == FoliationAnswer::Yes &&
         !r.vanishing.vanishes;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

CensusWriter::CensusWriter(std::ostream& out, CensusFormat format)
    : out_(out), format_(format) {
  if (format_ == CensusFormat::Csv) {
    out_ << "descriptor,geometry,e,chi,h1_rank,h1_torsion,enu_vanishes,"
            "witness_m,ctf,certificate\n";
  }
}

void CensusWriter::write(const CensusRecord& r) {
  const std::string witness =
      r.vanishing.witness_m ? r.vanishing.witness_m->str() : std::string();
  if (format_ == CensusFormat::Csv) {
    out_ << csv_field(format_compact(r.invariants)) << ',' << to_string(r.geometry)
         << ',' << r.euler_number.str() << ',' << r.chi.str() << ',' << r.h1.rank
         << ',' << torsion_field(r.h1) << ',' << (r.vanishing.vanishes ? "true" : "false")
         << ',' << witness << ',' << to_string(r.ctf.answer) << ','
         << csv_field(r.ctf.certificate_str()) << '\n';
    return;
  }
  nlohmann::ordered_json j;
  j["descriptor"] = descriptor_json(r.invariants);
  j["geometry"] = to_string(r.geometry);
  j["e"] = rational_json(r.euler_number);
  j["chi"] = rational_json(r.chi);
  j["h1_rank"] = r.h1.rank;
  nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
  for (const auto& d : r.h1.torsion) torsion.push_back(integer_json(d));
  j["h1_torsion"] = std::move(torsion);
  j["enu_vanishes"] = r.vanishing.vanishes;
  j["witness_m"] = r.vanishing.witness_m ? integer_json(*r.vanishing.witness_m)
                                         : nlohmann::ordered_json(nullptr);
  j["ctf"] = to_string(r.ctf.answer);
  j["certificate"] = r.ctf.certificate_str();
  out_ << j.dump() << '\n';
}

OracleSweepReport oracle_sweep(const CensusBounds& bounds) {
  validate(bounds);
  OracleSweepReport report;
  if (bounds.b_min > bounds.b_max || bounds.genus_min > bounds.genus_max) return report;
  std::vector<std::int64_t> genera;
  for (std::int64_t g = bounds.genus_min; g <= bounds.genus_max; ++g) genera.push_back(g);

  for (std::int64_t n = 0; n <= bounds.max_n; ++n) {
    for_each_cone_list(n, bounds.max_cone_order, [&](std::span<const ConePair> cones) {
      std::optional<CrtSolution> crt;
      Rational fractions(0);
      Rational reciprocals(0);
      if (n > 0) {
        CongruenceSystem sys;
        for (const auto& c : cones) {
          sys.push_back({*mod_inverse(c.a, c.b), c.b});
          fractions += Rational(c.a, c.b);
          reciprocals += Rational(Integer(1), c.b);
        }
        crt = solve_crt(sys);
      }
      std::vector<Rational> chis;
      for (std::int64_t g : genera) chis.push_back(Rational(2 - 2 * g - n) + reciprocals);
      const EulerClassOracle oracle(cones);

      for (std::int64_t bv = bounds.b_min; bv <= bounds.b_max; ++bv) {
        const Integer b(bv);
        const Rational e = fractions + Rational(b);
        for (std::size_t k = 0; k < genera.size(); ++k) {
          const VanishingVerdict closed =
              decide_vanishing(static_cast<std::size_t>(n), b, crt, e, chis[k]);
          const std::optional<Integer> m = oracle.witness(b, genera[k]);
          ++report.instances;
          if (closed.vanishes) ++report.vanishing;
          const bool agree = closed.vanishes == m.has_value() &&
                             (!m || *m == *closed.witness_m);
          if (!agree && report.disagreements.size() < 100) {
            report.disagreements.push_back(format_compact(SeifertInvariants(
                genera[k], b, std::vector<ConePair>(cones.begin(), cones.end()))));
          }
        }
      }
    });
  }
  return report;
}

}  // namespace seifert
