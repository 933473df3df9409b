#include "seifert/json_util.hpp"

namespace seifert {

nlohmann::ordered_json integer_json(const Integer& x) {
  if (auto v = x.to_int64()) return *v;
  return x.str();
}

nlohmann::ordered_json rational_json(const Rational& x) { return x.str(); }

nlohmann::ordered_json descriptor_json(const SeifertInvariants& inv) {
  nlohmann::ordered_json cones = nlohmann::ordered_json::array();
  for (const auto& c : inv.cones()) {
    cones.push_back(nlohmann::ordered_json::array({integer_json(c.a), integer_json(c.b)}));
  }
  nlohmann::ordered_json j;
  j["genus"] = inv.genus();
  j["b"] = integer_json(inv.b());
  j["cone"] = std::move(cones);
  return j;
}

nlohmann::ordered_json homology_json(const HomologyGroup& h) {
  nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
  for (const auto& d : h.torsion) torsion.push_back(integer_json(d));
  return {{"rank", h.rank}, {"torsion", std::move(torsion)}, {"group", h.str()}};
}

}  // namespace seifert
