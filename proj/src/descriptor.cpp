#include "seifert/descriptor.hpp"

#include <json.hpp>

#include "seifert/json_util.hpp"

namespace seifert {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Integer parse_field(std::string_view text, const std::string& field) {
  try {
    return Integer::parse(trim(text));
  } catch (const std::invalid_argument&) {
    throw DescriptorError(field, "expected an integer, got '" +
                                     std::string(text) + "'");
  }
}

std::int64_t parse_genus(const Integer& g) {
  if (!g.is_small()) throw DescriptorError("genus", "out of range");
  return *g.to_int64();
}

SeifertInvariants build(const Integer& genus, Integer b,
                        std::vector<ConePair> cones) {
  if (genus.sign() < 0) throw DescriptorError("genus", "must be >= 0");
  try {
    return SeifertInvariants(parse_genus(genus), std::move(b), std::move(cones));
  } catch (const InvalidInvariants& e) {
    // Messages already start with the field name.
    const std::string msg = e.what();
    const auto colon = msg.find(':');
    if (colon == std::string::npos) throw DescriptorError("descriptor", msg);
    throw DescriptorError(msg.substr(0, colon), std::string(trim(msg.substr(colon + 1))));
  }
}

Integer json_integer(const nlohmann::ordered_json& j, const std::string& field) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>())
                                  : Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_field(j.get<std::string>(), field);
  throw DescriptorError(field, "expected an integer, got " + j.dump());
}

}  // namespace

SeifertInvariants parse_compact(std::string_view text) {
  text = trim(text);
  const auto s1 = text.find(';');
  if (s1 == std::string_view::npos) {
    throw DescriptorError("descriptor", "expected 'g;b;a1/b1,...', got '" +
                                            std::string(text) + "'");
  }
  const auto rest = text.substr(s1 + 1);
  const auto s2 = rest.find(';');
  const Integer genus = parse_field(text.substr(0, s1), "genus");
  const Integer b = parse_field(rest.substr(0, s2), "b");
  std::vector<ConePair> cones;
  if (s2 != std::string_view::npos) {
    std::string_view list = trim(rest.substr(s2 + 1));
    std::size_t index = 0;
    while (!list.empty()) {
      const auto comma = list.find(',');
      const std::string_view item = trim(list.substr(0, comma));
      const std::string field = "cone[" + std::to_string(index) + "]";
      const auto slash = item.find('/');
      if (slash == std::string_view::npos) {
        throw DescriptorError(field, "expected 'a/b', got '" + std::string(item) + "'");
      }
      cones.push_back({parse_field(item.substr(0, slash), field),
                       parse_field(item.substr(slash + 1), field)});
      ++index;
      if (comma == std::string_view::npos) break;
      list = list.substr(comma + 1);
      if (trim(list).empty()) throw DescriptorError(field, "trailing comma");
    }
  }
  return build(genus, b, std::move(cones));
}

std::string format_compact(const SeifertInvariants& inv) {
  std::string out = std::to_string(inv.genus()) + ";" + inv.b().str() + ";";
  for (std::size_t i = 0; i < inv.n(); ++i) {
    if (i > 0) out += ',';
    out += inv.cones()[i].a.str() + "/" + inv.cones()[i].b.str();
  }
  return out;
}

SeifertInvariants parse_json_descriptor(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::ordered_json::parse_error& e) {
    throw DescriptorError("descriptor", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DescriptorError("descriptor", "expected a JSON object");
  for (const char* key : {"genus", "b"}) {
    if (!j.contains(key)) throw DescriptorError(key, "missing");
  }
  const Integer genus = json_integer(j["genus"], "genus");
  const Integer b = json_integer(j["b"], "b");
  std::vector<ConePair> cones;
  if (j.contains("cone")) {
    const auto& list = j["cone"];
    if (!list.is_array()) throw DescriptorError("cone", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string field = "cone[" + std::to_string(i) + "]";
      if (!list[i].is_array() || list[i].size() != 2) {
        throw DescriptorError(field, "expected [a, b], got " + list[i].dump());
      }
      cones.push_back({json_integer(list[i][0], field), json_integer(list[i][1], field)});
    }
  }
  return build(genus, b, std::move(cones));
}

std::string format_json_descriptor(const SeifertInvariants& inv) {
  return descriptor_json(inv).dump();
}

SeifertInvariants parse_descriptor(std::string_view text) {
  const std::string_view t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_json_descriptor(t);
  return parse_compact(t);
}

}  // namespace seifert
