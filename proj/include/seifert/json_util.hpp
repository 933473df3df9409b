#pragma once

// JSON encodings shared by the library and the command line front end.
// Integers that fit in 64 bits become JSON numbers, larger ones strings.

#include <json.hpp>

#include "seifert/invariants.hpp"

namespace seifert {

nlohmann::ordered_json integer_json(const Integer& x);
nlohmann::ordered_json rational_json(const Rational& x);  ///< "p/q" or "p"
nlohmann::ordered_json descriptor_json(const SeifertInvariants& inv);
nlohmann::ordered_json homology_json(const HomologyGroup& h);

}  // namespace seifert
