#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "seifert/invariants.hpp"

namespace seifert {

/// Malformed descriptor text. field() names the offending part, e.g.
/// "genus", "b" or "cone[2]".
class DescriptorError : public std::invalid_argument {
 public:
  DescriptorError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  [[nodiscard]] const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Compact form "g;b;a1/b1,a2/b2,..." with an empty third field when there
/// are no exceptional fibres. Surrounding whitespace is ignored.
SeifertInvariants parse_compact(std::string_view text);
std::string format_compact(const SeifertInvariants& inv);

/// {"genus": 0, "b": -1, "cone": [[1, 2], [1, 3]]}. Integers may also be
/// given as decimal strings, which is how values beyond 64 bits are written.
SeifertInvariants parse_json_descriptor(std::string_view text);
std::string format_json_descriptor(const SeifertInvariants& inv);

/// JSON when the text starts with '{', compact otherwise.
SeifertInvariants parse_descriptor(std::string_view text);

}  // namespace seifert
