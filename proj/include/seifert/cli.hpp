#pragma once

#include <ostream>
#include <string>
#include <string_view>

namespace seifert::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kInputError = 2;
inline constexpr int kIoError = 3;

/// Runs the command line front end with argv[0] as the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Line diff of two texts; "-" marks expected-only lines, "+" actual-only
/// lines, each prefixed by its line number in the respective text. Empty
/// when the texts are identical.
std::string line_diff(std::string_view expected, std::string_view actual);

}  // namespace seifert::cli
