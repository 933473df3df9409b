#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seifert/eulerclass.hpp"
#include "seifert/foliations.hpp"

namespace seifert {

/// Agreement of the library's predicates with the stated behaviour of four
/// families of genus 0 fibrations over hyperbolic bases (n exceptional
/// fibres, b swept over [-n - 2, 2] where b is free):
///
///   1. (b; 1/c, ..., 1/c), 2 <= c <= bound. Foliation iff 2 - n <= b <= -2
///      or (b = -1 and c >= 3). If c >= 2n - 2, e(nu) = 0 iff b = 2 - n.
///      For c = 2n - 3, b = -1 has e(nu) = 0.
///   2. (2 - n; a_1/b_1, ...) with sum a_i/b_i <= (n - 2)/2, b_i <= bound.
///      Foliation always; e(nu) = 0 iff every a_i = 1.
///   3. (b; 1/b_1, ...) with pairwise coprime n <= b_i <= bound. Foliation
///      iff 2 - n <= b <= -1; e(nu) = 0 iff b = 2 - n.
///   4. (b; a_1/b_1, ...) with sum a_i/b_i <= n/6, b_i <= bound. Foliation
///      for 2 - n <= b <= -2, and for b = -1 when n <= 6. At most one b in
///      [2 - n, (2 - n)/2] has e(nu) = 0.
struct FamilyReport {
  int family = 0;
  std::int64_t n = 0;
  std::int64_t bound = 0;
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::string> details;  ///< first few mismatches
};

/// Throws std::invalid_argument unless family is 1..4, n is in [4, 8]
/// ([3, 8] for family 2) and bound is in [2, 30].
FamilyReport example_family_check(int family, std::int64_t n, std::int64_t bound);

}  // namespace seifert
