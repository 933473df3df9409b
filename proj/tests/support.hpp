#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "seifert/invariants.hpp"

namespace seifert::testing {

using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;

inline SeifertInvariants inv(std::int64_t g, std::int64_t b, const Pairs& pairs) {
  std::vector<ConePair> cones;
  for (auto [a, o] : pairs) cones.push_back({Integer(a), Integer(o)});
  return SeifertInvariants(g, Integer(b), std::move(cones));
}

struct RandomBounds {
  std::int64_t max_genus = 2;
  std::size_t min_n = 0;
  std::size_t max_n = 5;
  std::int64_t max_order = 12;
  std::int64_t max_abs_b = 6;
};

/// Normalized invariants drawn uniformly coordinate by coordinate.
inline SeifertInvariants random_normalized(std::mt19937_64& rng, const RandomBounds& rb = {}) {
  const auto g = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(rb.max_genus + 1));
  const std::size_t n = rb.min_n + rng() % (rb.max_n - rb.min_n + 1);
  Pairs pairs;
  for (std::size_t i = 0; i < n; ++i) {
    const auto order =
        2 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(rb.max_order - 1));
    std::int64_t a;
    do {
      a = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(order - 1));
    } while (std::gcd(a, order) != 1);
    pairs.emplace_back(a, order);
  }
  const auto b = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * rb.max_abs_b + 1)) -
                 rb.max_abs_b;
  return normalize(inv(g, b, pairs));
}

inline std::int64_t small(const Integer& x) { return *x.to_int64(); }

}  // namespace seifert::testing
