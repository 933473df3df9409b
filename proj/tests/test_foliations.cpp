#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "seifert/descriptor.hpp"
#include "seifert/foliations.hpp"
#include "support.hpp"

namespace seifert {
namespace {

using testing::inv;
using testing::small;
using Key = std::tuple<std::int64_t, std::int64_t, std::size_t, std::size_t>;

std::vector<Rational> fracs(const testing::Pairs& pairs) {
  std::vector<Rational> out;
  for (auto [a, b] : pairs) out.emplace_back(a, b);
  return out;
}

// Every (c, d, i, j) with d up to max_d, tested by plain cross-multiplication.
std::set<Key> brute_force_pairs(const std::vector<Rational>& f, std::int64_t max_d) {
  std::set<Key> out;
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::int64_t d = 2; d <= max_d; ++d) {
        for (std::int64_t c = 1; c < d; ++c) {
          if (std::gcd(c, d) != 1) continue;
          bool ok = true;
          for (std::size_t k = 0; k < n && ok; ++k) {
            const std::int64_t top = k == i ? c : k == j ? d - c : 1;
            ok = small(f[k].num()) * d < top * small(f[k].den());
          }
          if (ok) out.emplace(c, d, i, j);
        }
      }
    }
  }
  return out;
}

std::set<Key> library_pairs(const std::vector<Rational>& f) {
  std::set<Key> out;
  for (const auto& p : eligible_pairs(f)) out.emplace(small(p.c), small(p.d), p.i, p.j);
  return out;
}

FoliationAnswer answer(const SeifertInvariants& x) {
  return admits_horizontal_foliation(x).answer;
}

TEST(EligiblePairs, SpecExamples) {
  const auto thirds = library_pairs(fracs({{1, 3}, {1, 3}, {1, 3}}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) EXPECT_TRUE(thirds.count({1, 2, i, j}));
    }
  }
  EXPECT_TRUE(eligible_pairs(fracs({{1, 2}, {1, 2}, {1, 2}})).empty());

  std::int64_t max_d = 0;
  for (const auto& [c, d, i, j] : library_pairs(fracs({{1, 7}, {1, 7}, {1, 7}, {1, 7}}))) {
    max_d = std::max(max_d, d);
  }
  EXPECT_EQ(max_d, 6);
}

TEST(EligiblePairs, Validation) {
  EXPECT_THROW(eligible_pairs(fracs({{1, 3}, {1, 3}})), std::invalid_argument);
  EXPECT_THROW(eligible_pairs(fracs({{1, 3}, {1, 3}, {0, 1}})), std::invalid_argument);
  EXPECT_THROW(eligible_pairs(fracs({{1, 3}, {1, 3}, {1, 1}})), std::invalid_argument);
  EXPECT_THROW(eligible_pairs(fracs({{1, 3}, {1, 3}, {4, 3}})), std::invalid_argument);
}

TEST(EligiblePairs, MatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 1500; ++t) {
    const auto x = testing::random_normalized(rng, {0, 3, 5, 12, 0});
    std::vector<Rational> f;
    for (const auto& c : x.cones()) f.emplace_back(c.a, c.b);
    // Any valid d has d a_k < b_k <= 12, so 40 is far past the true bound.
    ASSERT_EQ(library_pairs(f), brute_force_pairs(f, 40)) << format_compact(x);
    const auto first = first_eligible_pair(f);
    const auto all = eligible_pairs(f);
    ASSERT_EQ(first.has_value(), !all.empty());
    if (first) EXPECT_EQ(*first, all.front());
  }
}

TEST(Certificate, RejectsBadPairs) {
  const auto f = fracs({{1, 3}, {1, 3}, {1, 3}});
  EXPECT_TRUE(certificate_holds(f, {Integer(1), Integer(2), 0, 1}));
  EXPECT_FALSE(certificate_holds(f, {Integer(1), Integer(2), 0, 0}));
  EXPECT_FALSE(certificate_holds(f, {Integer(1), Integer(2), 0, 3}));
  EXPECT_FALSE(certificate_holds(f, {Integer(2), Integer(4), 0, 1}));
  EXPECT_FALSE(certificate_holds(f, {Integer(1), Integer(3), 0, 1}));
  EXPECT_FALSE(certificate_holds(f, {Integer(0), Integer(2), 0, 1}));
}

TEST(Foliation, SpecExamples) {
  // With n = 3 condition (1) is empty, and the complements 1/2, 2/3, 6/7
  // admit no pair.
  EXPECT_EQ(answer(inv(0, -2, {{1, 2}, {1, 3}, {1, 7}})), FoliationAnswer::No);
  EXPECT_EQ(answer(inv(0, -1, {{1, 2}, {1, 3}, {1, 7}})), FoliationAnswer::Yes);
  EXPECT_EQ(answer(inv(0, -2, {{1, 2}, {2, 3}, {6, 7}})), FoliationAnswer::Yes);
  auto v = admits_horizontal_foliation(inv(0, -2, {{1, 2}, {1, 3}, {1, 7}, {1, 7}}));
  EXPECT_EQ(v.answer, FoliationAnswer::Yes);
  ASSERT_TRUE(v.certificate);
  EXPECT_EQ(v.certificate->condition, 1);
  EXPECT_EQ(v.certificate_str(), "cond1");

  for (std::int64_t c = 3; c <= 9; ++c) {
    EXPECT_EQ(answer(inv(0, -1, {{1, c}, {1, c}, {1, c}, {1, c}})), FoliationAnswer::Yes) << c;
  }
  EXPECT_EQ(answer(inv(0, 0, {{1, 2}, {1, 3}, {1, 7}})), FoliationAnswer::No);

  v = admits_horizontal_foliation(inv(0, -1, {{1, 2}, {1, 3}, {1, 6}}));
  EXPECT_EQ(v.answer, FoliationAnswer::Yes);
  EXPECT_EQ(v.basis, FoliationBasis::EuclideanEulerZero);
}

TEST(Foliation, ScopeAndSpecialGeometries) {
  EXPECT_EQ(answer(inv(1, 0, {{1, 2}})), FoliationAnswer::OutOfScope);
  EXPECT_EQ(answer(inv(0, 0, {{1, 2}})), FoliationAnswer::OutOfScope);        // teardrop
  EXPECT_EQ(answer(inv(0, 0, {{1, 2}, {1, 3}})), FoliationAnswer::OutOfScope);  // bad spindle
  const auto sph = admits_horizontal_foliation(inv(0, -1, {{1, 2}, {1, 3}, {1, 5}}));
  EXPECT_EQ(sph.answer, FoliationAnswer::No);
  EXPECT_EQ(sph.basis, FoliationBasis::SphericalFinite);
  const auto euc = admits_horizontal_foliation(inv(0, 0, {{1, 3}, {1, 3}, {1, 3}}));
  EXPECT_EQ(euc.answer, FoliationAnswer::No);
  EXPECT_EQ(euc.basis, FoliationBasis::EuclideanEulerNonzero);
  EXPECT_THROW(admits_horizontal_foliation(inv(0, 0, {{4, 3}, {1, 3}, {1, 3}})),
               std::invalid_argument);
}

TEST(Foliation, CertificatesAreSound) {
  std::mt19937_64 rng(32);
  int with_pair = 0;
  for (int t = 0; t < 4000; ++t) {
    const auto x = testing::random_normalized(rng, {0, 3, 6, 12, 6});
    const auto v = admits_horizontal_foliation(x);
    if (v.answer != FoliationAnswer::Yes || !v.certificate || !v.certificate->pair) continue;
    ++with_pair;
    std::vector<Rational> f;
    for (const auto& c : x.cones()) {
      f.emplace_back(v.certificate->condition == 3 ? c.b - c.a : c.a, c.b);
    }
    EXPECT_TRUE(certificate_holds(f, *v.certificate->pair)) << format_compact(x);
  }
  EXPECT_GT(with_pair, 20);
}

TEST(Foliation, OrientationDuality) {
  std::mt19937_64 rng(33);
  int hyperbolic = 0, cond3 = 0;
  for (int t = 0; t < 5000; ++t) {
    auto x = testing::random_normalized(rng, {0, 3, 6, 12, 6});
    // Bias towards the boundary values b = -1 and b = 1 - n.
    if (t % 2 == 0) x = SeifertInvariants(0, Integer(1 - static_cast<std::int64_t>(x.n())), x.cones());
    if (base_geometry(x) != Geometry::Hyperbolic) continue;
    ++hyperbolic;
    const auto v = admits_horizontal_foliation(x);
    const auto r = admits_horizontal_foliation(orientation_reverse(x));
    ASSERT_EQ(v.answer, r.answer) << format_compact(x);
    const bool c3 = v.certificate && v.certificate->condition == 3;
    const bool c2 = r.certificate && r.certificate->condition == 2;
    EXPECT_EQ(c3, c2) << format_compact(x);
    cond3 += c3;
  }
  EXPECT_GE(hyperbolic, 1000);
  EXPECT_GT(cond3, 20);
}

TEST(Foliation, EqualConesFamily) {
  for (std::int64_t n = 4; n <= 6; ++n) {
    for (std::int64_t c = 2; c <= 12; ++c) {
      for (std::int64_t b = -n - 2; b <= 2; ++b) {
        const auto x = inv(0, b, testing::Pairs(static_cast<std::size_t>(n), {1, c}));
        const bool expected = (2 - n <= b && b <= -2) || (b == -1 && c >= 3);
        EXPECT_EQ(answer(x) == FoliationAnswer::Yes, expected) << format_compact(x);
      }
    }
  }
}

TEST(Foliation, CoprimeOrdersFamily) {
  const std::vector<testing::Pairs> lists{
      {{1, 4}, {1, 5}, {1, 7}, {1, 9}},
      {{1, 5}, {1, 6}, {1, 7}, {1, 11}},
      {{1, 5}, {1, 7}, {1, 8}, {1, 9}, {1, 11}},
      {{1, 7}, {1, 8}, {1, 9}, {1, 11}, {1, 13}, {1, 17}},
  };
  for (const auto& pairs : lists) {
    const auto n = static_cast<std::int64_t>(pairs.size());
    for (std::int64_t b = -n - 2; b <= 2; ++b) {
      const auto x = inv(0, b, pairs);
      EXPECT_EQ(answer(x) == FoliationAnswer::Yes, 2 - n <= b && b <= -1) << format_compact(x);
    }
  }
}

TEST(Foliation, SphericalNeverAndEuclideanOnlyAtZero) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 3000; ++t) {
    const auto x = testing::random_normalized(rng, {0, 0, 4, 6, 6});
    const auto g = base_geometry(x);
    if (g == Geometry::Spherical) EXPECT_EQ(answer(x), FoliationAnswer::No);
    if (g == Geometry::Euclidean) {
      EXPECT_EQ(answer(x) == FoliationAnswer::Yes, euler_number(x).is_zero()) << format_compact(x);
    }
  }
}

TEST(Foliation, Strings) {
  EXPECT_EQ(to_string(FoliationAnswer::OutOfScope), "out-of-scope");
  EXPECT_EQ(to_string(FoliationBasis::HyperbolicCriterion), "hyperbolic-criterion");
  const auto v = admits_horizontal_foliation(inv(0, -1, {{1, 3}, {1, 3}, {1, 4}}));
  EXPECT_EQ(v.certificate_str(), "cond2:c=1,d=2,i=0,j=1");
}

}  // namespace
}  // namespace seifert
