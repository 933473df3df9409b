#include <gtest/gtest.h>

#include <cstdlib>
#include <numeric>
#include <random>

#include "seifert/applications/census.hpp"
#include "seifert/descriptor.hpp"
#include "seifert/eulerclass.hpp"
#include "support.hpp"

namespace seifert {
namespace {

using testing::inv;
using testing::small;

// Scans every m that could possibly work. With L = lcm(b_i) the denominator
// of e(M) divides L, so |e| >= 1/L when e != 0, and |chi| <= 2g + n + 2;
// hence |m| <= (2g + n + 2) L. When e = 0 the congruences are periodic mod L.
std::optional<std::int64_t> brute_force_witness(const SeifertInvariants& x) {
  const auto g = x.genus();
  const auto n = static_cast<std::int64_t>(x.n());
  std::int64_t d = 1, l = 1;
  for (const auto& c : x.cones()) {
    d *= small(c.b);
    l = std::lcm(l, small(c.b));
  }
  std::int64_t e_num = small(x.b()) * d;
  std::int64_t chi_num = (2 - 2 * g - n) * d;
  for (const auto& c : x.cones()) {
    e_num += small(c.a) * (d / small(c.b));
    chi_num += d / small(c.b);
  }
  auto works = [&](std::int64_t m) {
    for (const auto& c : x.cones()) {
      if ((m * small(c.a) - 1) % small(c.b) != 0) return false;
    }
    return m * e_num == chi_num;
  };
  if (e_num == 0) {
    for (std::int64_t m = 0; m < l; ++m) {
      if (works(m)) return m;
    }
    return std::nullopt;
  }
  const std::int64_t bound = (2 * g + n + 2) * l;
  for (std::int64_t m = -bound; m <= bound; ++m) {
    if (works(m)) return m;
  }
  return std::nullopt;
}

bool witness_valid(const SeifertInvariants& x, const Integer& m) {
  for (const auto& c : x.cones()) {
    if (!divides(c.b, m * c.a - Integer(1))) return false;
  }
  if (x.n() == 0) return m * x.b() == Integer(2 - 2 * x.genus());
  return Rational(m) * euler_number(x) == orbifold_euler_char(x);
}

TEST(Vanishing, SpecExamples) {
  // e = chi = 1/2
  auto v = euler_class_vanishes(inv(0, -1, {{1, 2}, {1, 2}, {1, 2}}));
  EXPECT_TRUE(v.vanishes);
  EXPECT_EQ(v.witness_m, Integer(1));
  EXPECT_EQ(v.reason, VanishingReason::Witness);

  // e = 7/30, chi = 1/30: chi/e = 1/7.
  v = euler_class_vanishes(inv(0, -1, {{1, 2}, {1, 3}, {2, 5}}));
  EXPECT_FALSE(v.vanishes);
  EXPECT_EQ(v.reason, VanishingReason::EulerCharMismatch);
  EXPECT_FALSE(v.witness_m);

  EXPECT_FALSE(euler_class_vanishes(inv(0, 0, {{1, 2}, {1, 2}, {1, 2}})).vanishes);

  v = euler_class_vanishes(inv(1, 0, {}));
  EXPECT_TRUE(v.vanishes);
  EXPECT_EQ(v.witness_m, Integer(0));
  EXPECT_EQ(v.reason, VanishingReason::N0Bundle);

  EXPECT_FALSE(euler_class_vanishes(inv(0, 3, {})).vanishes);
  v = euler_class_vanishes(inv(0, 2, {}));
  EXPECT_TRUE(v.vanishes);
  EXPECT_EQ(v.witness_m, Integer(1));
}

TEST(Vanishing, Reasons) {
  auto v = euler_class_vanishes(inv(0, 0, {{1, 4}, {3, 4}}));
  EXPECT_FALSE(v.vanishes);
  EXPECT_EQ(v.reason, VanishingReason::CongruenceInconsistent);

  v = euler_class_vanishes(inv(0, -1, {{1, 2}, {1, 3}, {1, 6}}));
  EXPECT_TRUE(v.vanishes);
  EXPECT_EQ(v.reason, VanishingReason::ChiZeroEulerZero);
  EXPECT_EQ(v.witness_m, Integer(1));

  // e = 0, chi = 1
  v = euler_class_vanishes(inv(0, -1, {{1, 2}, {1, 2}}));
  EXPECT_FALSE(v.vanishes);
  EXPECT_EQ(v.reason, VanishingReason::EulerNumberZeroChiNonzero);
}

TEST(Vanishing, CircleBundles) {
  for (std::int64_t b = -8; b <= 8; ++b) {
    const bool lens = b == 1 || b == -1 || b == 2 || b == -2;
    EXPECT_EQ(euler_class_vanishes(inv(0, b, {})).vanishes, lens) << b;
    EXPECT_TRUE(euler_class_vanishes(inv(1, b, {})).vanishes) << b;
    // m b = -2
    EXPECT_EQ(euler_class_vanishes(inv(2, b, {})).vanishes, lens) << b;
  }
  EXPECT_FALSE(euler_class_vanishes(inv(3, 0, {})).vanishes);
}

TEST(Vanishing, NormalizesInternally) {
  const auto raw = inv(0, 0, {{-1, 2}, {1, 2}, {1, 2}});
  const auto v = euler_class_vanishes(raw);
  EXPECT_EQ(v.vanishes, euler_class_vanishes(normalize(raw)).vanishes);
  EXPECT_TRUE(v.vanishes);
}

TEST(Vanishing, MatchesBruteForceScan) {
  std::mt19937_64 rng(11);
  const testing::RandomBounds rb{2, 0, 4, 8, 6};
  int vanishing = 0;
  for (int t = 0; t < 3000; ++t) {
    const auto x = testing::random_normalized(rng, rb);
    const auto v = euler_class_vanishes(x);
    const auto scan = brute_force_witness(x);
    ASSERT_EQ(v.vanishes, scan.has_value()) << format_compact(x);
    if (scan) {
      ++vanishing;
      ASSERT_TRUE(v.witness_m);
      EXPECT_EQ(*v.witness_m, Integer(*scan));
    }
  }
  EXPECT_GT(vanishing, 30);
}

TEST(Vanishing, WitnessValidAndSymmetric) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 5000; ++t) {
    const auto x = testing::random_normalized(rng);
    const auto v = euler_class_vanishes(x);
    if (v.vanishes) {
      ASSERT_TRUE(v.witness_m);
      EXPECT_TRUE(witness_valid(x, *v.witness_m));
      EXPECT_TRUE(necessary_condition(x));
      EXPECT_TRUE(gcd_necessary_condition(x));
      if (!euler_number(x).is_zero()) EXPECT_TRUE(torsion_divisibility_check(x));
    } else {
      EXPECT_FALSE(v.witness_m);
    }
    const auto r = euler_class_vanishes(orientation_reverse(x));
    EXPECT_EQ(v.vanishes, r.vanishes);
    if (v.vanishes && !euler_number(x).is_zero()) EXPECT_EQ(*r.witness_m, -*v.witness_m);
  }
}

TEST(NecessaryCondition, Examples) {
  EXPECT_TRUE(necessary_condition(inv(1, 0, {})));
  EXPECT_TRUE(necessary_condition(inv(0, -1, {{1, 2}, {1, 3}, {1, 6}})));
  // chi/e = (-1/42)/(83/42)
  EXPECT_FALSE(necessary_condition(inv(0, 1, {{1, 2}, {1, 3}, {1, 7}})));
  // e = 0, chi = 1
  EXPECT_FALSE(necessary_condition(inv(0, -1, {{1, 2}, {1, 2}})));
}

TEST(GcdCondition, Examples) {
  EXPECT_FALSE(gcd_necessary_condition(inv(0, 0, {{1, 4}, {3, 4}})));
  EXPECT_TRUE(gcd_necessary_condition(inv(0, 0, {{1, 2}, {1, 3}, {1, 5}})));
  EXPECT_FALSE(gcd_necessary_condition(inv(0, 0, {{1, 6}, {5, 6}})));
  EXPECT_TRUE(gcd_necessary_condition(inv(0, 0, {{1, 4}, {5, 6}})));
  EXPECT_TRUE(gcd_necessary_condition(inv(0, 0, {{1, 4}, {1, 6}})));
}

TEST(TorsionDivisibility, Examples) {
  EXPECT_TRUE(torsion_divisibility_check(inv(0, -1, {{1, 2}, {1, 3}, {1, 5}})));
  EXPECT_TRUE(torsion_divisibility_check(inv(0, -2, {{1, 2}, {1, 2}, {1, 2}})));
  EXPECT_FALSE(torsion_divisibility_check(inv(0, 1, {{1, 2}, {1, 3}, {1, 7}})));
  EXPECT_THROW(torsion_divisibility_check(inv(0, -1, {{1, 2}, {1, 3}, {1, 6}})),
               std::domain_error);
}

TEST(Vanishing, SmallHomologySpheresVanish) {
  // Rational homology spheres with |H_1| in {1, 2}.
  CensusBounds bounds;
  bounds.max_n = 3;
  bounds.max_cone_order = 12;
  bounds.b_min = -6;
  bounds.b_max = 6;
  int seen = 0;
  enumerate_census(bounds, [&](const SeifertInvariants& x) {
    if (euler_number(x).is_zero()) return;
    const Integer t = torsion_order(x);
    if (t > Integer(2)) return;
    ++seen;
    EXPECT_TRUE(euler_class_vanishes(x).vanishes);
  });
  EXPECT_GT(seen, 10);
}

TEST(DecideVanishing, AgreesWithWrapper) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 2000; ++t) {
    const auto x = testing::random_normalized(rng);
    const auto crt = solve_crt(witness_congruences(x));
    const auto a = decide_vanishing(x.n(), x.b(), crt, euler_number(x), orbifold_euler_char(x));
    const auto b = euler_class_vanishes(x);
    EXPECT_EQ(a.vanishes, b.vanishes);
    EXPECT_EQ(a.witness_m, b.witness_m);
    EXPECT_EQ(a.reason, b.reason);
  }
}

}  // namespace
}  // namespace seifert
