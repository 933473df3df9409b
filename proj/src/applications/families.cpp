#include "seifert/applications/families.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "seifert/descriptor.hpp"

namespace seifert {
namespace {

constexpr std::size_t kMaxDetails = 20;

class Recorder {
 public:
  explicit Recorder(FamilyReport& report) : report_(report) {}

  void check(bool ok, const std::string& claim, const SeifertInvariants& inv) {
    ++report_.checks;
    if (ok) return;
    ++report_.mismatches;
    if (report_.details.size() < kMaxDetails) {
      report_.details.push_back(claim + " " + format_compact(inv));
    }
  }

 private:
  FamilyReport& report_;
};

bool ctf(const SeifertInvariants& inv) {
  return admits_horizontal_foliation(inv).answer == FoliationAnswer::Yes;
}

bool vanishes(const SeifertInvariants& inv) {
  return euler_class_vanishes(inv).vanishes;
}

// Cone lists of length n, orders <= bound, sorted by (b_i, a_i), with
// sum a_i/b_i <= limit.
void for_each_bounded_list(std::int64_t n, std::int64_t bound, const Rational& limit,
                           const std::function<void(const std::vector<ConePair>&)>& visit) {
  std::vector<std::pair<ConePair, Rational>> alphabet;
  for (std::int64_t order = 2; order <= bound; ++order) {
    for (std::int64_t a = 1; a < order; ++a) {
      if (std::gcd(a, order) == 1) {
        alphabet.push_back({{Integer(a), Integer(order)}, Rational(a, order)});
      }
    }
  }
  std::vector<ConePair> current;
  std::function<void(std::size_t, const Rational&)> extend =
      [&](std::size_t from, const Rational& sum) {
        if (static_cast<std::int64_t>(current.size()) == n) {
          visit(current);
          return;
        }
        for (std::size_t k = from; k < alphabet.size(); ++k) {
          Rational next = sum + alphabet[k].second;
          if (next > limit) continue;
          current.push_back(alphabet[k].first);
          extend(k, next);
          current.pop_back();
        }
      };
  extend(0, Rational(0));
}

void family1(std::int64_t n, std::int64_t bound, Recorder& rec) {
  for (std::int64_t c = 2; c <= bound; ++c) {
    const std::vector<ConePair> cones(static_cast<std::size_t>(n),
                                      ConePair{Integer(1), Integer(c)});
    for (std::int64_t b = -n - 2; b <= 2; ++b) {
      const SeifertInvariants inv(0, Integer(b), cones);
      rec.check(ctf(inv) == ((2 - n <= b && b <= -2) || (b == -1 && c >= 3)),
                "1(a)", inv);
      if (c >= 2 * n - 2) rec.check(vanishes(inv) == (b == 2 - n), "1(b)", inv);
      if (c == 2 * n - 3 && b == -1) rec.check(vanishes(inv), "1(b) boundary", inv);
    }
  }
}

void family2(std::int64_t n, std::int64_t bound, Recorder& rec) {
  for_each_bounded_list(n, bound, Rational(n - 2, 2), [&](const std::vector<ConePair>& cones) {
    const SeifertInvariants inv(0, Integer(2 - n), cones);
    rec.check(ctf(inv), "2 foliation", inv);
    bool all_one = true;
    for (const auto& c : cones) all_one = all_one && c.a == Integer(1);
    rec.check(vanishes(inv) == all_one, "2 vanishing", inv);
  });
}

void family3(std::int64_t n, std::int64_t bound, Recorder& rec) {
  std::vector<std::int64_t> orders;
  std::function<void(std::int64_t)> extend = [&](std::int64_t from) {
    if (static_cast<std::int64_t>(orders.size()) == n) {
      std::vector<ConePair> cones;
      for (auto o : orders) cones.push_back({Integer(1), Integer(o)});
      for (std::int64_t b = -n - 2; b <= 2; ++b) {
        const SeifertInvariants inv(0, Integer(b), cones);
        rec.check(ctf(inv) == (2 - n <= b && b <= -1), "3(a)", inv);
        rec.check(vanishes(inv) == (b == 2 - n), "3(b)", inv);
      }
      return;
    }
    for (std::int64_t o = from; o <= bound; ++o) {
      bool coprime = true;
      for (auto p : orders) coprime = coprime && std::gcd(o, p) == 1;
      if (!coprime) continue;
      orders.push_back(o);
      extend(o + 1);
      orders.pop_back();
    }
  };
  extend(n);
}

void family4(std::int64_t n, std::int64_t bound, Recorder& rec) {
  for_each_bounded_list(n, bound, Rational(n, 6), [&](const std::vector<ConePair>& cones) {
    for (std::int64_t b = 2 - n; b <= -2; ++b) {
      const SeifertInvariants inv(0, Integer(b), cones);
      rec.check(ctf(inv), "4(a)", inv);
    }
    if (n <= 6) {
      const SeifertInvariants inv(0, Integer(-1), cones);
      rec.check(ctf(inv), "4(a) b=-1", inv);
    }
    int count = 0;
    // (2 - n)/2 rounded down, n >= 4
    const std::int64_t top = -((n - 1) / 2);
    for (std::int64_t b = 2 - n; b <= top; ++b) {
      if (vanishes(SeifertInvariants(0, Integer(b), cones))) ++count;
    }
    rec.check(count <= 1, "4(b)", SeifertInvariants(0, Integer(2 - n), cones));
  });
}

}  // namespace

FamilyReport example_family_check(int family, std::int64_t n, std::int64_t bound) {
  if (family < 1 || family > 4) {
    throw std::invalid_argument("family must be 1..4, got " + std::to_string(family));
  }
  const std::int64_t min_n = family == 2 ? 3 : 4;
  if (n < min_n || n > 8) {
    throw std::invalid_argument("n must be in [" + std::to_string(min_n) +
                                ", 8], got " + std::to_string(n));
  }
  if (bound < 2 || bound > 30) {
    throw std::invalid_argument("bound must be in [2, 30], got " + std::to_string(bound));
  }
  FamilyReport report{family, n, bound, 0, 0, {}};
  Recorder rec(report);
  switch (family) {
    case 1: family1(n, bound, rec); break;
    case 2: family2(n, bound, rec); break;
    case 3: family3(n, bound, rec); break;
    case 4: family4(n, bound, rec); break;
  }
  return report;
}

}  // namespace seifert
