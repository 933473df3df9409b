#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "seifert/numbertheory/integer.hpp"

namespace seifert {

/// Exact fraction, always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(Integer value) : num_(std::move(value)) {}  // NOLINT
  template <std::integral T>
  Rational(T value) : num_(value) {}  // NOLINT
  /// Throws std::domain_error when den is zero.
  Rational(Integer num, Integer den);

  /// Accepts "p" or "p/q".
  static Rational parse(std::string_view text);

  [[nodiscard]] const Integer& num() const noexcept { return num_; }
  [[nodiscard]] const Integer& den() const noexcept { return den_; }
  [[nodiscard]] bool is_integer() const noexcept { return den_ == Integer(1); }
  [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
  [[nodiscard]] int sign() const noexcept { return num_.sign(); }
  [[nodiscard]] std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);

  friend bool operator==(const Rational& x, const Rational& y) noexcept {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x,
                                          const Rational& y);

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  Integer num_{0};
  Integer den_{1};
};

Rational abs(const Rational& x);

}  // namespace seifert
