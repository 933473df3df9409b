#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace seifert {

/// Arbitrary-precision signed integer.
///
/// Values that fit in a signed 64-bit word are stored inline; anything
/// larger lives in a heap-allocated GMP integer. The representation is
/// canonical (a value is big iff it does not fit in int64), so equality and
/// ordering never need to look at both forms.
class Integer {
 public:
  Integer() noexcept = default;

  template <std::signed_integral T>
  Integer(T v) noexcept : small_(static_cast<std::int64_t>(v)) {}  // NOLINT

  template <std::unsigned_integral T>
  Integer(T v) {  // NOLINT
    if (v <= static_cast<std::uint64_t>(INT64_MAX)) {
      small_ = static_cast<std::int64_t>(v);
    } else {
      mpz_class z;
      mpz_import(z.get_mpz_t(), 1, 1, sizeof(T), 0, 0, &v);
      big_ = std::make_unique<mpz_class>(std::move(z));
    }
  }

  explicit Integer(const mpz_class& v);

  Integer(const Integer& other) : small_(other.small_) {
    if (other.big_) copy_big(other);
  }
  Integer(Integer&& other) noexcept = default;
  Integer& operator=(const Integer& other) {
    if (this != &other) {
      small_ = other.small_;
      if (other.big_) {
        copy_big(other);
      } else {
        big_.reset();
      }
    }
    return *this;
  }
  Integer& operator=(Integer&& other) noexcept = default;
  ~Integer() = default;

  /// Parses an optionally signed decimal literal. Throws
  /// std::invalid_argument on anything else.
  static Integer parse(std::string_view text);

  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  [[nodiscard]] std::optional<std::int64_t> to_int64() const noexcept {
    if (big_) return std::nullopt;
    return small_;
  }
  [[nodiscard]] mpz_class to_mpz() const;
  [[nodiscard]] int sign() const noexcept {
    if (big_) return big_sign();
    return (small_ > 0) - (small_ < 0);
  }
  [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }
  [[nodiscard]] std::string str() const;

  Integer operator-() const {
    if (!big_ && small_ != INT64_MIN) return Integer(-small_);
    return negate_slow(*this);
  }
  Integer& operator+=(const Integer& rhs) {
    std::int64_t r;
    if (!big_ && !rhs.big_ && !__builtin_add_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
    return *this = add_slow(*this, rhs);
  }
  Integer& operator-=(const Integer& rhs) {
    std::int64_t r;
    if (!big_ && !rhs.big_ && !__builtin_sub_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
    return *this = sub_slow(*this, rhs);
  }
  Integer& operator*=(const Integer& rhs) {
    std::int64_t r;
    if (!big_ && !rhs.big_ && !__builtin_mul_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
    return *this = mul_slow(*this, rhs);
  }

  friend Integer operator+(const Integer& x, const Integer& y) {
    std::int64_t r;
    if (!x.big_ && !y.big_ && !__builtin_add_overflow(x.small_, y.small_, &r)) {
      return Integer(r);
    }
    return add_slow(x, y);
  }
  friend Integer operator-(const Integer& x, const Integer& y) {
    std::int64_t r;
    if (!x.big_ && !y.big_ && !__builtin_sub_overflow(x.small_, y.small_, &r)) {
      return Integer(r);
    }
    return sub_slow(x, y);
  }
  friend Integer operator*(const Integer& x, const Integer& y) {
    std::int64_t r;
    if (!x.big_ && !y.big_ && !__builtin_mul_overflow(x.small_, y.small_, &r)) {
      return Integer(r);
    }
    return mul_slow(x, y);
  }
  /// Truncating division and remainder (C++ semantics). Division by zero
  /// throws std::domain_error.
  friend Integer operator/(const Integer& x, const Integer& y) {
    if (!x.big_ && !y.big_ && y.small_ != 0 &&
        !(y.small_ == -1 && x.small_ == INT64_MIN)) {
      return Integer(x.small_ / y.small_);
    }
    return div_slow(x, y);
  }
  friend Integer operator%(const Integer& x, const Integer& y) {
    if (!x.big_ && !y.big_ && y.small_ != 0 &&
        !(y.small_ == -1 && x.small_ == INT64_MIN)) {
      return Integer(x.small_ % y.small_);
    }
    return mod_slow(x, y);
  }

  friend bool operator==(const Integer& x, const Integer& y) noexcept {
    if (!x.big_ && !y.big_) return x.small_ == y.small_;
    return eq_slow(x, y);
  }
  friend std::strong_ordering operator<=>(const Integer& x,
                                          const Integer& y) noexcept {
    if (!x.big_ && !y.big_) return x.small_ <=> y.small_;
    return cmp_slow(x, y);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& x);

 private:
  static Integer from_mpz(mpz_class&& v);
  void copy_big(const Integer& other);
  [[nodiscard]] int big_sign() const noexcept;

  static Integer negate_slow(const Integer& x);
  static Integer add_slow(const Integer& x, const Integer& y);
  static Integer sub_slow(const Integer& x, const Integer& y);
  static Integer mul_slow(const Integer& x, const Integer& y);
  static Integer div_slow(const Integer& x, const Integer& y);
  static Integer mod_slow(const Integer& x, const Integer& y);
  static bool eq_slow(const Integer& x, const Integer& y) noexcept;
  static std::strong_ordering cmp_slow(const Integer& x, const Integer& y) noexcept;

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

Integer abs(const Integer& x);

/// Quotient rounded toward negative infinity.
Integer floor_div(const Integer& x, const Integer& y);
/// Remainder matching floor_div; for y > 0 the result lies in [0, y).
Integer floor_mod(const Integer& x, const Integer& y);

/// True iff d divides x. Zero divides only zero.
bool divides(const Integer& d, const Integer& x);

/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& x, const Integer& y);
/// Non-negative lcm; lcm(x, 0) = 0.
Integer lcm(const Integer& x, const Integer& y);

Integer pow(const Integer& base, unsigned exponent);

}  // namespace seifert
