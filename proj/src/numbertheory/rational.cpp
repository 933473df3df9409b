#include "seifert/numbertheory/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace seifert {

Rational::Rational(Integer num, Integer den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g != Integer(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  return Rational(Integer::parse(text.substr(0, slash)),
                  Integer::parse(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (is_integer()) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) { return *this = *this + rhs; }
Rational& Rational::operator-=(const Rational& rhs) { return *this = *this - rhs; }
Rational& Rational::operator*=(const Rational& rhs) { return *this = *this * rhs; }
Rational& Rational::operator/=(const Rational& rhs) { return *this = *this / rhs; }

Rational operator+(const Rational& x, const Rational& y) {
  if (x.den_ == y.den_) return Rational(x.num_ + y.num_, x.den_);
  return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
  return Rational(x.num_ * y.num_, x.den_ * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw std::domain_error("rational division by zero");
  return Rational(x.num_ * y.den_, x.den_ * y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  if (x.den_ == y.den_) return x.num_ <=> y.num_;
  return (x.num_ * y.den_) <=> (y.num_ * x.den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.str();
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace seifert
