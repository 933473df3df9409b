#include "seifert/numbertheory/integer.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace seifert {

Integer::Integer(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    small_ = mpz_get_si(v.get_mpz_t());
  } else {
    big_ = std::make_unique<mpz_class>(v);
  }
}

void Integer::copy_big(const Integer& other) {
  big_ = std::make_unique<mpz_class>(*other.big_);
}

int Integer::big_sign() const noexcept { return mpz_sgn(big_->get_mpz_t()); }

Integer Integer::from_mpz(mpz_class&& v) {
  Integer r;
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    r.small_ = mpz_get_si(v.get_mpz_t());
  } else {
    r.big_ = std::make_unique<mpz_class>(std::move(v));
  }
  return r;
}

Integer Integer::parse(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("not an integer: '" + std::string(text) +
                                  "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return from_mpz(mpz_class(digits, 10));
}

mpz_class Integer::to_mpz() const {
  if (big_) return *big_;
  return mpz_class(static_cast<long>(small_));
}

std::string Integer::str() const {
  if (big_) return big_->get_str();
  return std::to_string(small_);
}

Integer Integer::negate_slow(const Integer& x) { return from_mpz(-x.to_mpz()); }

Integer Integer::add_slow(const Integer& x, const Integer& y) {
  return from_mpz(x.to_mpz() + y.to_mpz());
}

Integer Integer::sub_slow(const Integer& x, const Integer& y) {
  return from_mpz(x.to_mpz() - y.to_mpz());
}

Integer Integer::mul_slow(const Integer& x, const Integer& y) {
  return from_mpz(x.to_mpz() * y.to_mpz());
}

Integer Integer::div_slow(const Integer& x, const Integer& y) {
  if (y.is_zero()) throw std::domain_error("integer division by zero");
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), x.to_mpz().get_mpz_t(), y.to_mpz().get_mpz_t());
  return from_mpz(std::move(q));
}

Integer Integer::mod_slow(const Integer& x, const Integer& y) {
  if (y.is_zero()) throw std::domain_error("integer division by zero");
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), x.to_mpz().get_mpz_t(), y.to_mpz().get_mpz_t());
  return from_mpz(std::move(r));
}

bool Integer::eq_slow(const Integer& x, const Integer& y) noexcept {
  if (x.big_ && y.big_) return *x.big_ == *y.big_;
  return false;
}

std::strong_ordering Integer::cmp_slow(const Integer& x, const Integer& y) noexcept {
  int c;
  if (x.big_ && y.big_) {
    c = mpz_cmp(x.big_->get_mpz_t(), y.big_->get_mpz_t());
  } else if (x.big_) {
    // A big value lies outside the int64 range, so its sign decides.
    c = mpz_sgn(x.big_->get_mpz_t());
  } else {
    c = -mpz_sgn(y.big_->get_mpz_t());
  }
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Integer& x) {
  return os << x.str();
}

Integer abs(const Integer& x) { return x.sign() < 0 ? -x : x; }

Integer floor_div(const Integer& x, const Integer& y) {
  Integer q = x / y;
  if (!(x % y).is_zero() && ((x.sign() < 0) != (y.sign() < 0))) q -= 1;
  return q;
}

Integer floor_mod(const Integer& x, const Integer& y) {
  Integer r = x % y;
  if (!r.is_zero() && ((r.sign() < 0) != (y.sign() < 0))) r += y;
  return r;
}

bool divides(const Integer& d, const Integer& x) {
  if (d.is_zero()) return x.is_zero();
  return (x % d).is_zero();
}

Integer gcd(const Integer& x, const Integer& y) {
  auto sx = x.to_int64();
  auto sy = y.to_int64();
  if (sx && sy && *sx != INT64_MIN && *sy != INT64_MIN) {
    std::int64_t a = *sx < 0 ? -*sx : *sx;
    std::int64_t b = *sy < 0 ? -*sy : *sy;
    while (b != 0) {
      std::int64_t t = a % b;
      a = b;
      b = t;
    }
    return Integer(a);
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.to_mpz().get_mpz_t(), y.to_mpz().get_mpz_t());
  return Integer(g);
}

Integer lcm(const Integer& x, const Integer& y) {
  if (x.is_zero() || y.is_zero()) return Integer(0);
  return abs(x / gcd(x, y) * y);
}

Integer pow(const Integer& base, unsigned exponent) {
  Integer result(1);
  Integer b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

}  // namespace seifert
