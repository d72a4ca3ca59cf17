#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "cmw/numbers/integer.hpp"

namespace cmw::numbers {

// A rational as the class of an integer pair (p, q), q != 0, with
// (a,b) ~ (c,d) iff ad = bc. Stored with q > 0 and gcd(|p|, q) = 1.
class Rational {
 public:
  Rational() : den_(1) {}
  Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(const Int& n) : num_(n), den_(1) {}    // NOLINT(google-explicit-constructor)
  Rational(const Int& p, const Int& q);

  // Accepts "p", "p/q" and "-p/q". Throws ParseError or DivisionByZero.
  static Rational parse(const std::string& text);
  // Exact value of a finite binary64.
  static Rational from_double(double v);

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == Int(1); }

  // [(a,b)]^-1 = [(b,a)]; DivisionByZero on zero.
  Rational inv() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Int floor() const;
  Int ceil() const;

  // "p" when q = 1, otherwise "p/q".
  std::string to_string() const;
  double to_double() const;

  Rational operator-() const { return Rational(-num_, den_, Normalized{}); }
  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ + x.den_ * y.num_, x.den_ * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) { return x * y.inv(); }
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational&, const Rational&) = default;
  // Denominators are positive, so x <= y iff ad - bc <= 0.
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return (x.num_ * y.den_) <=> (y.num_ * x.den_);
  }

 private:
  struct Normalized {};
  Rational(Int p, Int q, Normalized) : num_(std::move(p)), den_(std::move(q)) {}

  Int num_;
  Int den_;
};

// (a,b) ~ (c,d) iff ad = bc, for pairs with non-zero second component.
inline bool rational_pairs_equivalent(const std::pair<Int, Int>& x, const std::pair<Int, Int>& y) {
  return x.first * y.second == x.second * y.first;
}

inline Rational abs(const Rational& x) { return x.abs(); }
inline Rational conj(const Rational& x) { return x; }
Rational pow(const Rational& x, unsigned k);

}  // namespace cmw::numbers
