#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "cmw/numbers/natural.hpp"

namespace cmw::numbers {

// An integer as the class of a natural pair (a, b) with (a,b) ~ (c,d) iff
// a + d = c + b. The stored representative has min(a, b) = 0, so equality
// of classes is structural equality of the pair.
class Int {
 public:
  Int() = default;
  Int(std::int64_t v);  // NOLINT(google-explicit-constructor)
  explicit Int(const Natural& n) : a_(n) {}

  static Int from_pair(const Natural& a, const Natural& b);
  static Int parse(const std::string& text);

  const Natural& first() const noexcept { return a_; }
  const Natural& second() const noexcept { return b_; }

  int sign() const noexcept { return !a_.is_zero() ? 1 : (!b_.is_zero() ? -1 : 0); }
  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  const Natural& abs() const noexcept { return a_.is_zero() ? b_ : a_; }

  // Exact division of the class by a natural divisor of abs().
  Int exact_div(const Natural& d) const;

  std::string to_string() const;

  // -[(a,b)] = [(b,a)]
  Int operator-() const { return from_pair(b_, a_); }
  // [(a,b)] + [(c,d)] = [(a+c, b+d)]
  friend Int operator+(const Int& x, const Int& y) { return from_pair(x.a_ + y.a_, x.b_ + y.b_); }
  friend Int operator-(const Int& x, const Int& y) { return x + (-y); }
  // [(a,b)] * [(c,d)] = [(ac+bd, ad+bc)]. With normalized representatives
  // only one of the four products is non-zero.
  friend Int operator*(const Int& x, const Int& y) {
    Int out;
    const Natural product = x.abs() * y.abs();
    ((x.sign() < 0) != (y.sign() < 0) ? out.b_ : out.a_) = product;
    return out;
  }
  friend bool operator==(const Int&, const Int&) = default;
  // [(a,b)] <= [(c,d)] iff a + d <= c + b.
  friend std::strong_ordering operator<=>(const Int& x, const Int& y) {
    return (x.a_ + y.b_) <=> (y.a_ + x.b_);
  }

 private:
  Natural a_;
  Natural b_;
};

// (a,b) ~ (c,d) iff a + d = c + b.
inline bool int_pairs_equivalent(const std::pair<Natural, Natural>& x,
                                 const std::pair<Natural, Natural>& y) {
  return x.first + y.second == y.first + x.second;
}

}  // namespace cmw::numbers
