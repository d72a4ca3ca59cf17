#include "cmw/numbers/rational.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmw/error.hpp"

namespace cmw::numbers {

Rational::Rational(const Int& p, const Int& q) {
  if (q.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  const Natural g = gcd(p.abs(), q.abs());
  Int n = p.exact_div(g);
  Int d = q.exact_div(g);
  if (d.sign() < 0) {
    n = -n;
    d = -d;
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(Int::parse(text));
  return Rational(Int::parse(text.substr(0, slash)), Int::parse(text.substr(slash + 1)));
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw Error(ErrorKind::ParameterError, "non-finite value has no rational form");
  int exp = 0;
  const double mant = std::frexp(v, &exp);
  // mant * 2^53 is an integer for binary64.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational out{Int(scaled)};
  const Rational two(2);
  if (exp > 0) {
    out *= pow(two, static_cast<unsigned>(exp));
  } else if (exp < 0) {
    out /= pow(two, static_cast<unsigned>(-exp));
  }
  return out;
}

Rational Rational::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational");
  return Rational(den_, num_);
}

Int Rational::floor() const {
  // den > 0; floor of p/q for p >= 0 is p div q, for p < 0 it is -ceil(|p|/q).
  const Natural& q = den_.abs();
  const Natural& p = num_.abs();
  const Natural quo = p.div(q);
  if (num_.sign() >= 0) return Int(quo);
  const bool exact = p.mod(q).is_zero();
  return -Int(exact ? quo : quo.succ());
}

Int Rational::ceil() const { return -((-*this).floor()); }

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

double Rational::to_double() const {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  auto signed_of = [](const Int& i) {
    cpp_int v = i.abs().magnitude();
    return i.sign() < 0 ? cpp_int(-v) : v;
  };
  return cpp_rational(signed_of(num_), signed_of(den_)).convert_to<double>();
}

Rational pow(const Rational& x, unsigned k) {
  Rational out(1);
  Rational base = x;
  while (k > 0) {
    if (k & 1u) out *= base;
    base *= base;
    k >>= 1u;
  }
  return out;
}

}  // namespace cmw::numbers
