#include "cmw/numbers/natural.hpp"

#include <limits>

#include "cmw/error.hpp"

namespace cmw::numbers {

Natural::Natural(Magnitude m) : m_(std::move(m)) {
  if (m_.sign() < 0) throw Error(ErrorKind::ParameterError, "natural number cannot be negative");
}

Natural Natural::parse(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::ParseError, "not a natural number: '" + text + "'");
  }
  return Natural(Magnitude(text));
}

Natural Natural::monus(const Natural& b) const {
  if (b.m_ >= m_) return Natural();
  return Natural(Magnitude(m_ - b.m_));
}

Natural Natural::div(const Natural& b) const {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "natural division by zero");
  return Natural(Magnitude(m_ / b.m_));
}

Natural Natural::mod(const Natural& b) const {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "natural division by zero");
  return Natural(Magnitude(m_ % b.m_));
}

std::uint64_t Natural::to_u64() const {
  if (m_ > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return m_.convert_to<std::uint64_t>();
}

Natural gcd(const Natural& a, const Natural& b) {
  return Natural(Natural::Magnitude(boost::multiprecision::gcd(a.magnitude(), b.magnitude())));
}

}  // namespace cmw::numbers
