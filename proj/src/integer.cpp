#include "cmw/numbers/integer.hpp"

#include "cmw/error.hpp"

namespace cmw::numbers {

Int::Int(std::int64_t v) {
  if (v >= 0) {
    a_ = Natural(static_cast<std::uint64_t>(v));
  } else {
    // -(v + 1) avoids overflow at INT64_MIN.
    b_ = Natural(static_cast<std::uint64_t>(-(v + 1)) + 1u);
  }
}

Int Int::from_pair(const Natural& a, const Natural& b) {
  Int out;
  if (a >= b) {
    out.a_ = a.monus(b);
  } else {
    out.b_ = b.monus(a);
  }
  return out;
}

Int Int::parse(const std::string& text) {
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    const Natural n = Natural::parse(text.substr(1));
    return text[0] == '-' ? from_pair(Natural(), n) : Int(n);
  }
  return Int(Natural::parse(text));
}

Int Int::exact_div(const Natural& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "integer division by zero");
  return from_pair(a_.div(d), b_.div(d));
}

std::string Int::to_string() const {
  if (sign() < 0) return "-" + b_.to_string();
  return a_.to_string();
}

}  // namespace cmw::numbers
