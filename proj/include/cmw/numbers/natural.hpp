#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cmw::numbers {

// A natural number. The magnitude is arbitrary precision; the nested-set
// model lives in von_neumann.hpp and is only built on request.
class Natural {
 public:
  using Magnitude = boost::multiprecision::cpp_int;

  Natural() = default;
  Natural(std::uint64_t v) : m_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Natural(Magnitude m);

  static Natural parse(const std::string& text);

  const Magnitude& magnitude() const noexcept { return m_; }
  bool is_zero() const noexcept { return m_.is_zero(); }

  // S(n) = n + 1.
  Natural succ() const { return Natural(Magnitude(m_ + 1)); }

  // Truncated subtraction; requires b <= a for an exact result.
  Natural monus(const Natural& b) const;

  // Euclidean quotient and remainder. b must be non-zero.
  Natural div(const Natural& b) const;
  Natural mod(const Natural& b) const;

  std::string to_string() const { return m_.str(); }
  std::uint64_t to_u64() const;  // saturates at UINT64_MAX

  friend Natural operator+(const Natural& a, const Natural& b) { return Natural(Magnitude(a.m_ + b.m_)); }
  friend Natural operator*(const Natural& a, const Natural& b) { return Natural(Magnitude(a.m_ * b.m_)); }
  friend bool operator==(const Natural& a, const Natural& b) { return a.m_ == b.m_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = a.m_.compare(b.m_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Magnitude m_;
};

inline Natural nat_succ(const Natural& n) { return n.succ(); }
// a <= b iff a + c = b for some natural c.
inline bool nat_le(const Natural& a, const Natural& b) { return a <= b; }
Natural gcd(const Natural& a, const Natural& b);

}  // namespace cmw::numbers
