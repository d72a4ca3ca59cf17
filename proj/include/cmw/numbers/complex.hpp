#pragma once

#include <cstdint>
#include <string>

#include "cmw/error.hpp"
#include "cmw/numbers/cauchy_real.hpp"
#include "cmw/numbers/rational.hpp"

namespace cmw::numbers {

// C as pairs (a, b) over a real-like component type: Rational for the exact
// field, CauchyReal for computable complex numbers.
template <class T>
T component_constant(std::int64_t k) {
  return T(k);
}
template <>
inline CauchyReal component_constant<CauchyReal>(std::int64_t k) {
  return CauchyReal::constant(Rational(k));
}

template <class T>
struct Complex {
  T re = component_constant<T>(0);
  T im = component_constant<T>(0);

  Complex() = default;
  Complex(T r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  static Complex i() { return Complex(component_constant<T>(0), component_constant<T>(1)); }

  Complex conj() const { return Complex(re, -im); }

  friend Complex operator+(const Complex& z, const Complex& w) { return Complex(z.re + w.re, z.im + w.im); }
  friend Complex operator-(const Complex& z, const Complex& w) { return Complex(z.re - w.re, z.im - w.im); }
  friend Complex operator-(const Complex& z) { return Complex(-z.re, -z.im); }
  // (a,b)(c,d) = (ac - bd, ad + bc)
  friend Complex operator*(const Complex& z, const Complex& w) {
    return Complex(z.re * w.re - z.im * w.im, z.re * w.im + z.im * w.re);
  }
};

using ComplexRational = Complex<Rational>;
using ComplexReal = Complex<CauchyReal>;

inline bool operator==(const ComplexRational& z, const ComplexRational& w) { return z.re == w.re && z.im == w.im; }
inline bool is_zero(const ComplexRational& z) { return z.re.is_zero() && z.im.is_zero(); }
inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline ComplexRational conj(const ComplexRational& z) { return z.conj(); }
inline Rational norm_squared(const ComplexRational& z) { return z.re * z.re + z.im * z.im; }

// 1/(c,d) = (c, -d) / (c^2 + d^2). DivisionByZero on (0, 0).
inline ComplexRational inv(const ComplexRational& z) {
  const Rational n = norm_squared(z);
  if (n.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of complex zero");
  return ComplexRational(z.re / n, -z.im / n);
}
inline ComplexRational operator/(const ComplexRational& z, const ComplexRational& w) { return z * inv(w); }

// Computable inverse; `lower` must bound c^2 + d^2 from below.
inline ComplexReal inv(const ComplexReal& z, const Rational& lower) {
  const CauchyReal n = z.re * z.re + z.im * z.im;
  const CauchyReal r = real_recip(n, lower);
  return ComplexReal(z.re * r, -(z.im * r));
}
inline ComplexReal div(const ComplexReal& z, const ComplexReal& w, const Rational& lower) {
  return z * inv(w, lower);
}

inline ComplexRational approx(const ComplexReal& z, const Rational& eps) {
  return ComplexRational(z.re.approx(eps), z.im.approx(eps));
}

inline std::string to_string(const ComplexRational& z) {
  if (z.im.is_zero()) return z.re.to_string();
  return z.re.to_string() + (z.im.sign() < 0 ? "-" : "+") + z.im.abs().to_string() + "i";
}

}  // namespace cmw::numbers
