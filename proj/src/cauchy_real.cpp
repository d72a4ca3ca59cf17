#include "cmw/numbers/cauchy_real.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "cmw/error.hpp"

namespace cmw::numbers {

namespace {

std::size_t to_index(const Int& i) {
  if (i.sign() <= 0) return 0;
  const std::uint64_t v = i.abs().to_u64();
  return static_cast<std::size_t>(std::min<std::uint64_t>(v, std::numeric_limits<std::size_t>::max()));
}

void require_positive(const Rational& eps, const char* what) {
  if (eps.sign() <= 0) throw Error(ErrorKind::ParameterError, std::string(what) + " must be positive");
}

}  // namespace

CauchyReal::CauchyReal(Term term, Modulus modulus)
    : term_(std::make_shared<const Term>(std::move(term))),
      modulus_(std::make_shared<const Modulus>(std::move(modulus))) {}

CauchyReal CauchyReal::constant(const Rational& q) {
  return CauchyReal([q](std::size_t) { return q; }, [](const Rational&) { return std::size_t{0}; });
}

std::size_t CauchyReal::modulus(const Rational& eps) const {
  require_positive(eps, "modulus tolerance");
  return (*modulus_)(eps);
}

Rational CauchyReal::approx(const Rational& eps) const { return term(modulus(eps)); }

bool probe_modulus(const CauchyReal& x) {
  const std::array<Rational, 3> probes{Rational(1), Rational(Int(1), Int(10)), Rational(Int(1), Int(100))};
  for (const auto& eps : probes) {
    const std::size_t n = x.modulus(eps);
    if ((x.term(n) - x.term(n + 7)).abs() > eps) return false;
  }
  return true;
}

CauchyReal real_from_sequence(CauchyReal::Term term, CauchyReal::Modulus modulus) {
  CauchyReal x(std::move(term), std::move(modulus));
  if (!probe_modulus(x)) {
    throw Error(ErrorKind::ModulusViolation, "sequence violates its Cauchy modulus at a probe");
  }
  return x;
}

CauchyReal harmonic_real() {
  return CauchyReal([](std::size_t k) { return Rational(Int(1), Int(static_cast<std::int64_t>(k) + 1)); },
                    [](const Rational& eps) {
                      const std::size_t n = to_index((Rational(3) / eps).ceil());
                      return std::max<std::size_t>(n, 1);
                    });
}

CauchyReal operator+(const CauchyReal& x, const CauchyReal& y) {
  return CauchyReal([x, y](std::size_t k) { return x.term(k) + y.term(k); },
                    [x, y](const Rational& eps) {
                      const Rational half = eps / Rational(2);
                      return std::max(x.modulus(half), y.modulus(half));
                    });
}

CauchyReal operator-(const CauchyReal& x) {
  return CauchyReal([x](std::size_t k) { return -x.term(k); },
                    [x](const Rational& eps) { return x.modulus(eps); });
}

CauchyReal operator-(const CauchyReal& x, const CauchyReal& y) { return x + (-y); }

CauchyReal operator*(const CauchyReal& x, const CauchyReal& y) {
  const std::size_t nx1 = x.modulus(Rational(1));
  const std::size_t ny1 = y.modulus(Rational(1));
  const Rational bx = x.term(nx1).abs() + Rational(1);
  const Rational by = y.term(ny1).abs() + Rational(1);
  return CauchyReal([x, y](std::size_t k) { return x.term(k) * y.term(k); },
                    [x, y, bx, by, nx1, ny1](const Rational& eps) {
                      const Rational two(2);
                      return std::max({x.modulus(eps / (two * by)), y.modulus(eps / (two * bx)), nx1, ny1});
                    });
}

CauchyReal real_recip(const CauchyReal& x, const Rational& lower) {
  require_positive(lower, "apartness witness");
  // With K = N(r/4) and |x| >= r, |x_K| >= 3r/4 and |x_k| >= r/2 for k >= K.
  const std::size_t k0 = x.modulus(lower / Rational(4));
  if (x.term(k0).abs() < Rational(Int(3), Int(4)) * lower) {
    throw Error(ErrorKind::ApartnessNotWitnessed,
                "approximation does not stay away from zero by the supplied witness");
  }
  // |1/x_j - 1/x_k| <= |x_j - x_k| * 4 / r^2 on the shifted tail.
  const Rational scale = lower * lower / Rational(4);
  return CauchyReal([x, k0](std::size_t k) { return x.term(k0 + k).inv(); },
                    [x, k0, scale](const Rational& eps) {
                      const std::size_t n = x.modulus(eps * scale);
                      return n > k0 ? n - k0 : std::size_t{0};
                    });
}

RealOrdering real_compare(const CauchyReal& x, const CauchyReal& y, const Rational& tol) {
  require_positive(tol, "comparison tolerance");
  const Rational quarter = tol / Rational(4);
  const Rational half = tol / Rational(2);
  const Rational ax = x.approx(quarter);
  const Rational ay = y.approx(quarter);
  if (ax + half < ay) return RealOrdering::Less;
  if (ay + half < ax) return RealOrdering::Greater;
  return RealOrdering::Indistinguishable;
}

Bisection supremum_bisect(RationalPredicate is_upper_bound, const Rational& lower, const Rational& upper,
                          std::size_t steps) {
  if (!(lower < upper) || !is_upper_bound(upper) || is_upper_bound(lower)) {
    throw Error(ErrorKind::BadBracket, "bisection needs lower < upper, upper a bound and lower not");
  }
  auto pred = std::make_shared<const RationalPredicate>(std::move(is_upper_bound));
  const Rational width = upper - lower;

  CauchyReal real(
      [pred, lower, upper](std::size_t n) {
        Rational l = lower;
        Rational u = upper;
        const Rational two(2);
        for (std::size_t i = 0; i < n; ++i) {
          const Rational m = (u + l) / two;
          if ((*pred)(m)) {
            u = m;
          } else {
            l = m;
          }
        }
        return u;
      },
      [width](const Rational& eps) {
        // Smallest n with width / 2^n <= eps.
        std::size_t n = 0;
        Rational w = width;
        const Rational two(2);
        while (w > eps) {
          w /= two;
          ++n;
        }
        return n;
      });

  Bisection out{real, {upper}, {lower}};
  Rational l = lower;
  Rational u = upper;
  const Rational two(2);
  for (std::size_t i = 0; i < steps; ++i) {
    const Rational m = (u + l) / two;
    if ((*pred)(m)) {
      u = m;
    } else {
      l = m;
    }
    out.upper.push_back(u);
    out.lower.push_back(l);
  }
  return out;
}

}  // namespace cmw::numbers
