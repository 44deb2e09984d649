#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace gfermat {

/// Exact rational in canonical form (GMP keeps numerator/denominator reduced).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Integer floor(const Rational& x);
/// floor(sqrt(n)) by bisection on the integers; n >= 0.
Integer isqrt_floor(const Integer& n);
/// "num/den", or "num" for integers.
std::string to_string(const Rational& x);
/// Decimal rendering rounded half-up at the given number of places.
std::string to_decimal(const Rational& x, int places);
std::int64_t to_int64(const Integer& x);

/// Working precision of interval arithmetic, in bits.
inline constexpr mpfr_prec_t kIntervalBits = 128;

/// Closed interval [lo, hi] with MPFR endpoints rounded outward, so every
/// operation returns an enclosure of the exact real result.
class Interval {
 public:
  Interval();
  explicit Interval(const Rational& x);
  Interval(const Interval& other);
  Interval& operator=(const Interval& other);
  ~Interval();

  static Interval sqrt(const Rational& x);
  Interval cbrt() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  /// True when every point of the interval is >= x (resp. < x).
  bool certainly_ge(const Rational& x) const;
  bool certainly_lt(const Rational& x) const;

  /// Lower endpoint minus x, rounded down (a certified lower bound of value - x).
  double lower_minus(const Rational& x) const;
  /// floor of the upper endpoint after one more upward ulp step.
  Integer floor_upper() const;
  double mid() const;
  double width() const;
  /// Midpoint to the given number of decimal places.
  std::string to_decimal(int places) const;

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace gfermat
