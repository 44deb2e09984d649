#include "gfermat/rational.hpp"

#include <algorithm>
#include <vector>

#include "gfermat/error.hpp"

namespace gfermat {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::DomainError, "zero denominator");
  Rational r(Integer(std::to_string(num)), Integer(std::to_string(den)));
  r.canonicalize();
  return r;
}

Integer floor(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

Integer isqrt_floor(const Integer& n) {
  if (n < 0) throw Error(Errc::DomainError, "square root of a negative integer");
  // Invariant: lo^2 <= n < hi^2.
  Integer lo = 0, hi = 1;
  while (hi * hi <= n) hi *= 2;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (mid * mid <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_decimal(const Rational& x, int places) {
  Integer scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const Integer scaled = floor(x * Rational(scale) + Rational(1, 2));
  Integer mag = abs(scaled);
  std::string digits = mag.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return (scaled < 0 ? "-" : "") + digits;
}

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw Error(Errc::Overflow, "integer does not fit in 64 bits");
  return x.get_si();
}

// ---------------------------------------------------------------------------
// Interval
// ---------------------------------------------------------------------------

Interval::Interval() {
  mpfr_init2(lo_, kIntervalBits);
  mpfr_init2(hi_, kIntervalBits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& x) : Interval() {
  mpfr_set_q(lo_, x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, x.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) : Interval() {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::sqrt(const Rational& x) {
  if (x < 0) throw Error(Errc::DomainError, "square root of a negative number");
  Interval r(x);
  mpfr_sqrt(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::cbrt() const {
  Interval r;
  mpfr_cbrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_cbrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

namespace {

// Extreme of the four endpoint products, each rounded in the given direction.
void product_extreme(mpfr_ptr out, mpfr_srcptr alo, mpfr_srcptr ahi, mpfr_srcptr blo, mpfr_srcptr bhi,
                     mpfr_rnd_t rnd, bool want_max) {
  mpfr_t tmp;
  mpfr_init2(tmp, kIntervalBits);
  mpfr_srcptr as[2] = {alo, ahi};
  mpfr_srcptr bs[2] = {blo, bhi};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_mul(tmp, x, y, rnd);
      if (first || (want_max ? mpfr_greater_p(tmp, out) : mpfr_less_p(tmp, out))) mpfr_set(out, tmp, rnd);
      first = false;
    }
  }
  mpfr_clear(tmp);
}

}  // namespace

Interval operator*(const Interval& a, const Interval& b) {
  Interval r;
  product_extreme(r.lo_, a.lo_, a.hi_, b.lo_, b.hi_, MPFR_RNDD, false);
  product_extreme(r.hi_, a.lo_, a.hi_, b.lo_, b.hi_, MPFR_RNDU, true);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) throw Error(Errc::DomainError, "interval division by zero");
  Interval inv;
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

bool Interval::certainly_ge(const Rational& x) const { return mpfr_cmp_q(lo_, x.get_mpq_t()) >= 0; }

bool Interval::certainly_lt(const Rational& x) const { return mpfr_cmp_q(hi_, x.get_mpq_t()) < 0; }

double Interval::lower_minus(const Rational& x) const {
  mpfr_t tmp;
  mpfr_init2(tmp, kIntervalBits);
  mpfr_sub_q(tmp, lo_, x.get_mpq_t(), MPFR_RNDD);
  const double out = mpfr_get_d(tmp, MPFR_RNDD);
  mpfr_clear(tmp);
  return out;
}

Integer Interval::floor_upper() const {
  mpfr_t tmp;
  mpfr_init2(tmp, kIntervalBits);
  mpfr_set(tmp, hi_, MPFR_RNDU);
  mpfr_nextabove(tmp);
  Integer out;
  mpfr_get_z(out.get_mpz_t(), tmp, MPFR_RNDD);
  mpfr_clear(tmp);
  return out;
}

double Interval::mid() const {
  mpfr_t tmp;
  mpfr_init2(tmp, kIntervalBits + 1);
  mpfr_add(tmp, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(tmp, tmp, 1, MPFR_RNDN);
  const double out = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

double Interval::width() const {
  mpfr_t tmp;
  mpfr_init2(tmp, kIntervalBits);
  mpfr_sub(tmp, hi_, lo_, MPFR_RNDU);
  const double out = mpfr_get_d(tmp, MPFR_RNDU);
  mpfr_clear(tmp);
  return out;
}

std::string Interval::to_decimal(int places) const {
  mpfr_t tmp;
  mpfr_init2(tmp, kIntervalBits + 1);
  mpfr_add(tmp, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(tmp, tmp, 1, MPFR_RNDN);
  std::vector<char> buf(128);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", places, tmp);
  mpfr_clear(tmp);
  std::string out(buf.data());
  if (out.rfind("-0.", 0) == 0 && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

}  // namespace gfermat
