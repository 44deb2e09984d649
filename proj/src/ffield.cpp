#include "gfermat/ffield.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>

#include "gfermat/error.hpp"

namespace gfermat {

// ---------------------------------------------------------------------------
// Integers
// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d != n / d) hi.push_back(n / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

namespace {

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::int64_t tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - quot * s1;
    s0 = s1;
    s1 = tmp;
  }
  s0 %= static_cast<std::int64_t>(p);
  if (s0 < 0) s0 += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(s0);
}

// Dense polynomials over F_p, constant term first, no trailing zeros
// (the zero polynomial is empty).
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

// Returns (quotient, remainder); divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& d, std::uint64_t p) {
  if (a.size() < d.size()) return {{}, a};
  const std::uint64_t lead_inv = inv_mod_prime(d.back(), p);
  Poly quot(a.size() - d.size() + 1, 0);
  for (std::size_t i = a.size(); i-- >= d.size();) {
    const std::uint64_t c = mul_mod(a[i], lead_inv, p);
    if (c == 0) continue;
    const std::size_t shift = i - (d.size() - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < d.size(); ++j) a[shift + j] = (a[shift + j] + p - mul_mod(c, d[j], p)) % p;
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  while (!b.empty()) {
    Poly r = poly_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  return poly_divmod(poly_mul(a, b, p), f, p).second;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = poly_divmod(base, f, p).second;
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_irreducible(std::span<const std::uint64_t> monic, std::uint64_t p) {
  Poly f(monic.begin(), monic.end());
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  const Poly x{0, 1};
  Poly h = x;
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly g = poly_gcd(f, poly_sub(h, x, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FieldCtx
// ---------------------------------------------------------------------------

FieldCtx::FieldCtx(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < m; ++i) {
    if (q_ > std::numeric_limits<std::int64_t>::max() / p) throw Error(Errc::Overflow, "p^m does not fit in 63 bits");
    q_ *= p;
  }
}

Field make_field(std::uint64_t p, unsigned m, std::optional<std::vector<std::uint64_t>> modulus) {
  if (!is_prime(p)) throw Error(Errc::CompositeCharacteristic, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) throw Error(Errc::Overflow, "characteristic must be below 2^32");
  if (m < 1 || m > FieldCtx::kMaxDegree) throw Error(Errc::InvalidModulus, "extension degree out of range");

  std::vector<std::uint64_t> f;
  if (modulus) {
    f = *modulus;
    if (f.size() != m + 1 || f.back() != 1) throw Error(Errc::InvalidModulus, "modulus must be monic of degree m");
    for (auto c : f) {
      if (c >= p) throw Error(Errc::InvalidModulus, "modulus coefficient not reduced mod p");
    }
    if (m > 1 && !is_irreducible(f, p)) throw Error(Errc::ReducibleModulus, "modulus factors over F_p");
  } else if (m == 1) {
    f = {0, 1};
  } else {
    f.assign(m + 1, 0);
    f[m] = 1;
    // Odometer over (c0, ..., c_{m-1}) in increasing code order.
    while (!is_irreducible(f, p)) {
      std::size_t i = 0;
      while (i < m && ++f[i] == p) f[i++] = 0;
      if (i == m) throw Error(Errc::ReducibleModulus, "no irreducible polynomial found");
    }
  }
  if (m == 1) f = {0, 1};
  return Field(new FieldCtx(p, m, std::move(f)));
}

FieldElement FieldCtx::element(std::uint64_t code) const {
  if (code >= q_) throw Error(Errc::FieldMismatch, "element code out of range");
  return {*this, code};
}

FieldElement FieldCtx::from_integer(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return {*this, static_cast<std::uint64_t>(r)};
}

FieldElement FieldCtx::from_coeffs(std::span<const std::int64_t> coeffs) const {
  Poly f;
  f.reserve(coeffs.size());
  for (auto v : coeffs) {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    f.push_back(static_cast<std::uint64_t>(r));
  }
  trim(f);
  if (m_ > 1) {
    Poly mod = modulus_;
    f = poly_divmod(f, mod, p_).second;
  } else if (f.size() > 1) {
    throw Error(Errc::ParseError, "prime-field elements take a single coefficient");
  }
  return {*this, encode(f)};
}

FieldElement FieldCtx::generator_of_extension() const {
  if (m_ == 1) return from_integer(0);
  return {*this, p_};
}

std::vector<std::uint64_t> FieldCtx::decode(std::uint64_t code) const {
  std::vector<std::uint64_t> c(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = code % p_;
    code /= p_;
  }
  return c;
}

std::uint64_t FieldCtx::encode(std::span<const std::uint64_t> coeffs) const {
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) code = code * p_ + coeffs[i] % p_;
  return code;
}

std::uint64_t FieldCtx::add(std::uint64_t a, std::uint64_t b) const {
  if (m_ == 1) {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t r = 0, scale = 1;
  while (a || b) {
    std::uint64_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    r += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint64_t FieldCtx::neg(std::uint64_t a) const {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint64_t r = 0, scale = 1;
  while (a) {
    const std::uint64_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return r;
}

std::uint64_t FieldCtx::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t FieldCtx::mul(std::uint64_t a, std::uint64_t b) const {
  if (m_ == 1) return mul_mod(a, b, p_);
  std::array<std::uint64_t, kMaxDegree> x{}, y{};
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (unsigned i = 0; i < m_; ++i) {
    x[i] = a % p_;
    a /= p_;
    y[i] = b % p_;
    b /= p_;
  }
  for (unsigned i = 0; i < m_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + mul_mod(x[i], y[j], p_)) % p_;
  }
  // Reduce with the monic modulus from the top down.
  for (unsigned i = 2 * m_ - 2; i >= m_; --i) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    const unsigned shift = i - m_;
    for (unsigned j = 0; j < m_; ++j) prod[shift + j] = (prod[shift + j] + p_ - mul_mod(c, modulus_[j], p_)) % p_;
  }
  return encode(std::span<const std::uint64_t>(prod.data(), m_));
}

std::uint64_t FieldCtx::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t FieldCtx::inv(std::uint64_t a) const {
  if (a == 0) throw Error(Errc::ZeroInput, "inverse of zero");
  if (m_ == 1) return inv_mod_prime(a, p_);
  // Extended Euclid: track s with s*a = r (mod f).
  Poly r0 = modulus_, r1 = decode(a);
  trim(r1);
  Poly s0, s1{1};
  while (!r1.empty()) {
    auto [quot, rem] = poly_divmod(r0, r1, p_);
    Poly s2 = poly_sub(s0, poly_mul(quot, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const std::uint64_t scale = inv_mod_prime(r0[0], p_);
  for (auto& c : s0) c = mul_mod(c, scale, p_);
  s0 = poly_divmod(s0, modulus_, p_).second;
  return encode(s0);
}

std::uint64_t FieldCtx::inv_fermat(std::uint64_t a) const {
  if (a == 0) throw Error(Errc::ZeroInput, "inverse of zero");
  return pow(a, q_ - 2);
}

std::string FieldCtx::format(const FieldElement& x) const {
  if (m_ == 1) return std::to_string(x.code());
  std::string out;
  auto c = decode(x.code());
  for (unsigned i = 0; i < m_; ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

FieldElement FieldCtx::parse(std::string_view text) const {
  std::vector<std::int64_t> coeffs;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || end != tok.data() + tok.size() || tok.empty()) {
      throw Error(Errc::ParseError, "cannot parse field element '" + std::string(text) + "'");
    }
    coeffs.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (coeffs.size() > m_) throw Error(Errc::ParseError, "too many coefficients for the field");
  if (m_ == 1) return from_integer(coeffs[0]);
  return from_coeffs(coeffs);
}

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

FieldElement::FieldElement(const FieldCtx& ctx, std::uint64_t code) : ctx_(&ctx), code_(code) {}

const FieldCtx& FieldElement::field() const {
  if (!ctx_) throw Error(Errc::FieldMismatch, "element has no field");
  return *ctx_;
}

const FieldCtx* FieldElement::same_field(const FieldElement& rhs) const {
  if (!ctx_ || ctx_ != rhs.ctx_) throw Error(Errc::FieldMismatch, "operands live in different fields");
  return ctx_;
}

std::vector<std::uint64_t> FieldElement::coeffs() const { return field().decode(code_); }

FieldElement FieldElement::inv() const { return {field(), field().inv(code_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field(), field().pow(code_, e)}; }

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  code_ = same_field(rhs)->add(code_, rhs.code_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  code_ = same_field(rhs)->sub(code_, rhs.code_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  code_ = same_field(rhs)->mul(code_, rhs.code_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  const FieldCtx* ctx = same_field(rhs);
  code_ = ctx->mul(code_, ctx->inv(rhs.code_));
  return *this;
}

FieldElement FieldElement::operator-() const { return {field(), field().neg(code_)}; }

// ---------------------------------------------------------------------------
// Multiplicative structure
// ---------------------------------------------------------------------------

namespace {

void require_divides(std::uint64_t n, std::uint64_t q_minus_1) {
  if (n == 0 || q_minus_1 % n != 0) {
    throw Error(Errc::IncompatibleOrder, std::to_string(n) + " does not divide " + std::to_string(q_minus_1));
  }
}

}  // namespace

std::uint64_t nth_root_count(const FieldCtx& ctx, const FieldElement& c, std::uint64_t n) {
  if (c.is_zero()) throw Error(Errc::ZeroInput, "nth_root_count of zero");
  require_divides(n, ctx.q() - 1);
  return ctx.pow(c.code(), (ctx.q() - 1) / n) == 1 ? n : 0;
}

std::uint64_t nth_root_count_exhaustive(const FieldCtx& ctx, const FieldElement& c, std::uint64_t n) {
  if (c.is_zero()) throw Error(Errc::ZeroInput, "nth_root_count of zero");
  require_divides(n, ctx.q() - 1);
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < ctx.q(); ++x) {
    if (ctx.pow(x, n) == c.code()) ++count;
  }
  return count;
}

std::uint64_t multiplicative_order(const FieldElement& x) {
  if (x.is_zero()) throw Error(Errc::ZeroInput, "order of zero");
  const FieldCtx& ctx = x.field();
  std::uint64_t order = ctx.q() - 1;
  for (std::uint64_t r : prime_factors(order)) {
    while (order % r == 0 && ctx.pow(x.code(), order / r) == 1) order /= r;
  }
  return order;
}

std::vector<FieldElement> roots_of_unity(const FieldCtx& ctx, std::uint64_t n) {
  require_divides(n, ctx.q() - 1);
  // Find h = c^((q-1)/n) of order exactly n; then mu_n = <h>.
  const auto factors = prime_factors(n);
  for (std::uint64_t c = 1; c < ctx.q(); ++c) {
    const std::uint64_t h = ctx.pow(c, (ctx.q() - 1) / n);
    bool full = true;
    for (std::uint64_t r : factors) {
      if (ctx.pow(h, n / r) == 1) {
        full = false;
        break;
      }
    }
    if (!full) continue;
    std::vector<FieldElement> out;
    out.reserve(n);
    std::uint64_t acc = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      out.push_back(ctx.element(acc));
      acc = ctx.mul(acc, h);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  throw Error(Errc::IncompatibleOrder, "no element of order " + std::to_string(n));
}

FieldElement subgroup_generator(const FieldCtx& ctx, std::uint64_t k) {
  // roots_of_unity is sorted, so the first element of full order is the smallest.
  for (const auto& z : roots_of_unity(ctx, k)) {
    if (multiplicative_order(z) == k) return z;
  }
  throw Error(Errc::IncompatibleOrder, "no element of order " + std::to_string(k));
}

}  // namespace gfermat
