#include "gfermat/series.hpp"

#include <algorithm>

#include "gfermat/error.hpp"

namespace gfermat {

namespace {

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= TruncatedSeries::kExact || b >= TruncatedSeries::kExact) return TruncatedSeries::kExact;
  return std::min(a + b, TruncatedSeries::kExact);
}

}  // namespace

TruncatedSeries::TruncatedSeries(const FieldCtx& ctx, std::int64_t offset, std::vector<FieldElement> coeffs,
                                 std::int64_t precision)
    : ctx_(&ctx), offset_(offset), coeffs_(std::move(coeffs)), precision_(std::min(precision, kExact)) {
  if (offset_ + static_cast<std::int64_t>(coeffs_.size()) > precision_) {
    coeffs_.resize(static_cast<std::size_t>(std::max<std::int64_t>(0, precision_ - offset_)));
  }
  normalize();
}

TruncatedSeries TruncatedSeries::constant(const FieldElement& c, std::int64_t precision) {
  return {c.field(), 0, {c}, precision};
}

TruncatedSeries TruncatedSeries::monomial(const FieldElement& c, std::int64_t exponent) {
  return {c.field(), exponent, {c}, kExact};
}

TruncatedSeries TruncatedSeries::polynomial(const FieldCtx& ctx, std::vector<FieldElement> coeffs) {
  return {ctx, 0, std::move(coeffs), kExact};
}

void TruncatedSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    offset_ = precision_;
    return;
  }
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    offset_ += static_cast<std::int64_t>(lead);
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::int64_t> TruncatedSeries::valuation() const {
  if (is_zero()) return std::nullopt;
  return offset_;
}

FieldElement TruncatedSeries::coeff(std::int64_t exponent) const {
  if (exponent >= precision_) throw Error(Errc::PrecisionTooLow, "coefficient beyond known precision");
  const std::int64_t i = exponent - offset_;
  if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return ctx_->zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

TruncatedSeries TruncatedSeries::truncated(std::int64_t precision) const {
  return {*ctx_, offset_, coeffs_, std::min(precision, precision_)};
}

TruncatedSeries TruncatedSeries::padded(std::int64_t precision) const {
  if (is_zero()) return {*ctx_, 0, {}, precision};
  return {*ctx_, offset_, coeffs_, std::max(precision, precision_)};
}

TruncatedSeries TruncatedSeries::shifted(std::int64_t k) const {
  return {*ctx_, offset_ + k, coeffs_, precision_ >= kExact ? kExact : precision_ + k};
}

TruncatedSeries TruncatedSeries::operator-() const {
  std::vector<FieldElement> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(-x);
  return {*ctx_, offset_, std::move(c), precision_};
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.ctx_ != b.ctx_) throw Error(Errc::FieldMismatch, "series over different fields");
  const std::int64_t prec = std::min(a.precision_, b.precision_);
  const std::int64_t lo = std::min(a.offset_, b.offset_);
  const std::int64_t hi =
      std::min(prec, std::max(a.offset_ + static_cast<std::int64_t>(a.coeffs_.size()),
                              b.offset_ + static_cast<std::int64_t>(b.coeffs_.size())));
  std::vector<FieldElement> c;
  for (std::int64_t e = lo; e < hi; ++e) {
    FieldElement x = a.ctx_->zero();
    const std::int64_t ia = e - a.offset_, ib = e - b.offset_;
    if (ia >= 0 && ia < static_cast<std::int64_t>(a.coeffs_.size())) x += a.coeffs_[static_cast<std::size_t>(ia)];
    if (ib >= 0 && ib < static_cast<std::int64_t>(b.coeffs_.size())) x += b.coeffs_[static_cast<std::size_t>(ib)];
    c.push_back(x);
  }
  if (c.empty()) return {*a.ctx_, prec, {}, prec};
  return {*a.ctx_, lo, std::move(c), prec};
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.ctx_ != b.ctx_) throw Error(Errc::FieldMismatch, "series over different fields");
  // A zero series has valuation at least its precision.
  const std::int64_t va = a.offset_, vb = b.offset_;
  const std::int64_t prec = std::min(sat_add(va, b.precision_), sat_add(vb, a.precision_));
  if (a.is_zero() || b.is_zero()) return {*a.ctx_, prec, {}, prec};
  const std::int64_t offset = va + vb;
  const std::int64_t full = static_cast<std::int64_t>(a.coeffs_.size() + b.coeffs_.size()) - 1;
  const std::int64_t len = std::max<std::int64_t>(0, std::min(full, prec - offset));
  const FieldCtx& f = *a.ctx_;
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(len), 0);
  for (std::size_t i = 0; i < a.coeffs_.size() && static_cast<std::int64_t>(i) < len; ++i) {
    const std::uint64_t ai = a.coeffs_[i].code();
    if (ai == 0) continue;
    const std::size_t jmax = std::min(b.coeffs_.size(), static_cast<std::size_t>(len) - i);
    for (std::size_t j = 0; j < jmax; ++j) acc[i + j] = f.add(acc[i + j], f.mul(ai, b.coeffs_[j].code()));
  }
  std::vector<FieldElement> c;
  c.reserve(acc.size());
  for (auto v : acc) c.push_back(f.element(v));
  return {f, offset, std::move(c), prec};
}

TruncatedSeries operator*(const FieldElement& c, const TruncatedSeries& a) {
  std::vector<FieldElement> out;
  out.reserve(a.coeffs_.size());
  for (const auto& x : a.coeffs_) out.push_back(c * x);
  return {*a.ctx_, a.offset_, std::move(out), a.precision_};
}

TruncatedSeries TruncatedSeries::pow(std::uint64_t e) const {
  TruncatedSeries result = constant(ctx_->one());
  TruncatedSeries base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (is_zero()) throw Error(Errc::DomainError, "inverse of a series that is zero to known precision");
  if (is_exact()) {
    if (coeffs_.size() == 1) return monomial(coeffs_[0].inv(), -offset_);
    throw Error(Errc::PrecisionTooLow, "inverse of an exact non-monomial needs a truncation first");
  }
  // Unit part u = sum c_i t^i with relative precision r; invert term by term.
  const std::int64_t r = precision_ - offset_;
  const FieldElement lead_inv = coeffs_[0].inv();
  std::vector<FieldElement> inv(static_cast<std::size_t>(r), ctx_->zero());
  inv[0] = lead_inv;
  for (std::int64_t k = 1; k < r; ++k) {
    FieldElement s = ctx_->zero();
    for (std::int64_t i = 1; i <= k && i < static_cast<std::int64_t>(coeffs_.size()); ++i) {
      s += coeffs_[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(k - i)];
    }
    inv[static_cast<std::size_t>(k)] = -(s * lead_inv);
  }
  return {*ctx_, -offset_, std::move(inv), -offset_ + r};
}

}  // namespace gfermat
