#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "gfermat/ffield.hpp"

namespace gfermat {

/// Prefix of a Laurent series in t over a finite field:
///
///   t^offset * (c_0 + c_1 t + ... + c_{len-1} t^{len-1})   (mod t^precision)
///
/// with c_0 != 0 unless the series is zero to the known precision, in which
/// case coeffs is empty and offset == precision. Coefficients between
/// offset + len and precision are known to be zero. kExact marks series
/// (polynomials, monomials) whose precision is unbounded.
class TruncatedSeries {
 public:
  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

  TruncatedSeries(const FieldCtx& ctx, std::int64_t offset, std::vector<FieldElement> coeffs,
                  std::int64_t precision);

  /// c known modulo t^precision.
  static TruncatedSeries constant(const FieldElement& c, std::int64_t precision = kExact);
  /// c t^exponent, exactly.
  static TruncatedSeries monomial(const FieldElement& c, std::int64_t exponent);
  /// Polynomial c_0 + c_1 t + ..., exactly.
  static TruncatedSeries polynomial(const FieldCtx& ctx, std::vector<FieldElement> coeffs);

  const FieldCtx& field() const { return *ctx_; }
  std::int64_t valuation_offset() const { return offset_; }
  std::int64_t precision() const { return precision_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  bool is_exact() const { return precision_ >= kExact; }

  bool is_zero() const { return coeffs_.empty(); }
  /// Valuation if it is determined by the known prefix.
  std::optional<std::int64_t> valuation() const;
  /// Coefficient of t^exponent; throws PrecisionTooLow beyond the known prefix.
  FieldElement coeff(std::int64_t exponent) const;

  /// Forget everything from t^precision on.
  TruncatedSeries truncated(std::int64_t precision) const;
  /// Declare the unknown tail up to t^precision to be zero (used by lifting).
  TruncatedSeries padded(std::int64_t precision) const;
  /// Multiply by t^k.
  TruncatedSeries shifted(std::int64_t k) const;

  TruncatedSeries pow(std::uint64_t e) const;
  /// Multiplicative inverse; throws DomainError on zero and PrecisionTooLow for
  /// an exact non-monomial (its inverse has no finite prefix).
  TruncatedSeries inverse() const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const FieldElement& c, const TruncatedSeries& a);

 private:
  void normalize();

  const FieldCtx* ctx_;
  std::int64_t offset_;
  std::vector<FieldElement> coeffs_;
  std::int64_t precision_;
};

}  // namespace gfermat
