#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gfermat {

// ---------------------------------------------------------------------------
// Small integer number theory (desk scale: trial division is enough).
// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n);
/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m);

/// Ben-Or irreducibility test for a monic polynomial over F_p, coefficients
/// listed from the constant term up (the last entry must be 1).
bool is_irreducible(std::span<const std::uint64_t> monic, std::uint64_t p);

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

/// An element of F_{p^m} in canonical form. The coefficient vector
/// (c0, ..., c_{m-1}) of the residue class modulo the field modulus is packed
/// as the integer code c0 + c1 p + ... + c_{m-1} p^{m-1}, so structural
/// equality is code equality and the canonical ordering is the code ordering.
///
/// Elements refer to their context by address; the context must outlive them.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldCtx& ctx, std::uint64_t code);

  bool valid() const noexcept { return ctx_ != nullptr; }
  const FieldCtx& field() const;
  std::uint64_t code() const noexcept { return code_; }
  std::vector<std::uint64_t> coeffs() const;

  bool is_zero() const noexcept { return code_ == 0; }
  bool is_one() const noexcept { return code_ == 1; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.ctx_ == b.ctx_ && a.code_ == b.code_;
  }
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept {
    return a.code_ <=> b.code_;
  }

 private:
  const FieldCtx* same_field(const FieldElement& rhs) const;

  const FieldCtx* ctx_ = nullptr;
  std::uint64_t code_ = 0;
};

/// F_{p^m} = F_p[T]/(modulus). Immutable after construction and shareable
/// across threads. Construct through make_field().
class FieldCtx {
 public:
  static constexpr unsigned kMaxDegree = 63;

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  std::uint64_t p() const noexcept { return p_; }
  unsigned m() const noexcept { return m_; }
  std::uint64_t q() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return m_ == 1; }
  /// Monic modulus, constant term first. For m = 1 this is the placeholder T.
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  FieldElement zero() const { return {*this, 0}; }
  FieldElement one() const { return {*this, 1}; }
  FieldElement element(std::uint64_t code) const;
  /// Image of an integer under Z -> F_p -> F_q.
  FieldElement from_integer(std::int64_t v) const;
  /// Reduces an arbitrary coefficient list (constant first) modulo p and the modulus.
  FieldElement from_coeffs(std::span<const std::int64_t> coeffs) const;
  /// The class of T (a root of the modulus). Only meaningful for m > 1.
  FieldElement generator_of_extension() const;

  // Arithmetic on canonical codes. All inputs must be < q.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  /// Inverse by extended Euclid (integers for m = 1, F_p[T] otherwise).
  std::uint64_t inv(std::uint64_t a) const;
  /// Inverse as a^(q-2).
  std::uint64_t inv_fermat(std::uint64_t a) const;

  std::vector<std::uint64_t> decode(std::uint64_t code) const;
  std::uint64_t encode(std::span<const std::uint64_t> coeffs) const;

  /// "c0,c1,...,c(m-1)" for extensions, a decimal residue for prime fields.
  std::string format(const FieldElement& x) const;
  /// Inverse of format(); for m > 1 a lone integer is read as a constant.
  FieldElement parse(std::string_view text) const;

 private:
  FieldCtx(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus);
  friend Field make_field(std::uint64_t, unsigned, std::optional<std::vector<std::uint64_t>>);

  std::uint64_t p_;
  unsigned m_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
};

/// Builds F_{p^m}. Without an explicit modulus the lexicographically smallest
/// monic irreducible of degree m is used, where polynomials are ordered by the
/// code of their non-leading part (c0 + c1 p + ... + c_{m-1} p^{m-1}).
Field make_field(std::uint64_t p, unsigned m = 1,
                 std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

/// #{x in F_q : x^n = c} via the power-residue criterion.
std::uint64_t nth_root_count(const FieldCtx& ctx, const FieldElement& c, std::uint64_t n);
/// Same count by enumerating F_q.
std::uint64_t nth_root_count_exhaustive(const FieldCtx& ctx, const FieldElement& c, std::uint64_t n);

/// Multiplicative order of a nonzero element.
std::uint64_t multiplicative_order(const FieldElement& x);

/// Smallest element (by code) of multiplicative order exactly k.
FieldElement subgroup_generator(const FieldCtx& ctx, std::uint64_t k);

/// All x with x^n = 1, sorted by code. Requires n | q-1.
std::vector<FieldElement> roots_of_unity(const FieldCtx& ctx, std::uint64_t n);

}  // namespace gfermat
