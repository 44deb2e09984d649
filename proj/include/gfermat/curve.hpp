#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gfermat/ffield.hpp"

namespace gfermat {

/// The plane curve a X^n Y^n - X^n - Y^n + b = 0 over F_q, validated.
struct CurveParams {
  Field field;
  std::uint64_t n = 0;
  FieldElement a;
  FieldElement b;
  std::uint64_t genus = 0;  // (n-1)^2
  std::uint64_t k = 0;      // (q-1)/n

  const FieldCtx& ctx() const { return *field; }
};

/// Rejects a = 0, b = 0, ab = 1, n < 2 and n not dividing q-1.
CurveParams make_curve(Field field, std::uint64_t n, const FieldElement& a, const FieldElement& b);

/// g(x, y) = a x^n y^n - x^n - y^n + b.
FieldElement evaluate(const CurveParams& curve, const FieldElement& x, const FieldElement& y);

struct CountReport {
  std::uint64_t affine_total = 0;
  std::uint64_t off_axes = 0;           // xy != 0
  std::uint64_t off_axes_off_diag = 0;  // xy != 0 and x != y
  std::uint64_t n1 = 0;                 // roots of T^n - b
  std::uint64_t n2 = 0;                 // roots of T^n - 1/a
  std::uint64_t branches_at_infinity_rational = 0;
  std::uint64_t model_total = 0;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

/// Flat JSON object with the seven fields above.
std::string to_json(const CountReport& report);

/// Exhaustive scan of F_q x F_q. The rational points of the nonsingular model
/// are the affine points plus one per rational branch over P1 = (1:0:0) and
/// P2 = (0:1:0); a branch is rational iff its tangent direction c (c^n = 1/a)
/// is, which gives 2*n2 extra points. `jobs` splits the outer loop.
CountReport count_points(const CurveParams& curve, unsigned jobs = 1);

enum class SpecialKind { Inflection, InfiniteBranch };

/// Where a special point sits: (xi, 0), (0, xi), or a branch centred at P1 / P2.
enum class Locus { XAxis, YAxis, P1, P2 };

std::string to_string(SpecialKind kind);
std::string to_string(Locus locus);

struct SpecialPoint {
  SpecialKind kind;
  Locus locus;
  /// xi (xi^n = b) for inflections, the tangent direction c (c^n = 1/a) for branches.
  FieldElement value;

  /// Affine equation of the tangent line, e.g. "X = 3".
  std::string tangent() const;
  friend bool operator==(const SpecialPoint&, const SpecialPoint&) = default;
};

/// Rational inflections (xi,0), (0,xi) and rational branch directions at P1, P2,
/// in the order XAxis, YAxis, P1, P2 with values sorted within each group.
std::vector<SpecialPoint> special_points(const CurveParams& curve);

struct SmoothnessReport {
  std::uint64_t points_checked = 0;
  std::vector<std::pair<FieldElement, FieldElement>> violations;

  bool clean() const { return violations.empty(); }
};

/// Checks that (g_X, g_Y) does not vanish at any affine F_q-point of the curve.
SmoothnessReport smoothness_scan(const CurveParams& curve);
/// Throws Errc::SingularAffinePoint when smoothness_scan finds a violation.
void require_smooth(const CurveParams& curve);

/// Same curve viewed over an extension field containing the base field (the
/// base must be prime; the extension's prime must match).
CurveParams base_change(const CurveParams& curve, Field extension);

}  // namespace gfermat
