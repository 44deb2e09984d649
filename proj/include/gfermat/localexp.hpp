#pragma once

#include <cstdint>
#include <vector>

#include "gfermat/curve.hpp"
#include "gfermat/series.hpp"

namespace gfermat {

/// Local parametrisation of a place of the curve: x(t), y(t) as Laurent series.
struct LocalCoordinates {
  TruncatedSeries x;
  TruncatedSeries y;
};

/// Hensel lift of the inflection (xi, 0) (locus XAxis, local parameter t = y,
/// returns x(t)) or (0, xi) (locus YAxis, t = x, returns y(t)) to precision L.
TruncatedSeries expand_at_inflection(const CurveParams& curve, const FieldElement& xi, Locus axis,
                                     std::int64_t precision);

/// Branch through P1 (t = 1/x, returns y(t)) or P2 (t = 1/y, returns x(t)) whose
/// tangent direction is c, c^n = 1/a. Solves
///   (a - t^n) Y^n + (b t^n - 1) = 0,
/// the affine equation divided by the n-th power of the coordinate sent to infinity.
TruncatedSeries expand_branch_at_infinity(const CurveParams& curve, const FieldElement& c, Locus center,
                                          std::int64_t precision);

/// Both coordinates at a special point, known at least modulo t^precision
/// (the coordinate that is a pole is exact).
LocalCoordinates local_coordinates(const CurveParams& curve, const SpecialPoint& point, std::int64_t precision);

struct OrderSequence {
  std::vector<std::int64_t> orders;
  std::uint64_t s = 0;
  SpecialKind point_kind = SpecialKind::Inflection;
};

/// Dimension N = C(s+2, 2) - 3 of the linear series spanned by x^i y^j,
/// 0 <= i, j <= s-1, i + j <= s.
std::uint64_t series_dimension(std::uint64_t s);

/// Exponent pairs (i, j) of the coordinate monomials, lexicographic.
std::vector<std::pair<std::uint64_t, std::uint64_t>> coordinate_monomials(std::uint64_t s);

/// Vanishing orders at `point` achieved by linear combinations of the
/// coordinate monomials, read off as the pivot columns of the coefficient
/// matrix of the normalised local expansions. Requires 2 <= s <= n-1 and
/// p > s(n+1).
OrderSequence order_sequence(const CurveParams& curve, const SpecialPoint& point, std::uint64_t s);

/// Pivot columns of a dense matrix over a field (rows x cols, row-major):
/// the column indices at which the rank of the leading columns increases.
std::vector<std::int64_t> pivot_columns(std::vector<std::vector<FieldElement>> rows);

// Closed forms for the order sequences at the special points.
std::vector<std::int64_t> predicted_orders(SpecialKind kind, std::uint64_t n, std::uint64_t s);
std::int64_t predicted_largest_order(SpecialKind kind, std::uint64_t n, std::uint64_t s);
std::int64_t predicted_order_sum(SpecialKind kind, std::uint64_t n, std::uint64_t s);

/// Intersection multiplicity at the given place of the line through it that
/// is tangent to the family: X = value for XAxis, Y = value for YAxis,
/// Y = line_c for P1, X = line_c for P2 (projectively Y = cZ resp. X = cZ).
std::int64_t line_multiplicity(const CurveParams& curve, const SpecialPoint& point, const FieldElement& line_c,
                               std::int64_t precision);

/// All n places of one special family over a field where they are rational.
/// For a prime base field the roots of T^n = c (c = b or 1/a) generate
/// F_p[T]/(T^e - d) with e the order of c^((p-1)/n); the curve is base-changed
/// there. When the family is already rational the curve is returned as is.
struct SplitFamily {
  CurveParams curve;
  std::vector<SpecialPoint> points;
};
SplitFamily split_special_family(const CurveParams& curve, Locus locus);

}  // namespace gfermat
