#include "gfermat/localexp.hpp"

#include <algorithm>
#include <set>

#include "gfermat/error.hpp"

namespace gfermat {

namespace {

// Polynomial in Y with exact series coefficients: sum_k coeffs[k] Y^k.
using SeriesPoly = std::vector<TruncatedSeries>;

TruncatedSeries horner(const SeriesPoly& poly, const TruncatedSeries& y) {
  TruncatedSeries acc = poly.back();
  for (std::size_t k = poly.size() - 1; k-- > 0;) acc = acc * y + poly[k];
  return acc;
}

SeriesPoly derivative(const SeriesPoly& poly) {
  SeriesPoly d;
  const FieldCtx& f = poly.front().field();
  for (std::size_t k = 1; k < poly.size(); ++k) {
    d.push_back(f.from_integer(static_cast<std::int64_t>(k % f.p())) * poly[k]);
  }
  return d;
}

// Newton iteration y <- y - P(y)/P'(y), doubling the precision each round.
TruncatedSeries hensel_lift(const SeriesPoly& poly, const FieldElement& root, std::int64_t precision) {
  const SeriesPoly dpoly = derivative(poly);
  const TruncatedSeries y0 = TruncatedSeries::constant(root, 1);
  if (!horner(poly, y0).is_zero()) throw Error(Errc::DomainError, "lift start is not a root");
  if (horner(dpoly, y0).is_zero()) throw Error(Errc::DomainError, "lift start is a multiple root");
  TruncatedSeries y = y0;
  std::int64_t prec = 1;
  while (prec < precision) {
    prec = std::min(2 * prec, precision);
    y = y.padded(prec);
    const TruncatedSeries residual = horner(poly, y);
    const TruncatedSeries slope = horner(dpoly, y).truncated(prec);
    y = (y - residual * slope.inverse()).truncated(prec);
  }
  return y;
}

// (a t^n - 1) X^n + (b - t^n): the curve with the coordinate on the axis as the parameter.
SeriesPoly inflection_equation(const CurveParams& c) {
  const FieldCtx& f = c.ctx();
  const auto n = static_cast<std::int64_t>(c.n);
  SeriesPoly poly(c.n + 1, TruncatedSeries::polynomial(f, {}));
  poly[c.n] = TruncatedSeries::monomial(c.a, n) + TruncatedSeries::constant(-f.one());
  poly[0] = TruncatedSeries::constant(c.b) + TruncatedSeries::monomial(-f.one(), n);
  return poly;
}

// (a - t^n) Y^n + (b t^n - 1), t the reciprocal of the coordinate at infinity.
SeriesPoly branch_equation(const CurveParams& c) {
  const FieldCtx& f = c.ctx();
  const auto n = static_cast<std::int64_t>(c.n);
  SeriesPoly poly(c.n + 1, TruncatedSeries::polynomial(f, {}));
  poly[c.n] = TruncatedSeries::constant(c.a) + TruncatedSeries::monomial(-f.one(), n);
  poly[0] = TruncatedSeries::monomial(c.b, n) + TruncatedSeries::constant(-f.one());
  return poly;
}

void require_precision(const CurveParams& curve, std::int64_t precision) {
  if (precision < static_cast<std::int64_t>(curve.n) + 2) {
    throw Error(Errc::PrecisionTooLow, "precision must be at least n + 2");
  }
}

}  // namespace

TruncatedSeries expand_at_inflection(const CurveParams& curve, const FieldElement& xi, Locus axis,
                                     std::int64_t precision) {
  if (axis != Locus::XAxis && axis != Locus::YAxis) throw Error(Errc::NotAnInflection, "locus is not an axis");
  require_precision(curve, precision);
  if (xi.pow(curve.n) != curve.b) throw Error(Errc::NotAnInflection, "xi^n != b");
  return hensel_lift(inflection_equation(curve), xi, precision);
}

TruncatedSeries expand_branch_at_infinity(const CurveParams& curve, const FieldElement& c, Locus center,
                                          std::int64_t precision) {
  if (center != Locus::P1 && center != Locus::P2) {
    throw Error(Errc::NotATangentDirection, "branches are centred at P1 or P2");
  }
  require_precision(curve, precision);
  if (c.is_zero() || (c.pow(curve.n) * curve.a) != curve.ctx().one()) {
    throw Error(Errc::NotATangentDirection, "c^n != 1/a");
  }
  return hensel_lift(branch_equation(curve), c, precision);
}

LocalCoordinates local_coordinates(const CurveParams& curve, const SpecialPoint& point, std::int64_t precision) {
  const FieldElement one = curve.ctx().one();
  const TruncatedSeries t = TruncatedSeries::monomial(one, 1);
  const TruncatedSeries t_inv = TruncatedSeries::monomial(one, -1);
  switch (point.locus) {
    case Locus::XAxis: return {expand_at_inflection(curve, point.value, point.locus, precision), t};
    case Locus::YAxis: return {t, expand_at_inflection(curve, point.value, point.locus, precision)};
    case Locus::P1: return {t_inv, expand_branch_at_infinity(curve, point.value, point.locus, precision)};
    case Locus::P2: return {expand_branch_at_infinity(curve, point.value, point.locus, precision), t_inv};
  }
  throw Error(Errc::DomainError, "unknown locus");
}

std::uint64_t series_dimension(std::uint64_t s) { return (s + 2) * (s + 1) / 2 - 3; }

std::vector<std::pair<std::uint64_t, std::uint64_t>> coordinate_monomials(std::uint64_t s) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t i = 0; i + 1 <= s; ++i) {
    for (std::uint64_t j = 0; j + 1 <= s && i + j <= s; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::vector<std::int64_t> pivot_columns(std::vector<std::vector<FieldElement>> rows) {
  std::vector<std::int64_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const FieldElement inv = rows[rank][col].inv();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const FieldElement factor = rows[r][col] * inv;
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    pivots.push_back(static_cast<std::int64_t>(col));
    ++rank;
  }
  return pivots;
}

OrderSequence order_sequence(const CurveParams& curve, const SpecialPoint& point, std::uint64_t s) {
  if (s < 2 || s + 1 > curve.n) throw Error(Errc::InvalidS, "s must lie in [2, n-1]");
  if (curve.ctx().p() <= s * (curve.n + 1)) {
    throw Error(Errc::CharacteristicTooSmall, "order extraction requires p > s(n+1)");
  }
  const std::uint64_t rows_needed = series_dimension(s) + 1;
  const auto monomials = coordinate_monomials(s);

  auto attempt = [&](std::int64_t width) -> std::vector<std::int64_t> {
    // s extra terms cover the precision lost to poles of x^i y^j.
    const LocalCoordinates lc = local_coordinates(curve, point, width + static_cast<std::int64_t>(s));
    std::vector<TruncatedSeries> series;
    std::int64_t min_val = TruncatedSeries::kExact;
    for (const auto& [i, j] : monomials) {
      series.push_back(lc.x.pow(i) * lc.y.pow(j));
      const auto v = series.back().valuation();
      if (!v) throw Error(Errc::PrecisionTooLow, "monomial vanishes to known precision");
      min_val = std::min(min_val, *v);
    }
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& m : series) {
      const TruncatedSeries normalized = m.shifted(-min_val);
      if (normalized.precision() < width) throw Error(Errc::PrecisionTooLow, "expansion too short");
      std::vector<FieldElement> row;
      row.reserve(static_cast<std::size_t>(width));
      for (std::int64_t e = 0; e < width; ++e) row.push_back(normalized.coeff(e));
      rows.push_back(std::move(row));
    }
    return pivot_columns(std::move(rows));
  };

  const auto width = static_cast<std::int64_t>(s * (curve.n + 1) + 2);
  auto pivots = attempt(width);
  if (pivots.size() < rows_needed) pivots = attempt(2 * width);
  if (pivots.size() < rows_needed) throw Error(Errc::PrecisionTooLow, "fewer pivots than the series dimension");
  return {std::move(pivots), s, point.kind};
}

std::vector<std::int64_t> predicted_orders(SpecialKind kind, std::uint64_t n, std::uint64_t s) {
  std::set<std::int64_t> out;
  const auto sn = static_cast<std::int64_t>(n), ss = static_cast<std::int64_t>(s);
  for (std::int64_t i = 0; i <= ss; ++i) {
    for (std::int64_t j = 0; i + j <= ss; ++j) {
      if (kind == SpecialKind::Inflection) {
        if (i <= ss - 1 && j <= ss - 1) out.insert(i + j * sn);
      } else {
        out.insert(i + j * (sn + 1) - 1);
      }
    }
  }
  if (kind == SpecialKind::InfiniteBranch) {
    out.erase(-1);
    out.erase(ss * (sn + 1) - 1);
  }
  return {out.begin(), out.end()};
}

std::int64_t predicted_largest_order(SpecialKind kind, std::uint64_t n, std::uint64_t s) {
  const auto sn = static_cast<std::int64_t>(n), ss = static_cast<std::int64_t>(s);
  return kind == SpecialKind::Inflection ? 1 + (ss - 1) * sn : (ss - 1) * (sn + 1);
}

std::int64_t predicted_order_sum(SpecialKind kind, std::uint64_t n, std::uint64_t s) {
  const auto sn = static_cast<std::int64_t>(n), ss = static_cast<std::int64_t>(s);
  if (kind == SpecialKind::Inflection) return ss * (sn + 1) * (-6 + (ss + 1) * (ss + 2)) / 6;
  return 2 - ss * (sn + 1) + (ss * (sn + 2) - 3) * (ss + 1) * (ss + 2) / 6;
}

std::int64_t line_multiplicity(const CurveParams& curve, const SpecialPoint& point, const FieldElement& line_c,
                               std::int64_t precision) {
  const LocalCoordinates lc = local_coordinates(curve, point, precision);
  const TruncatedSeries c = TruncatedSeries::constant(line_c);
  TruncatedSeries f = lc.x;
  switch (point.locus) {
    case Locus::XAxis: f = lc.x - c; break;
    case Locus::YAxis: f = lc.y - c; break;
    // In the chart X = 1 the place is (1 : y/x : 1/x), so Y - cZ becomes (y - c)/x.
    case Locus::P1: f = (lc.y - c) * lc.x.inverse(); break;
    case Locus::P2: f = (lc.x - c) * lc.y.inverse(); break;
  }
  const auto v = f.valuation();
  if (!v) throw Error(Errc::PrecisionTooLow, "line meets the branch beyond known precision");
  return *v;
}

SplitFamily split_special_family(const CurveParams& curve, Locus locus) {
  const FieldCtx& base = curve.ctx();
  const bool inflection = locus == Locus::XAxis || locus == Locus::YAxis;
  const FieldElement c = inflection ? curve.b : curve.a.inv();

  const FieldElement zeta = c.pow((base.q() - 1) / curve.n);
  const std::uint64_t e = multiplicative_order(zeta);
  if (e == 1) {
    SplitFamily out{curve, {}};
    for (const auto& sp : special_points(curve)) {
      if (sp.locus == locus) out.points.push_back(sp);
    }
    return out;
  }
  if (!base.is_prime_field()) throw Error(Errc::FieldMismatch, "splitting is implemented over prime fields");

  // A root xi has degree e with xi^e = d in F_p, so T^e - d is its minimal polynomial.
  const std::uint64_t p = base.p();
  for (std::uint64_t d = 1; d < p; ++d) {
    if (pow_mod(d, curve.n / e, p) != c.code()) continue;
    std::vector<std::uint64_t> modulus(e + 1, 0);
    modulus[0] = p - d;
    modulus[e] = 1;
    if (!is_irreducible(modulus, p)) continue;

    Field ext = make_field(p, static_cast<unsigned>(e), modulus);
    const FieldElement xi = ext->generator_of_extension();
    SplitFamily out{base_change(curve, ext), {}};
    const SpecialKind kind = inflection ? SpecialKind::Inflection : SpecialKind::InfiniteBranch;
    for (const auto& mu : roots_of_unity(base, curve.n)) {
      out.points.push_back({kind, locus, xi * out.curve.ctx().element(mu.code())});
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const SpecialPoint& l, const SpecialPoint& r) { return l.value < r.value; });
    return out;
  }
  throw Error(Errc::DomainError, "no Kummer generator found");
}

}  // namespace gfermat
