#include "gfermat/curve.hpp"

#include <algorithm>
#include <sstream>

#include "gfermat/error.hpp"
#include "gfermat/parallel.hpp"

namespace gfermat {

namespace {

std::vector<FieldElement> nth_roots(const FieldCtx& ctx, const FieldElement& c, std::uint64_t n) {
  std::vector<FieldElement> out;
  for (std::uint64_t x = 0; x < ctx.q(); ++x) {
    if (ctx.pow(x, n) == c.code()) out.push_back(ctx.element(x));
  }
  return out;
}

}  // namespace

CurveParams make_curve(Field field, std::uint64_t n, const FieldElement& a, const FieldElement& b) {
  if (!field) throw Error(Errc::FieldMismatch, "no field");
  if (&a.field() != field.get() || &b.field() != field.get()) {
    throw Error(Errc::FieldMismatch, "curve coefficients must live in the curve's field");
  }
  if (n < 2) throw Error(Errc::DegreeTooSmall, "n must be at least 2");
  const std::uint64_t q = field->q();
  if ((q - 1) % n != 0) {
    throw Error(Errc::IncompatibleOrder, std::to_string(n) + " does not divide q-1 = " + std::to_string(q - 1));
  }
  if (a.is_zero() || b.is_zero() || (a * b).is_one()) {
    throw Error(Errc::DegenerateParams, "need ab not in {0, 1}");
  }
  CurveParams c;
  c.field = std::move(field);
  c.n = n;
  c.a = a;
  c.b = b;
  c.genus = (n - 1) * (n - 1);
  c.k = (q - 1) / n;
  return c;
}

FieldElement evaluate(const CurveParams& curve, const FieldElement& x, const FieldElement& y) {
  const FieldElement xn = x.pow(curve.n), yn = y.pow(curve.n);
  return curve.a * xn * yn - xn - yn + curve.b;
}

std::string to_json(const CountReport& r) {
  std::ostringstream os;
  os << "{\"affine_total\":" << r.affine_total << ",\"off_axes\":" << r.off_axes
     << ",\"off_axes_off_diag\":" << r.off_axes_off_diag << ",\"n1\":" << r.n1 << ",\"n2\":" << r.n2
     << ",\"branches_at_infinity_rational\":" << r.branches_at_infinity_rational
     << ",\"model_total\":" << r.model_total << "}";
  return os.str();
}

CountReport count_points(const CurveParams& curve, unsigned jobs) {
  const FieldCtx& f = curve.ctx();
  const std::uint64_t q = f.q();
  const std::uint64_t a = curve.a.code(), b = curve.b.code();

  std::vector<std::uint64_t> pw(q);
  for (std::uint64_t y = 0; y < q; ++y) pw[y] = f.pow(y, curve.n);

  // g(x,y) = y^n (a x^n - 1) - (x^n - b); per row the pair condition is
  // pw[y] * row_a == row_b.
  struct Partial {
    std::uint64_t total = 0, off_axes = 0, off_diag = 0;
  };
  std::vector<Partial> partials(std::max(1u, jobs));
  parallel_chunks(q, jobs, [&](std::size_t begin, std::size_t end, unsigned slot) {
    Partial acc;
    for (std::uint64_t x = begin; x < end; ++x) {
      const std::uint64_t xn = pw[x];
      const std::uint64_t row_a = f.sub(f.mul(a, xn), 1);
      const std::uint64_t row_b = f.sub(xn, b);
      std::uint64_t row = 0;
      bool at_zero = false, at_diag = false;
      if (row_a != 0) {
        const std::uint64_t target = f.mul(row_b, f.inv(row_a));
        for (std::uint64_t y = 0; y < q; ++y) row += (pw[y] == target);
        at_zero = (pw[0] == target);
        at_diag = (pw[x] == target);
      } else if (row_b == 0) {
        row = q;
        at_zero = at_diag = true;
      }
      acc.total += row;
      if (x != 0) {
        const std::uint64_t off = row - (at_zero ? 1 : 0);
        acc.off_axes += off;
        acc.off_diag += off - (at_diag ? 1 : 0);
      }
    }
    partials[slot] = acc;
  });

  CountReport r;
  for (const auto& part : partials) {
    r.affine_total += part.total;
    r.off_axes += part.off_axes;
    r.off_axes_off_diag += part.off_diag;
  }
  r.n1 = nth_root_count(f, curve.b, curve.n);
  r.n2 = nth_root_count(f, curve.a.inv(), curve.n);
  r.branches_at_infinity_rational = 2 * r.n2;
  r.model_total = r.affine_total + r.branches_at_infinity_rational;
  return r;
}

std::string to_string(SpecialKind kind) {
  return kind == SpecialKind::Inflection ? "inflection" : "infinite-branch";
}

std::string to_string(Locus locus) {
  switch (locus) {
    case Locus::XAxis: return "x-axis";
    case Locus::YAxis: return "y-axis";
    case Locus::P1: return "P1";
    case Locus::P2: return "P2";
  }
  return "?";
}

std::string SpecialPoint::tangent() const {
  const std::string v = value.field().format(value);
  // Inflection (xi,0) has tangent X = xi; a branch at P1 has tangent Y = c.
  switch (locus) {
    case Locus::XAxis: return "X = " + v;
    case Locus::YAxis: return "Y = " + v;
    case Locus::P1: return "Y = " + v;
    case Locus::P2: return "X = " + v;
  }
  return {};
}

std::vector<SpecialPoint> special_points(const CurveParams& curve) {
  const FieldCtx& f = curve.ctx();
  std::vector<SpecialPoint> out;
  const auto xis = nth_roots(f, curve.b, curve.n);
  const auto cs = nth_roots(f, curve.a.inv(), curve.n);
  for (auto locus : {Locus::XAxis, Locus::YAxis}) {
    for (const auto& xi : xis) out.push_back({SpecialKind::Inflection, locus, xi});
  }
  for (auto locus : {Locus::P1, Locus::P2}) {
    for (const auto& c : cs) out.push_back({SpecialKind::InfiniteBranch, locus, c});
  }
  return out;
}

SmoothnessReport smoothness_scan(const CurveParams& curve) {
  const FieldCtx& f = curve.ctx();
  const FieldElement n = f.from_integer(static_cast<std::int64_t>(curve.n % f.p()));
  const FieldElement one = f.one();
  SmoothnessReport report;
  for (std::uint64_t xc = 0; xc < f.q(); ++xc) {
    const FieldElement x = f.element(xc);
    const FieldElement xn = x.pow(curve.n);
    for (std::uint64_t yc = 0; yc < f.q(); ++yc) {
      const FieldElement y = f.element(yc);
      const FieldElement yn = y.pow(curve.n);
      if (!(curve.a * xn * yn - xn - yn + curve.b).is_zero()) continue;
      ++report.points_checked;
      const FieldElement gx = n * x.pow(curve.n - 1) * (curve.a * yn - one);
      const FieldElement gy = n * y.pow(curve.n - 1) * (curve.a * xn - one);
      if (gx.is_zero() && gy.is_zero()) report.violations.emplace_back(x, y);
    }
  }
  return report;
}

void require_smooth(const CurveParams& curve) {
  const auto report = smoothness_scan(curve);
  if (!report.clean()) {
    const auto& [x, y] = report.violations.front();
    throw Error(Errc::SingularAffinePoint,
                "gradient vanishes at (" + x.field().format(x) + ", " + y.field().format(y) + ")");
  }
}

CurveParams base_change(const CurveParams& curve, Field extension) {
  if (!curve.ctx().is_prime_field() || extension->p() != curve.ctx().p()) {
    throw Error(Errc::FieldMismatch, "base change needs a prime base field and a matching characteristic");
  }
  const FieldElement a = extension->element(curve.a.code());
  const FieldElement b = extension->element(curve.b.code());
  return make_curve(std::move(extension), curve.n, a, b);
}

}  // namespace gfermat
