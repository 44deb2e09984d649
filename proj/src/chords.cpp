#include "gfermat/chords.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "gfermat/error.hpp"

namespace gfermat {

bool Line::contains(const AffinePoint& pt) const { return (u * pt.first + v * pt.second + w).is_zero(); }

Line line_through(const AffinePoint& a, const AffinePoint& b) {
  if (a == b) throw Error(Errc::DomainError, "a line needs two distinct points");
  FieldElement u = b.second - a.second;
  FieldElement v = a.first - b.first;
  FieldElement w = -(u * a.first + v * a.second);
  const FieldElement lead = !u.is_zero() ? u : v;
  const FieldElement scale = lead.inv();
  return {u * scale, v * scale, w * scale};
}

Polygon polygon_from_generator(Field field, const FieldElement& gen) {
  if (!field->is_prime_field()) throw Error(Errc::FieldMismatch, "polygons live over prime fields");
  const std::uint64_t k = multiplicative_order(gen);
  if (k < 3) throw Error(Errc::DomainError, "a polygon needs at least 3 vertices");
  Polygon poly;
  poly.field = std::move(field);
  poly.k = k;
  poly.gen = gen;
  const FieldElement gen_inv = gen.inv();
  FieldElement x = poly.field->one(), y = poly.field->one();
  for (std::uint64_t i = 0; i < k; ++i) {
    poly.vertices.emplace_back(x, y);
    x *= gen;
    y *= gen_inv;
  }
  // Nondegeneracy: no three vertices on a line.
  const auto& vs = poly.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const FieldElement dx = vs[j].first - vs[i].first, dy = vs[j].second - vs[i].second;
      for (std::size_t l = j + 1; l < vs.size(); ++l) {
        if ((dx * (vs[l].second - vs[i].second) - dy * (vs[l].first - vs[i].first)).is_zero()) {
          throw Error(Errc::DegeneratePolygon, "three collinear vertices");
        }
      }
    }
  }
  return poly;
}

Polygon build_polygon(Field field, std::uint64_t k) {
  if (!field->is_prime_field()) throw Error(Errc::FieldMismatch, "polygons live over prime fields");
  if (k == 0 || (field->q() - 1) % k != 0) {
    throw Error(Errc::IncompatibleOrder, std::to_string(k) + " does not divide p-1");
  }
  if (k < 3) throw Error(Errc::DomainError, "a polygon needs at least 3 vertices");
  const FieldElement gen = subgroup_generator(*field, k);
  return polygon_from_generator(std::move(field), gen);
}

ChordSet chord_set(const Polygon& poly) {
  ChordSet out;
  const auto& vs = poly.vertices;
  out.chords.reserve(vs.size() * (vs.size() - 1) / 2);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) out.chords.push_back(line_through(vs[i], vs[j]));
  }
  std::sort(out.chords.begin(), out.chords.end());
  return out;
}

bool is_vertex(const Polygon& poly, const AffinePoint& pt) {
  return std::find(poly.vertices.begin(), poly.vertices.end(), pt) != poly.vertices.end();
}

std::uint64_t tangents_through(const Polygon& poly, const AffinePoint& pt) {
  const FieldElement two = pt.first.field().from_integer(2);
  return static_cast<std::uint64_t>(std::count_if(poly.vertices.begin(), poly.vertices.end(), [&](const AffinePoint& v) {
    return pt.first + v.first * v.first * pt.second == two * v.first;
  }));
}

std::uint64_t chords_through(const Polygon& poly, const ChordSet& chords, const AffinePoint& pt) {
  if (is_vertex(poly, pt)) throw Error(Errc::VertexQuery, "query point is a vertex");
  return static_cast<std::uint64_t>(
      std::count_if(chords.chords.begin(), chords.chords.end(), [&](const Line& l) { return l.contains(pt); }));
}

std::uint64_t chords_through(const Polygon& poly, const AffinePoint& pt) {
  return chords_through(poly, chord_set(poly), pt);
}

std::uint64_t restricted_count(const CurveParams& curve) {
  if (!curve.ctx().is_prime_field()) throw Error(Errc::FieldMismatch, "restricted count is over prime fields");
  return count_points(curve).off_axes_off_diag;
}

std::string Prop41Report::to_json() const {
  std::ostringstream os;
  os << "{\"p\":" << p << ",\"n\":" << n << ",\"k\":" << k << ",\"n_P\":" << n_P << ",\"N_p\":" << N_p
     << ",\"two_n2_nP\":" << 2 * n * n * n_P << ",\"vertex_tangents\":" << vertex_tangents
     << ",\"diagonal\":" << (diagonal ? "true" : "false") << ",\"verdict\":\"" << (pass ? "PASS" : "FAIL")
     << "\",\"tangent_corrected\":\"" << (explained ? "PASS" : "FAIL") << "\"}";
  return os.str();
}

Prop41Report verify_prop41(const Field& field, std::uint64_t n, const Polygon& poly, const ChordSet& chords,
                           const AffinePoint& pt) {
  Prop41Report r;
  r.p = field->p();
  r.n = n;
  r.k = poly.k;
  r.n_P = chords_through(poly, chords, pt);
  r.N_p = restricted_count(make_curve(field, n, pt.first, pt.second));
  r.vertex_tangents = tangents_through(poly, pt);
  r.diagonal = pt.first == pt.second;
  r.pass = 2 * n * n * r.n_P == r.N_p;
  r.explained = 2 * n * n * r.n_P + n * (n - 1) * r.vertex_tangents == r.N_p;
  return r;
}

Prop41Report verify_prop41(std::uint64_t p, std::uint64_t n, std::int64_t a, std::int64_t b) {
  Field field = make_field(p);
  if (n < 2 || (p - 1) % n != 0 || n == p - 1) {
    throw Error(Errc::IncompatibleOrder, "n must be a proper divisor of p-1 with n >= 2");
  }
  const Polygon poly = build_polygon(field, (p - 1) / n);
  const AffinePoint pt{field->from_integer(a), field->from_integer(b)};
  return verify_prop41(field, n, poly, chord_set(poly), pt);
}

}  // namespace gfermat
