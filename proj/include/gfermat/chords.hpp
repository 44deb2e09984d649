#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gfermat/curve.hpp"

namespace gfermat {

using AffinePoint = std::pair<FieldElement, FieldElement>;

/// Affinely regular k-gon on the hyperbola XY = 1 over F_p with vertices
/// (g^i, g^-i), i = 0..k-1, for g of multiplicative order k.
struct Polygon {
  Field field;
  std::uint64_t k = 0;
  FieldElement gen;
  std::vector<AffinePoint> vertices;
};

/// Line u x + v y + w = 0 with first nonzero coefficient equal to 1.
struct Line {
  FieldElement u, v, w;

  bool contains(const AffinePoint& pt) const;
  friend bool operator==(const Line&, const Line&) = default;
  friend bool operator<(const Line& l, const Line& r) {
    return std::tie(l.u, l.v, l.w) < std::tie(r.u, r.v, r.w);
  }
};

Line line_through(const AffinePoint& a, const AffinePoint& b);

/// All C(k,2) chords, canonicalised and sorted.
struct ChordSet {
  std::vector<Line> chords;
};

/// Uses subgroup_generator for the vertex generator.
Polygon build_polygon(Field field, std::uint64_t k);
/// Polygon from a caller-chosen generator of order k.
Polygon polygon_from_generator(Field field, const FieldElement& gen);

ChordSet chord_set(const Polygon& poly);

bool is_vertex(const Polygon& poly, const AffinePoint& pt);
/// Number of vertices (u, 1/u) with P on the tangent X + u^2 Y = 2u.
std::uint64_t tangents_through(const Polygon& poly, const AffinePoint& pt);

/// Number of chords through a non-vertex point.
std::uint64_t chords_through(const Polygon& poly, const AffinePoint& pt);
std::uint64_t chords_through(const Polygon& poly, const ChordSet& chords, const AffinePoint& pt);

/// #{(x,y) in F_p^2 on the curve : xy != 0, x != y}.
std::uint64_t restricted_count(const CurveParams& curve);

struct Prop41Report {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t n_P = 0;
  std::uint64_t N_p = 0;
  /// Vertices whose tangent to XY = 1 passes through P. Each one adds
  /// n(n-1) points with x^n = y^n, x != y to N_p that no chord accounts for.
  std::uint64_t vertex_tangents = 0;
  bool diagonal = false;  // P on X = Y
  bool pass = false;      // 2 n^2 n_P == N_p
  bool explained = false; // 2 n^2 n_P + n(n-1) vertex_tangents == N_p

  std::string to_json() const;
};

/// Chord count through P = (a, b) for the (p-1)/n-gon against the restricted
/// point count of the curve with parameters (a, b).
Prop41Report verify_prop41(std::uint64_t p, std::uint64_t n, std::int64_t a, std::int64_t b);
/// Same with prebuilt field, polygon and chord set (for sweeps).
Prop41Report verify_prop41(const Field& field, std::uint64_t n, const Polygon& poly, const ChordSet& chords,
                           const AffinePoint& pt);

}  // namespace gfermat
