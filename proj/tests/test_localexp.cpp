#include <doctest.h>

#include "gfermat/error.hpp"
#include "gfermat/localexp.hpp"
#include "oracle.hpp"

using namespace gfermat;

namespace {

CurveParams prime_curve(std::uint64_t p, std::uint64_t n, std::uint64_t a, std::uint64_t b) {
  const Field f = make_field(p);
  return make_curve(f, n, f->element(a), f->element(b));
}

// Every coefficient below `upto` is zero.
bool vanishes_below(const TruncatedSeries& s, std::int64_t upto) {
  if (s.is_zero()) return s.precision() >= upto;
  return *s.valuation() >= upto;
}

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ParseError;
}

}  // namespace

TEST_SUITE("localexp") {
  TEST_CASE("inflection lift solves the equation") {
    const CurveParams c = prime_curve(13, 3, 2, 1);
    const FieldElement xi = c.ctx().one();
    const std::int64_t L = 12;
    const TruncatedSeries x = expand_at_inflection(c, xi, Locus::XAxis, L);
    CHECK(x.precision() >= L);
    const TruncatedSeries t = TruncatedSeries::monomial(c.ctx().one(), 1);
    const TruncatedSeries xn = x.pow(c.n), tn = t.pow(c.n);
    const TruncatedSeries residual =
        c.a * (xn * tn) - xn - tn + TruncatedSeries::constant(c.b);
    CHECK(vanishes_below(residual, L));
  }

  TEST_CASE("inflection expansions have contact order n") {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{13, 3}, {13, 4}, {31, 5}, {43, 7}, {37, 6}}) {
      for (std::uint64_t a : {2ULL, 3ULL, 5ULL}) {
        const CurveParams c = prime_curve(p, n, a, 1);
        for (const auto& sp : special_points(c)) {
          if (sp.kind != SpecialKind::Inflection) continue;
          const auto L = static_cast<std::int64_t>(2 * n + 3);
          const TruncatedSeries x = expand_at_inflection(c, sp.value, sp.locus, L);
          for (std::int64_t e = 1; e < static_cast<std::int64_t>(n); ++e) CHECK(x.coeff(e).is_zero());
          CHECK_FALSE(x.coeff(static_cast<std::int64_t>(n)).is_zero());
          // Stability under more precision.
          const TruncatedSeries longer = expand_at_inflection(c, sp.value, sp.locus, L + 3);
          for (std::int64_t e = 0; e < L; ++e) CHECK(x.coeff(e) == longer.coeff(e));
        }
      }
    }
  }

  TEST_CASE("branch lift solves the equation at infinity") {
    const CurveParams c = prime_curve(13, 3, 1, 2);
    const std::int64_t L = 10;
    for (const auto& sp : special_points(c)) {
      if (sp.kind != SpecialKind::InfiniteBranch) continue;
      const TruncatedSeries y = expand_branch_at_infinity(c, sp.value, sp.locus, L);
      const TruncatedSeries tn = TruncatedSeries::monomial(c.ctx().one(), 3);
      const TruncatedSeries residual = (TruncatedSeries::constant(c.a) - tn) * y.pow(3) + (c.b * tn) -
                                       TruncatedSeries::constant(c.ctx().one());
      CHECK(vanishes_below(residual, L));
      // v(y - c) = n
      const TruncatedSeries d = y - TruncatedSeries::constant(sp.value);
      CHECK(d.valuation() == 3);
    }
  }

  TEST_CASE("tangent multiplicities") {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{13, 3}, {31, 5}, {29, 4}}) {
      // a = 1 makes every branch rational, b = 1 every inflection.
      const CurveParams c = prime_curve(p, n, 1, p - 1);
      const CurveParams d = prime_curve(p, n, 2, 1);
      const auto prec = static_cast<std::int64_t>(n + 4);
      for (const auto& sp : special_points(d)) {
        if (sp.kind == SpecialKind::Inflection) CHECK(line_multiplicity(d, sp, sp.value, prec) == static_cast<std::int64_t>(n));
      }
      const auto pts = special_points(c);
      for (Locus locus : {Locus::P1, Locus::P2}) {
        for (const auto& line : pts) {
          if (line.locus != locus) continue;
          std::int64_t total = 0;
          for (const auto& sp : pts) {
            if (sp.locus != locus) continue;
            const std::int64_t m = line_multiplicity(c, sp, line.value, prec);
            CHECK(m == (sp == line ? static_cast<std::int64_t>(n + 1) : 1));
            total += m;
          }
          CHECK(total == static_cast<std::int64_t>(2 * n));
        }
      }
    }
  }

  TEST_CASE("order sequence examples") {
    const CurveParams infl = prime_curve(31, 5, 3, 1);
    const CurveParams branch = prime_curve(31, 5, 1, 3);
    const auto find = [](const CurveParams& c, SpecialKind kind) {
      for (const auto& sp : special_points(c)) {
        if (sp.kind == kind) return sp;
      }
      FAIL("no special point");
      return SpecialPoint{};
    };
    const SpecialPoint q = find(infl, SpecialKind::Inflection);
    const SpecialPoint eta = find(branch, SpecialKind::InfiniteBranch);
    CHECK(order_sequence(infl, q, 2).orders == std::vector<std::int64_t>{0, 1, 5, 6});
    CHECK(order_sequence(branch, eta, 2).orders == std::vector<std::int64_t>{0, 1, 5, 6});
    CHECK(order_sequence(infl, q, 3).orders == std::vector<std::int64_t>{0, 1, 2, 5, 6, 7, 10, 11});
    CHECK(series_dimension(3) == 7);
    CHECK(order_sequence(infl, q, 3).orders.size() == series_dimension(3) + 1);
  }

  TEST_CASE("closed forms agree with the set definitions") {
    for (std::int64_t n = 3; n <= 14; ++n) {
      for (std::int64_t s = 2; s <= n - 1; ++s) {
        const auto un = static_cast<std::uint64_t>(n), us = static_cast<std::uint64_t>(s);
        const auto in = oracle::inflection_orders(n, s);
        const auto br = oracle::branch_orders(n, s);
        CHECK(predicted_orders(SpecialKind::Inflection, un, us) == in);
        CHECK(predicted_orders(SpecialKind::InfiniteBranch, un, us) == br);
        CHECK(in.size() == series_dimension(us) + 1);
        CHECK(br.size() == series_dimension(us) + 1);
        CHECK(in.back() == 1 + (s - 1) * n);
        CHECK(br.back() == (s - 1) * (n + 1));
        CHECK(predicted_largest_order(SpecialKind::Inflection, un, us) == in.back());
        CHECK(predicted_largest_order(SpecialKind::InfiniteBranch, un, us) == br.back());
        std::int64_t sum_in = 0, sum_br = 0;
        for (auto j : in) sum_in += j;
        for (auto j : br) sum_br += j;
        CHECK(sum_in == s * (n + 1) * (-6 + (s + 1) * (s + 2)) / 6);
        CHECK(sum_br == 2 - s * (n + 1) + (s * (n + 2) - 3) * (s + 1) * (s + 2) / 6);
        CHECK(predicted_order_sum(SpecialKind::Inflection, un, us) == sum_in);
        CHECK(predicted_order_sum(SpecialKind::InfiniteBranch, un, us) == sum_br);
        CHECK(in[0] == 0);
        CHECK(in[1] == 1);
        CHECK(br[0] == 0);
        CHECK(br[1] == 1);
      }
    }
  }

  TEST_CASE("monomials of the series") {
    const auto m = coordinate_monomials(2);
    CHECK(m == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(series_dimension(2) == 3);
    for (std::uint64_t s = 2; s < 10; ++s) CHECK(coordinate_monomials(s).size() == series_dimension(s) + 1);
  }

  TEST_CASE("pivot columns") {
    const Field f = make_field(7);
    auto e = [&](std::uint64_t v) { return f->element(v); };
    // Rows span {1, t^2 + t^3, t^3}: pivots at 0, 2, 3.
    std::vector<std::vector<FieldElement>> rows{
        {e(1), e(0), e(0), e(0), e(0)}, {e(0), e(0), e(1), e(1), e(0)}, {e(2), e(0), e(3), e(5), e(0)}};
    CHECK(pivot_columns(rows) == std::vector<std::int64_t>{0, 2, 3});
    rows.push_back({e(3), e(0), e(1), e(1), e(0)});  // dependent
    CHECK(pivot_columns(rows) == std::vector<std::int64_t>{0, 2, 3});
  }

  TEST_CASE("argument checks") {
    const CurveParams c = prime_curve(13, 3, 2, 1);
    const SpecialPoint q{SpecialKind::Inflection, Locus::XAxis, c.ctx().one()};
    CHECK(error_of([&] { order_sequence(c, q, 1); }) == Errc::InvalidS);
    CHECK(error_of([&] { order_sequence(c, q, 3); }) == Errc::InvalidS);
    const CurveParams d = prime_curve(13, 4, 2, 1);
    const SpecialPoint r{SpecialKind::Inflection, Locus::XAxis, d.ctx().one()};
    CHECK(error_of([&] { order_sequence(d, r, 3); }) == Errc::CharacteristicTooSmall);
    CHECK(error_of([&] { expand_at_inflection(c, c.ctx().element(2), Locus::XAxis, 8); }) == Errc::NotAnInflection);
    CHECK(error_of([&] { expand_branch_at_infinity(c, c.ctx().element(1), Locus::P1, 8); }) ==
          Errc::NotATangentDirection);
  }

  TEST_CASE("splitting a non-rational family") {
    const CurveParams c = prime_curve(13, 3, 1, 2);  // 2 is not a cube mod 13
    const SplitFamily fam = split_special_family(c, Locus::XAxis);
    CHECK(fam.curve.ctx().q() == 13 * 13 * 13);
    REQUIRE(fam.points.size() == 3);
    for (const auto& sp : fam.points) {
      CHECK(sp.value.pow(3) == fam.curve.b);
      CHECK(order_sequence(fam.curve, sp, 2).orders == oracle::inflection_orders(3, 2));
      CHECK(line_multiplicity(fam.curve, sp, sp.value, 8) == 3);
    }
    const SplitFamily rational = split_special_family(c, Locus::P1);
    CHECK(rational.curve.ctx().q() == 13);
    CHECK(rational.points.size() == 3);
  }
}
