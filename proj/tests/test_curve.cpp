#include <doctest.h>

#include "gfermat/curve.hpp"
#include "gfermat/error.hpp"
#include "oracle.hpp"

using namespace gfermat;

namespace {

CurveParams prime_curve(std::uint64_t p, std::uint64_t n, std::uint64_t a, std::uint64_t b) {
  const Field f = make_field(p);
  return make_curve(f, n, f->element(a), f->element(b));
}

Errc error_of(std::uint64_t p, std::uint64_t n, std::uint64_t a, std::uint64_t b) {
  try {
    prime_curve(p, n, a, b);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ParseError;
}

// Calls fn(p, n, a, b) for every valid prime-field curve with p <= p_max.
template <typename Fn>
void each_curve(std::uint64_t p_max, Fn fn) {
  for (std::uint64_t p = 3; p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t n : divisors(p - 1)) {
      if (n < 2) continue;
      for (std::uint64_t a = 1; a < p; ++a) {
        for (std::uint64_t b = 1; b < p; ++b) {
          if (a * b % p != 1) fn(p, n, a, b);
        }
      }
    }
  }
}

}  // namespace

TEST_SUITE("curve") {
  TEST_CASE("make_curve") {
    const CurveParams c = prime_curve(13, 3, 2, 3);
    CHECK(c.genus == 4);
    CHECK(c.k == 4);
    CHECK(error_of(13, 3, 2, 7) == Errc::DegenerateParams);
    CHECK(error_of(13, 3, 0, 7) == Errc::DegenerateParams);
    CHECK(error_of(13, 3, 2, 0) == Errc::DegenerateParams);
    CHECK(error_of(13, 5, 2, 3) == Errc::IncompatibleOrder);
    CHECK(error_of(13, 1, 2, 3) == Errc::DegreeTooSmall);
  }

  TEST_CASE("branches at infinity") {
    CHECK(count_points(prime_curve(11, 5, 10, 7)).branches_at_infinity_rational == 10);
    CHECK(count_points(prime_curve(11, 5, 3, 7)).branches_at_infinity_rational == 0);
  }

  TEST_CASE("counts match direct evaluation for p <= 23") {
    each_curve(23, [](auto p, auto n, auto a, auto b) {
      const CountReport r = count_points(prime_curve(p, n, a, b));
      const auto o = oracle::count(static_cast<std::int64_t>(p), static_cast<std::int64_t>(n),
                                   static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
      const auto inv_a = oracle::inverse(static_cast<std::int64_t>(a), static_cast<std::int64_t>(p));
      const auto n2 = oracle::roots(static_cast<std::int64_t>(p), static_cast<std::int64_t>(n), inv_a);
      const auto n1 = oracle::roots(static_cast<std::int64_t>(p), static_cast<std::int64_t>(n),
                                    static_cast<std::int64_t>(b));
      CAPTURE(p);
      CAPTURE(n);
      CAPTURE(a);
      CAPTURE(b);
      CHECK(static_cast<std::int64_t>(r.affine_total) == o.affine);
      CHECK(static_cast<std::int64_t>(r.off_axes) == o.off_axes);
      CHECK(static_cast<std::int64_t>(r.off_axes_off_diag) == o.off_diag);
      CHECK(static_cast<std::int64_t>(r.n1) == n1);
      CHECK(static_cast<std::int64_t>(r.n2) == n2);
      CHECK(r.model_total == r.affine_total + 2 * r.n2);
      CHECK(r.branches_at_infinity_rational == 2 * r.n2);
      CHECK(r.off_axes_off_diag <= r.off_axes);
      CHECK(r.off_axes <= r.affine_total);
    });
  }

  TEST_CASE("extension-field counts match schoolbook arithmetic") {
    for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {5, 2}, {3, 3}, {7, 2}}) {
      const Field f = make_field(p, m);
      std::vector<std::int64_t> modulus(f->modulus().begin(), f->modulus().end());
      const oracle::Ext ext{static_cast<std::int64_t>(p), modulus};
      const std::uint64_t q = f->q();
      for (std::uint64_t n : divisors(q - 1)) {
        if (n < 2) continue;
        // A few (a, b) per n keep this quick.
        for (std::uint64_t a = 1; a < q; a += 3) {
          for (std::uint64_t b = 1; b < q; b += 4) {
            if (ext.mul(a, b) == 1) continue;
            std::uint64_t want = 0;
            for (std::uint64_t x = 0; x < q; ++x) {
              const std::uint64_t xn = ext.pow(x, n);
              for (std::uint64_t y = 0; y < q; ++y) {
                const std::uint64_t yn = ext.pow(y, n);
                // a x^n y^n + b == x^n + y^n
                want += ext.add(ext.mul(a, ext.mul(xn, yn)), b) == ext.add(xn, yn);
              }
            }
            const CurveParams c = make_curve(f, n, f->element(a), f->element(b));
            CHECK(count_points(c).affine_total == want);
          }
        }
      }
    }
  }

  TEST_CASE("worker partitioning does not change the count") {
    const CurveParams c = prime_curve(61, 6, 5, 17);
    const CountReport one = count_points(c, 1);
    for (unsigned jobs : {2u, 3u, 7u, 64u}) CHECK(count_points(c, jobs) == one);
  }

  TEST_CASE("swap symmetry and parameter swap") {
    each_curve(31, [](auto p, auto n, auto a, auto b) {
      const CurveParams c = prime_curve(p, n, a, b);
      const CountReport r = count_points(c);
      const CountReport s = count_points(prime_curve(p, n, b, a));
      CHECK(r.off_axes == s.off_axes);
      CHECK(r.off_axes_off_diag == s.off_axes_off_diag);
      // Transposed enumeration.
      std::uint64_t transposed = 0;
      for (std::uint64_t y = 0; y < p; ++y) {
        for (std::uint64_t x = 0; x < p; ++x) {
          transposed += evaluate(c, c.ctx().element(y), c.ctx().element(x)).is_zero();
        }
      }
      CHECK(transposed == r.affine_total);
    });
  }

  TEST_CASE("Hasse-Weil sanity") {
    each_curve(29, [](auto p, auto n, auto a, auto b) {
      const CountReport r = count_points(prime_curve(p, n, a, b));
      const auto g = static_cast<long double>((n - 1) * (n - 1));
      const auto hw = static_cast<std::uint64_t>(p + 1 + std::floor(2 * g * std::sqrt(static_cast<long double>(p))));
      CHECK(r.model_total <= hw);
    });
  }

  TEST_CASE("special points") {
    const CurveParams c = prime_curve(11, 5, 10, 1);
    std::vector<std::uint64_t> xs;
    for (const auto& sp : special_points(c)) {
      if (sp.locus == Locus::XAxis) {
        xs.push_back(sp.value.code());
        CHECK(sp.kind == SpecialKind::Inflection);
      }
    }
    CHECK(xs == std::vector<std::uint64_t>{1, 3, 4, 5, 9});

    for (const auto& sp : special_points(prime_curve(13, 3, 2, 2))) CHECK(sp.kind != SpecialKind::Inflection);

    const CurveParams d = prime_curve(13, 3, 1, 3);
    const auto pts = special_points(d);
    REQUIRE(pts.size() == 6);  // no cube root of 3; 1/a = 1 has three
    CHECK(pts[0].locus == Locus::P1);
    CHECK(pts[0].tangent() == "Y = 1");
    CHECK(pts[3].locus == Locus::P2);
    CHECK(pts[3].tangent() == "X = 1");

    each_curve(19, [](auto p, auto n, auto a, auto b) {
      const CurveParams cc = prime_curve(p, n, a, b);
      const CountReport r = count_points(cc);
      std::uint64_t infl = 0, branch = 0;
      for (const auto& sp : special_points(cc)) (sp.kind == SpecialKind::Inflection ? infl : branch)++;
      CHECK(infl == 2 * r.n1);
      CHECK(branch == 2 * r.n2);
    });
  }

  TEST_CASE("inflection tangents") {
    const CurveParams c = prime_curve(13, 3, 2, 1);
    for (const auto& sp : special_points(c)) {
      if (sp.locus == Locus::XAxis) CHECK(sp.tangent() == "X = " + std::to_string(sp.value.code()));
      if (sp.locus == Locus::YAxis) CHECK(sp.tangent() == "Y = " + std::to_string(sp.value.code()));
    }
  }

  TEST_CASE("smoothness") {
    CHECK(smoothness_scan(prime_curve(13, 3, 2, 3)).clean());
    CHECK(smoothness_scan(prime_curve(11, 5, 10, 7)).clean());
    CHECK_NOTHROW(require_smooth(prime_curve(11, 5, 10, 7)));
    each_curve(23, [](auto p, auto n, auto a, auto b) {
      const SmoothnessReport s = smoothness_scan(prime_curve(p, n, a, b));
      CHECK(s.clean());
    });
  }

  TEST_CASE("json report") {
    CountReport r;
    r.affine_total = 7;
    r.n2 = 3;
    r.branches_at_infinity_rational = 6;
    r.model_total = 13;
    CHECK(to_json(r) ==
          "{\"affine_total\":7,\"off_axes\":0,\"off_axes_off_diag\":0,\"n1\":0,\"n2\":3,"
          "\"branches_at_infinity_rational\":6,\"model_total\":13}");
  }

  TEST_CASE("base change keeps the equation") {
    const CurveParams c = prime_curve(7, 3, 2, 3);
    const Field f49 = make_field(7, 2);
    const CurveParams d = base_change(c, f49);
    CHECK(d.n == 3);
    CHECK(d.a.code() == 2);
    CHECK(d.b.code() == 3);
    CHECK(d.k == 16);
    // Every F_7 point stays on the curve.
    for (std::uint64_t x = 0; x < 7; ++x) {
      for (std::uint64_t y = 0; y < 7; ++y) {
        CHECK(evaluate(c, c.ctx().element(x), c.ctx().element(y)).is_zero() ==
              evaluate(d, d.ctx().element(x), d.ctx().element(y)).is_zero());
      }
    }
    CHECK_THROWS_AS(base_change(c, make_field(5, 2)), Error);
  }
}
