// Acceptance gate. Runs every criterion (or the ones named on the command
// line) and prints one PASS/FAIL line each. Exit status is 1 if any failed.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "gfermat/bounds.hpp"
#include "gfermat/chords.hpp"
#include "gfermat/harness.hpp"
#include "oracle.hpp"

using namespace gfermat;

namespace {

// Tolerances.
constexpr double kFigureTolerance = 1e-6;
constexpr std::uint64_t kScanPMax = 131;
constexpr std::uint64_t kChordPMax = 199;
constexpr std::uint64_t kOrderPMax = 100;
constexpr std::int64_t kCrossoverKMax = 10000;
constexpr std::uint64_t kSymmetryPMax = 61;
constexpr std::uint64_t kRootQMax = 121;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string suite_detail(const SuiteResult& r) {
  std::ostringstream s;
  s << r.checks << " checks, " << r.failures << " failures";
  if (!r.first_failure.empty()) s << "; first: " << r.first_failure;
  return s.str();
}

Outcome soundness_sweep() {
  ScanOptions o;
  o.p_max = kScanPMax;
  o.n_gap = 1;  // n <= p-2
  const ScanResult r = run_scan(o);
  std::uint64_t with_sv = 0, with_w = 0;
  for (const auto& row : r.rows) {
    with_sv += row.sv_best.has_value();
    with_w += row.w_bound.has_value();
  }
  std::ostringstream s;
  s << r.rows.size() << " curves (no subsampling), " << with_sv << " with an SV bound, " << with_w
    << " with the W bound, " << r.violations << " violations";
  return {r.violations == 0 && r.strides.empty() && !r.rows.empty(), s.str()};
}

Outcome chord_identity() {
  const Prop41Sweep sweep = verify_prop41_sweep(kChordPMax, 1);
  std::ostringstream s;
  s << "2n^2 n_P = N_p: " << suite_detail(sweep.identity) << " | with the vertex-tangent term n(n-1)T: "
    << suite_detail(sweep.tangent_corrected) << " | diagonal P failing: " << sweep.diagonal_failures << " of "
    << sweep.diagonal_checked;
  return {sweep.identity.passed(), s.str()};
}

Outcome orders() {
  const SuiteResult r = verify_orders(kOrderPMax);
  return {r.passed(), suite_detail(r)};
}

Outcome multiplicities() {
  const SuiteResult r = verify_multiplicities(kOrderPMax);
  return {r.passed(), suite_detail(r)};
}

Outcome lemmas() {
  const SuiteResult r = verify_lemmas();
  return {r.passed(), suite_detail(r)};
}

Outcome crossover() {
  std::uint64_t checks = 0, failures = 0;
  std::string first;
  auto check = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first = what;
  };
  for (std::int64_t k = 2; k <= kCrossoverKMax; ++k) {
    const Rational third = make_rational(k + 1, 3);
    const Interval np = np_real(Rational(k));
    if (k >= 44) {
      check(np.certainly_lt(third), "np_bound < (k+1)/3 at k=" + std::to_string(k));
    } else {
      check(np.certainly_ge(third - 1) && np.certainly_lt(third + 1),
            "|np_bound - (k+1)/3| <= 1 at k=" + std::to_string(k));
    }
    if (k > 25 && k < 44) {
      const Integer half_v = floor(v_of_k(k, std::max<std::int64_t>(k, 3)).value / 2);
      check(half_v <= floor(third), "floor(V/2) <= floor((k+1)/3) at k=" + std::to_string(k));
    }
  }
  std::ostringstream s;
  s << "k in [2, " << kCrossoverKMax << "]: " << checks << " checks, " << failures << " failures";
  if (!first.empty()) s << "; first: " << first;
  return {failures == 0, s.str()};
}

Outcome figure_grid() {
  const auto grid = figure1_grid(3, 30);
  double worst = 0;
  std::uint64_t positive = 0;
  for (const auto& c : grid) {
    // Caption formula in long double: (p + 1 + 2 g sqrt p) / (2 n^2) - W(k) / 2.
    const long double p = static_cast<long double>(c.p), n = static_cast<long double>(c.n);
    const long double g = (n - 1) * (n - 1);
    const long double caption = (p + 1 + 2 * g * std::sqrt(p)) / (2 * n * n) - oracle::w(static_cast<long double>(c.k)) / 2;
    worst = std::max(worst, static_cast<double>(std::fabs(caption - static_cast<long double>(c.delta))));
    positive += c.delta > 0;
  }
  std::ostringstream s;
  s << grid.size() << " cells, " << positive << " with positive delta, max |difference| " << worst;
  return {!grid.empty() && worst <= kFigureTolerance, s.str()};
}

Outcome curve_properties() {
  std::uint64_t curves = 0, failures = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (failures++ == 0) first = what;
  };
  for (std::uint64_t p = 3; p <= kSymmetryPMax; ++p) {
    if (!is_prime(p)) continue;
    const Field f = make_field(p);
    for (std::uint64_t n : divisors(p - 1)) {
      if (n < 2) continue;
      for (std::uint64_t a = 1; a < p; ++a) {
        for (std::uint64_t b = 1; b < p; ++b) {
          if (a * b % p == 1) continue;
          ++curves;
          const std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " a=" +
                                  std::to_string(a) + " b=" + std::to_string(b);
          const CurveParams c = make_curve(f, n, f->element(a), f->element(b));
          const CountReport r = count_points(c);
          if (b > a) {
            const CountReport s = count_points(make_curve(f, n, f->element(b), f->element(a)));
            if (r.off_axes != s.off_axes) fail("(a,b) <-> (b,a) off_axes at " + tag);
          }
          // Point set invariant under (x, y) -> (y, x): compare the on-curve
          // matrix with its transpose.
          std::vector<char> on(p * p);
          for (std::uint64_t x = 0; x < p; ++x) {
            for (std::uint64_t y = 0; y < p; ++y) on[x * p + y] = evaluate(c, f->element(x), f->element(y)).is_zero();
          }
          std::uint64_t total = 0;
          for (std::uint64_t x = 0; x < p; ++x) {
            for (std::uint64_t y = 0; y < p; ++y) {
              total += on[x * p + y];
              if (on[x * p + y] != on[y * p + x]) fail("swap symmetry at " + tag);
            }
          }
          if (total != r.affine_total) fail("count mismatch at " + tag);
          if (!smoothness_scan(c).clean()) fail("singular point at " + tag);
        }
      }
    }
  }
  std::uint64_t fields = 0;
  for (std::uint64_t p = 2; p <= kRootQMax; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned m = 1;; ++m) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < m; ++i) q *= p;
      if (q > kRootQMax) break;
      const Field f = make_field(p, m);
      ++fields;
      for (std::uint64_t n : divisors(q - 1)) {
        std::uint64_t sum = 0;
        for (std::uint64_t code = 1; code < q; ++code) sum += nth_root_count(*f, f->element(code), n);
        if (sum != q - 1) fail("root count sum at q=" + std::to_string(q) + " n=" + std::to_string(n));
      }
    }
  }
  std::ostringstream s;
  s << curves << " curves, " << fields << " fields, " << failures << " failures";
  if (!first.empty()) s << "; first: " << first;
  return {failures == 0, s.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<std::string, std::function<Outcome()>>> criteria{
      {1, {"soundness sweep p<=131", soundness_sweep}},
      {2, {"chord identity p<=199", chord_identity}},
      {3, {"order sequences p<=100", orders}},
      {4, {"tangent multiplicities", multiplicities}},
      {5, {"lemma machinery", lemmas}},
      {6, {"chord bound crossover", crossover}},
      {7, {"figure grid n=3..30", figure_grid}},
      {8, {"curve-level properties", curve_properties}},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (const auto& [id, _] : criteria) selected.push_back(id);
  }
  bool all = true;
  for (int id : selected) {
    const auto it = criteria.find(id);
    if (it == criteria.end()) {
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = it->second.second();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d %-26s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, it->second.first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
