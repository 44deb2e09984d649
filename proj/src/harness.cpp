#include "gfermat/harness.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "gfermat/bounds.hpp"
#include "gfermat/chords.hpp"
#include "gfermat/error.hpp"
#include "gfermat/localexp.hpp"
#include "gfermat/parallel.hpp"

namespace gfermat {

namespace {

std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }
std::string opt_str(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : ""; }

template <typename T>
nlohmann::ordered_json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

// Bounds that depend on (p, n) and the pair (n1, n2) only.
struct BoundCache {
  std::int64_t hw = 0;
  std::optional<std::int64_t> w;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::pair<std::optional<std::int64_t>, std::optional<std::uint64_t>>>
      sv;
};

std::pair<std::optional<std::int64_t>, std::optional<std::uint64_t>> best_sv(std::uint64_t p, std::uint64_t n,
                                                                               std::uint64_t n1, std::uint64_t n2) {
  std::optional<std::int64_t> best;
  std::optional<std::uint64_t> best_s;
  for (std::uint64_t s = 2; s + 1 <= n; ++s) {
    const BoundReport r = sv_bound(p, p, n, s, n1, n2);
    if (r.applicable && r.value && (!best || *r.value < *best)) {
      best = r.value;
      best_s = s;
    }
  }
  return {best, best_s};
}

struct ScanJob {
  std::uint64_t p, n, a, b;
  std::size_t cache;
};

}  // namespace

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

ScanResult run_scan(const ScanOptions& options) {
  ScanResult result;
  std::vector<ScanJob> jobs;
  std::vector<BoundCache> caches;

  for (std::uint64_t p = std::max<std::uint64_t>(options.p_min, 2); p <= options.p_max; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t n : divisors(p - 1)) {
      if (n < 2 || n + options.n_gap > p - 1) continue;
      if (options.n_filter && n != *options.n_filter) continue;

      std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
      for (std::uint64_t a = 1; a < p; ++a) {
        for (std::uint64_t b = 1; b < p; ++b) {
          if (mul_mod(a, b, p) != 1) pairs.emplace_back(a, b);
        }
      }
      std::uint64_t stride = 1;
      if (options.sample && p > options.sample_above && pairs.size() > *options.sample) {
        stride = (pairs.size() + *options.sample - 1) / *options.sample;
        result.strides.push_back({p, n, stride});
      }

      BoundCache cache;
      cache.hw = *hasse_weil(p, (n - 1) * (n - 1)).value;
      if (const BoundReport w = w_bound(p, n); w.applicable) cache.w = w.value;
      for (std::uint64_t n1 : {std::uint64_t{0}, n}) {
        for (std::uint64_t n2 : {std::uint64_t{0}, n}) cache.sv[{n1, n2}] = best_sv(p, n, n1, n2);
      }
      caches.push_back(std::move(cache));

      for (std::size_t i = 0; i < pairs.size(); i += stride) {
        jobs.push_back({p, n, pairs[i].first, pairs[i].second, caches.size() - 1});
      }
    }
  }

  std::map<std::uint64_t, Field> fields;
  for (const auto& j : jobs) {
    if (!fields.contains(j.p)) fields.emplace(j.p, make_field(j.p));
  }

  result.rows.resize(jobs.size());
  parallel_chunks(jobs.size(), options.jobs, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t i = begin; i < end; ++i) {
      const ScanJob& j = jobs[i];
      const Field& f = fields.at(j.p);
      const CurveParams curve = make_curve(f, j.n, f->element(j.a), f->element(j.b));
      const CountReport count = count_points(curve);
      const BoundCache& cache = caches[j.cache];

      ScanRow& row = result.rows[i];
      row.p = j.p;
      row.n = j.n;
      row.a = j.a;
      row.b = j.b;
      row.k = curve.k;
      row.affine_total = count.affine_total;
      row.model_total = count.model_total;
      row.hw = cache.hw;
      const auto& [sv, sv_s] = cache.sv.at({count.n1, count.n2});
      row.sv_best = sv;
      row.sv_best_s = sv_s;
      row.w_bound = cache.w;

      const auto total = static_cast<std::int64_t>(count.model_total);
      std::vector<std::string> flags{"hw"};
      bool violation = total > row.hw;
      if (sv) {
        flags.emplace_back("sv");
        violation = violation || total > *sv;
      }
      if (cache.w) {
        flags.emplace_back("w");
        violation = violation || total > *cache.w;
      }
      for (std::size_t f_i = 0; f_i < flags.size(); ++f_i) row.applicable_flags += (f_i ? "|" : "") + flags[f_i];
      row.violation = violation;
    }
  });

  std::sort(result.rows.begin(), result.rows.end(), [](const ScanRow& l, const ScanRow& r) {
    return std::tie(l.p, l.m, l.n, l.a, l.b) < std::tie(r.p, r.m, r.n, r.a, r.b);
  });
  result.violations =
      static_cast<std::uint64_t>(std::count_if(result.rows.begin(), result.rows.end(), [](const ScanRow& r) {
        return r.violation;
      }));
  return result;
}

void write_scan(std::ostream& out, const ScanResult& result, const ScanOptions& options, OutputFormat format) {
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json doc;
    doc["p_max"] = options.p_max;
    doc["strides"] = nlohmann::ordered_json::array();
    for (const auto& [p, n, stride] : result.strides) doc["strides"].push_back({{"p", p}, {"n", n}, {"stride", stride}});
    doc["violations"] = result.violations;
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : result.rows) {
      rows.push_back({{"p", r.p},
                      {"m", r.m},
                      {"n", r.n},
                      {"a", r.a},
                      {"b", r.b},
                      {"k", r.k},
                      {"affine_total", r.affine_total},
                      {"model_total", r.model_total},
                      {"hw", r.hw},
                      {"sv_best", opt_json(r.sv_best)},
                      {"sv_best_s", opt_json(r.sv_best_s)},
                      {"w_bound", opt_json(r.w_bound)},
                      {"applicable_flags", r.applicable_flags},
                      {"violation", r.violation}});
    }
    out << doc.dump(2) << '\n';
    return;
  }

  const char sep = format == OutputFormat::Tsv ? '\t' : ',';
  for (const auto& [p, n, stride] : result.strides) {
    out << "# sample p=" << p << " n=" << n << " stride=" << stride << '\n';
  }
  const char* columns[] = {"p",  "m",       "n",         "a",       "b",       "k",
                           "affine_total", "model_total", "hw", "sv_best", "sv_best_s", "w_bound",
                           "applicable_flags", "violation"};
  for (std::size_t i = 0; i < std::size(columns); ++i) out << (i ? std::string(1, sep) : "") << columns[i];
  out << '\n';
  for (const auto& r : result.rows) {
    out << r.p << sep << r.m << sep << r.n << sep << r.a << sep << r.b << sep << r.k << sep << r.affine_total << sep
        << r.model_total << sep << r.hw << sep << opt_str(r.sv_best) << sep << opt_str(r.sv_best_s) << sep
        << opt_str(r.w_bound) << sep << r.applicable_flags << sep << (r.violation ? "true" : "false") << '\n';
  }
}

int cmd_scan(const ScanOptions& options, OutputFormat format, std::ostream& out, std::ostream& err) {
  if (options.p_max < 5) {
    err << "scan: --p-max must be at least 5\n";
    return kExitUsage;
  }
  if (options.sample && *options.sample == 0) {
    err << "scan: --sample must be positive\n";
    return kExitUsage;
  }
  const ScanResult result = run_scan(options);
  write_scan(out, result, options, format);
  if (result.violations > 0) {
    err << "scan: " << result.violations << " violation(s)\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// figure 1
// ---------------------------------------------------------------------------

std::vector<GridCell> figure1_grid(std::uint64_t n_min, std::uint64_t n_max) {
  if (n_min < 3 || n_min > n_max) throw Error(Errc::DomainError, "need 3 <= n_min <= n_max");
  std::vector<GridCell> cells;
  for (std::uint64_t n = n_min; n <= n_max; ++n) {
    const auto sn = static_cast<std::int64_t>(n);
    const Rational k_max = make_rational((sn + 3) * (sn + 4) * (3 * sn - 1), 12) - 3;
    const Rational boundary = 1 + Rational(sn) * k_max;
    const Rational two_n2(2 * sn * sn);
    // k >= 2 is the caption's n < p - 1.
    for (std::int64_t k = 2; Rational(k) <= k_max; ++k) {
      const std::uint64_t p = n * static_cast<std::uint64_t>(k) + 1;
      if (!is_prime(p)) continue;
      const Interval hw = hasse_weil_real(p, (n - 1) * (n - 1)) / Interval(two_n2);
      const Interval d = hw - np_real(Rational(k));
      cells.push_back({n, p, static_cast<std::uint64_t>(k), d.mid(), boundary});
    }
  }
  return cells;
}

int cmd_figure1(std::uint64_t n_min, std::uint64_t n_max, std::ostream& out, std::ostream& err) {
  if (n_min < 3 || n_min > n_max) {
    err << "figure1: need 3 <= --n-min <= --n-max\n";
    return kExitUsage;
  }
  out << "n\tp\tk\tdelta\tboundary_p\n";
  char buf[64];
  for (const auto& c : figure1_grid(n_min, n_max)) {
    std::snprintf(buf, sizeof buf, "%.6f", c.delta);
    std::string delta = buf;
    if (delta == "-0.000000") delta.erase(0, 1);
    out << c.n << '\t' << c.p << '\t' << c.k << '\t' << delta << '\t' << to_decimal(c.p_boundary, 6) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// vtable
// ---------------------------------------------------------------------------

int cmd_vtable(std::int64_t k_min, std::int64_t k_max, std::optional<std::int64_t> n, std::ostream& out,
               std::ostream& err) {
  if (k_min < 2 || k_min > k_max || (n && *n < 3)) {
    err << "vtable: need 2 <= --k-min <= --k-max and --n >= 3\n";
    return kExitUsage;
  }
  out << "k,V(k),Vtilde(k),W(k),giulietti,np_bound,refinement\n";
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    // Without n the only cap on t is t <= k/2 + 5; n = k keeps that cap binding.
    const VResult v = v_of_k(k, n.value_or(std::max<std::int64_t>(k, 3)));
    const Rational u(k);
    out << k << ',' << to_decimal(v.value, 6) << ',' << to_decimal(vtilde(u), 6) << ','
        << w_function(u).to_decimal(6) << ',' << to_decimal(giulietti_bound(k), 6) << ','
        << np_real(u).floor_upper().get_str() << ',';
    if (k > 25 && k < 44) out << floor(v.value / 2).get_str();
    out << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) {
      if (result_.failures++ == 0) result_.first_failure = what;
    }
  }
  SuiteResult result() const { return result_; }

 private:
  SuiteResult result_;
};

std::uint64_t smallest_non_power(std::uint64_t p, std::uint64_t n) {
  for (std::uint64_t c = 2; c < p; ++c) {
    if (pow_mod(c, (p - 1) / n, p) != 1) return c;
  }
  return 0;
}

std::string curve_label(std::uint64_t p, std::uint64_t n, std::uint64_t a, std::uint64_t b) {
  std::ostringstream os;
  os << "p=" << p << " n=" << n << " a=" << a << " b=" << b;
  return os.str();
}

constexpr Locus kLoci[] = {Locus::XAxis, Locus::YAxis, Locus::P1, Locus::P2};

// Calls fn(p, n, a, b, curve) for the representative curves of every admissible
// (p, n) with n in [3, 7] and p <= p_max.
template <typename Fn>
void for_each_representative(std::uint64_t p_max, Fn&& fn) {
  for (std::uint64_t n = 3; n <= 7; ++n) {
    for (std::uint64_t p = n + 1; p <= p_max; p += n) {
      if (!is_prime(p) || p <= 2 * (n + 1)) continue;
      const Field f = make_field(p);
      for (const auto& [a, b] : representative_parameters(p, n)) {
        fn(p, n, a, b, make_curve(f, n, f->element(a), f->element(b)));
      }
    }
  }
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::uint64_t>> representative_parameters(std::uint64_t p, std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  const std::uint64_t g = smallest_non_power(p, n);
  if (g == 0) return out;
  out.emplace_back(g, 1);
  out.emplace_back(1, g);
  return out;
}

SuiteResult verify_orders(std::uint64_t p_max) {
  Tally t("orders");
  for_each_representative(p_max, [&](auto p, auto n, auto a, auto b, const CurveParams& curve) {
    for (Locus locus : kLoci) {
      const SplitFamily family = split_special_family(curve, locus);
      t.check(family.points.size() == n, curve_label(p, n, a, b) + " family size at " + to_string(locus));
      for (std::uint64_t s = 2; s + 1 <= n; ++s) {
        if (p <= s * (n + 1)) continue;
        for (const auto& pt : family.points) {
          const std::string where = curve_label(p, n, a, b) + " s=" + std::to_string(s) + " " + to_string(locus) +
                                    " " + family.curve.ctx().format(pt.value);
          const OrderSequence seq = order_sequence(family.curve, pt, s);
          std::int64_t sum = 0;
          for (auto j : seq.orders) sum += j;
          t.check(seq.orders == predicted_orders(pt.kind, n, s), where + " orders");
          t.check(seq.orders.back() == predicted_largest_order(pt.kind, n, s), where + " largest order");
          t.check(sum == predicted_order_sum(pt.kind, n, s), where + " order sum");
        }
      }
    }
  });
  return t.result();
}

SuiteResult verify_multiplicities(std::uint64_t p_max) {
  Tally t("multiplicities");
  for_each_representative(p_max, [&](auto p, auto n, auto a, auto b, const CurveParams& curve) {
    const auto prec = static_cast<std::int64_t>(n + 4);
    for (Locus locus : kLoci) {
      const SplitFamily family = split_special_family(curve, locus);
      const std::string label = curve_label(p, n, a, b) + " " + to_string(locus);
      for (const auto& pt : family.points) {
        const std::int64_t mult = line_multiplicity(family.curve, pt, pt.value, prec);
        const std::int64_t want = pt.kind == SpecialKind::Inflection ? static_cast<std::int64_t>(n)
                                                                     : static_cast<std::int64_t>(n + 1);
        t.check(mult == want, label + " tangent " + family.curve.ctx().format(pt.value));
      }
      if (locus != Locus::P1 && locus != Locus::P2) continue;
      for (const auto& line : family.points) {
        std::int64_t total = 0;
        for (const auto& pt : family.points) total += line_multiplicity(family.curve, pt, line.value, prec);
        t.check(total == static_cast<std::int64_t>(2 * n), label + " line total " + family.curve.ctx().format(line.value));
      }
    }
  });
  return t.result();
}

Prop41Sweep verify_prop41_sweep(std::uint64_t p_max, unsigned jobs) {
  Tally identity("prop41");
  Tally corrected("prop41-tangent");
  Prop41Sweep out;
  for (std::uint64_t p = 5; p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    const Field f = make_field(p);
    for (std::uint64_t n : divisors(p - 1)) {
      if (n < 2 || (p - 1) / n < 3) continue;
      const Polygon poly = build_polygon(f, (p - 1) / n);
      const ChordSet chords = chord_set(poly);

      std::vector<AffinePoint> points;
      for (std::uint64_t a = 1; a < p; ++a) {
        for (std::uint64_t b = 1; b < p; ++b) {
          if (mul_mod(a, b, p) != 1) points.emplace_back(f->element(a), f->element(b));
        }
      }
      std::vector<Prop41Report> reports(points.size());
      parallel_chunks(points.size(), jobs, [&](std::size_t begin, std::size_t end, unsigned) {
        for (std::size_t i = begin; i < end; ++i) reports[i] = verify_prop41(f, n, poly, chords, points[i]);
      });
      for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& r = reports[i];
        const std::string label = curve_label(p, n, points[i].first.code(), points[i].second.code()) +
                                  " n_P=" + std::to_string(r.n_P) + " N_p=" + std::to_string(r.N_p) +
                                  " tangents=" + std::to_string(r.vertex_tangents);
        identity.check(r.pass, label);
        corrected.check(r.explained, label);
        if (r.diagonal) {
          ++out.diagonal_checked;
          if (!r.pass) ++out.diagonal_failures;
        }
      }
    }
  }
  out.identity = identity.result();
  out.tangent_corrected = corrected.result();
  return out;
}

SuiteResult verify_lemmas() {
  Tally t("lemmas");
  // The thresholds themselves are where the biconditional is tight.
  std::vector<Rational> grid;
  for (std::int64_t u = 2; u <= 10000; ++u) grid.emplace_back(u);
  for (std::int64_t t0 = 6; t0 <= 60; ++t0) grid.push_back(k_threshold(t0));

  for (const Rational& u : grid) {
    for (std::int64_t t0 = 6; t0 <= 60; ++t0) {
      const Lemma34Sides sides = lemma34_sides(u, t0);
      t.check(sides.below_threshold == sides.nondecreasing_step,
              "biconditional u=" + to_string(u) + " t0=" + std::to_string(t0));
    }
  }
  const Rational margin(Integer(1), Integer("100000000000000000000"));
  for (const Rational& u : grid) {
    if (u > 5000) continue;
    const Rational vt = vtilde(u);
    t.check(vt == vtilde_brute(u, 80), "vtilde vs brute force at u=" + to_string(u));
    t.check(w_function(u).certainly_ge(vt - margin), "W >= Vtilde at u=" + to_string(u));
  }
  for (std::int64_t t0 = 6; t0 <= 60; ++t0) {
    const Rational want = make_rational(3 * t0 * t0, 2) - make_rational(37 * t0, 6) + 1;
    t.check(vtilde(k_threshold(t0)) == want, "checkpoint t0=" + std::to_string(t0));
  }
  return t.result();
}

int cmd_verify(const std::string& suite, std::uint64_t p_max, unsigned jobs, std::ostream& out, std::ostream& err) {
  static const std::set<std::string> known{"orders", "multiplicities", "prop41", "lemmas", "all"};
  if (!known.contains(suite)) {
    err << "verify: unknown suite '" << suite << "' (orders|multiplicities|prop41|lemmas|all)\n";
    return kExitUsage;
  }
  const bool all = suite == "all";
  std::vector<SuiteResult> results;
  std::ostringstream out_notes;
  if (all || suite == "orders") results.push_back(verify_orders(p_max));
  if (all || suite == "multiplicities") results.push_back(verify_multiplicities(p_max));
  if (all || suite == "prop41") {
    const Prop41Sweep sweep = verify_prop41_sweep(p_max, jobs);
    results.push_back(sweep.identity);
    results.push_back(sweep.tangent_corrected);
    out_notes << "prop41: " << sweep.diagonal_failures << " of " << sweep.diagonal_checked
              << " diagonal points fail the identity\n";
  }
  if (all || suite == "lemmas") results.push_back(verify_lemmas());

  bool ok = true;
  char line[160];
  std::snprintf(line, sizeof line, "%-16s %10s %10s  %s\n", "suite", "checks", "failures", "verdict");
  out << line;
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-16s %10llu %10llu  %s\n", r.name.c_str(),
                  static_cast<unsigned long long>(r.checks), static_cast<unsigned long long>(r.failures),
                  r.passed() ? "PASS" : "FAIL");
    out << line;
    if (!r.passed()) {
      ok = false;
      if (!r.first_failure.empty()) out << "  first failure: " << r.first_failure << '\n';
    }
  }
  out << out_notes.str();
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace gfermat
