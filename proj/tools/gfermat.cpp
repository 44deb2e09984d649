// gfermat: point counts, bounds, order sequences and chord counts for the
// curves a X^n Y^n - X^n - Y^n + b = 0 over finite fields.
//
// Exit codes: 0 success / all checks pass, 1 a verification failed,
// 2 usage or argument error.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfermat/bounds.hpp"
#include "gfermat/chords.hpp"
#include "gfermat/curve.hpp"
#include "gfermat/error.hpp"
#include "gfermat/ffield.hpp"
#include "gfermat/harness.hpp"
#include "gfermat/localexp.hpp"

namespace {

using namespace gfermat;

struct CurveArgs {
  std::uint64_t p = 0;
  unsigned m = 1;
  std::uint64_t n = 0;
  std::string a, b;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p", p, "characteristic")->required();
    cmd->add_option("--m", m, "extension degree")->check(CLI::Range(1u, FieldCtx::kMaxDegree));
    cmd->add_option("--n", n, "degree parameter")->required();
    cmd->add_option("--a", a, "coefficient a (residue, or c0,c1,... over an extension)")->required();
    cmd->add_option("--b", b, "coefficient b")->required();
  }

  CurveParams build() const {
    const Field f = make_field(p, m);
    return make_curve(f, n, f->parse(a), f->parse(b));
  }
};

int run_count(const CurveArgs& args, OutputFormat format, unsigned jobs) {
  const CurveParams curve = args.build();
  const CountReport r = count_points(curve, jobs);
  if (format == OutputFormat::Json) {
    std::cout << to_json(r) << '\n';
    return kExitOk;
  }
  const char sep = format == OutputFormat::Tsv ? '\t' : ',';
  std::cout << "affine_total" << sep << "off_axes" << sep << "off_axes_off_diag" << sep << "n1" << sep << "n2" << sep
            << "branches_at_infinity_rational" << sep << "model_total" << '\n'
            << r.affine_total << sep << r.off_axes << sep << r.off_axes_off_diag << sep << r.n1 << sep << r.n2 << sep
            << r.branches_at_infinity_rational << sep << r.model_total << '\n';
  return kExitOk;
}

int run_bounds(const CurveArgs& args) {
  const CurveParams curve = args.build();
  std::cout << hasse_weil(curve.ctx().q(), curve.genus).to_json() << '\n';
  for (std::uint64_t s = 2; s + 1 <= curve.n; ++s) std::cout << sv_bound(curve, s).to_json() << '\n';
  std::cout << w_bound(curve).to_json() << '\n';
  if (curve.ctx().is_prime_field()) std::cout << np_bound(curve.ctx().p(), curve.n).to_json() << '\n';
  return kExitOk;
}

int run_orders(const CurveArgs& args, std::uint64_t s, Locus locus) {
  const SplitFamily family = split_special_family(args.build(), locus);
  bool all_match = true;
  for (const auto& pt : family.points) {
    const OrderSequence seq = order_sequence(family.curve, pt, s);
    const auto predicted = predicted_orders(pt.kind, family.curve.n, s);
    const bool match = seq.orders == predicted;
    all_match = all_match && match;

    std::cout << to_string(locus) << ' ' << family.curve.ctx().format(pt.value) << ':';
    for (auto j : seq.orders) std::cout << ' ' << j;
    std::cout << " | predicted:";
    for (auto j : predicted) std::cout << ' ' << j;
    std::cout << " | " << (match ? "MATCH" : "MISMATCH") << '\n';
  }
  return all_match ? kExitOk : kExitVerificationFailed;
}

int run_chords(std::uint64_t p, std::uint64_t n, std::int64_t px, std::int64_t py) {
  const Prop41Report r = verify_prop41(p, n, px, py);
  std::cout << r.to_json() << '\n';
  return r.pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Fermat curves over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();

  OutputFormat format = OutputFormat::Json;
  bool format_given = false;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  const std::map<std::string, OutputFormat> formats{
      {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}, {"tsv", OutputFormat::Tsv}};
  app.add_option("--format", format, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->each([&](const std::string&) { format_given = true; });
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", seed, "reserved; all output is deterministic");

  CurveArgs count_args;
  auto* count = app.add_subcommand("count", "exhaustive point count");
  count_args.attach(count);

  CurveArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "every bound for one curve, one JSON report per line");
  bounds_args.attach(bounds);

  CurveArgs orders_args;
  std::uint64_t orders_s = 2;
  Locus locus = Locus::XAxis;
  const std::map<std::string, Locus> loci{
      {"x-axis", Locus::XAxis}, {"y-axis", Locus::YAxis}, {"p1", Locus::P1}, {"p2", Locus::P2}};
  auto* orders = app.add_subcommand("orders", "order sequences at one family of special places");
  orders_args.attach(orders);
  orders->add_option("--s", orders_s, "degree of the linear series")->required();
  orders->add_option("--locus", locus, "x-axis, y-axis, p1 or p2")
      ->transform(CLI::CheckedTransformer(loci, CLI::ignore_case));

  std::uint64_t chord_p = 0, chord_n = 0;
  std::int64_t px = 0, py = 0;
  auto* chords = app.add_subcommand("chords", "chords of the polygon through a point vs the point count");
  chords->add_option("--p", chord_p)->required();
  chords->add_option("--n", chord_n)->required();
  chords->add_option("--px", px)->required();
  chords->add_option("--py", py)->required();

  ScanOptions scan_opts;
  std::uint64_t scan_n = 0, scan_sample = 0;
  auto* scan = app.add_subcommand("scan", "bound soundness sweep, one row per curve");
  scan->add_option("--p-max", scan_opts.p_max)->required();
  scan->add_option("--n", scan_n, "only this n");
  scan->add_option("--sample", scan_sample, "at most this many (a,b) per (p,n), by fixed stride");
  scan->add_option("--sample-above", scan_opts.sample_above, "subsample only primes above this");
  scan->add_option("--n-gap", scan_opts.n_gap, "require n <= p-1-gap");

  std::uint64_t n_min = 3, n_max = 30;
  auto* figure = app.add_subcommand("figure1", "difference grid between the two chord bounds (TSV)");
  figure->add_option("--n-min", n_min);
  figure->add_option("--n-max", n_max);

  std::int64_t k_min = 2, k_max = 100, vt_n = 0;
  auto* vtable = app.add_subcommand("vtable", "V, Vtilde, W and the chord bounds per k (CSV)");
  vtable->add_option("--k-min", k_min);
  vtable->add_option("--k-max", k_max);
  vtable->add_option("--n", vt_n, "cap t at n+3");

  std::string suite = "all";
  std::uint64_t verify_p_max = 0;
  auto* verify = app.add_subcommand("verify", "property suites with a pass/fail table");
  verify->add_option("suite", suite, "orders, multiplicities, prop41, lemmas or all");
  verify->add_option("--p-max", verify_p_max, "largest prime (default 100 for orders, 199 for prop41)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count) return run_count(count_args, format, jobs);
    if (*bounds) return run_bounds(bounds_args);
    if (*orders) return run_orders(orders_args, orders_s, locus);
    if (*chords) return run_chords(chord_p, chord_n, px, py);
    if (*scan) {
      if (scan_n) scan_opts.n_filter = scan_n;
      if (scan_sample) scan_opts.sample = scan_sample;
      scan_opts.jobs = jobs;
      return cmd_scan(scan_opts, format_given ? format : OutputFormat::Csv, std::cout, std::cerr);
    }
    if (*figure) return cmd_figure1(n_min, n_max, std::cout, std::cerr);
    if (*vtable) {
      return cmd_vtable(k_min, k_max, vt_n ? std::optional<std::int64_t>(vt_n) : std::nullopt, std::cout,
                        std::cerr);
    }
    if (*verify) {
      std::uint64_t p_max = verify_p_max;
      if (p_max == 0) p_max = suite == "prop41" ? 199 : 100;
      return cmd_verify(suite, p_max, jobs, std::cout, std::cerr);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
