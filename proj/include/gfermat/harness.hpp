#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gfermat/curve.hpp"
#include "gfermat/rational.hpp"

namespace gfermat {

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

enum class OutputFormat { Csv, Json, Tsv };

// --- scan -------------------------------------------------------------------

struct ScanOptions {
  std::uint64_t p_min = 3;
  std::uint64_t p_max = 0;
  std::optional<std::uint64_t> n_filter;
  /// Largest n as an offset from p-1: n <= p-1-n_gap. 0 admits n = p-1.
  std::uint64_t n_gap = 0;
  /// At most this many (a,b) pairs per (p,n), taken with a fixed stride in
  /// (a,b) order. Empty means the full sweep.
  std::optional<std::uint64_t> sample;
  /// Only subsample primes above this value.
  std::uint64_t sample_above = 0;
  unsigned jobs = 1;
};

struct ScanRow {
  std::uint64_t p = 0, m = 1, n = 0, a = 0, b = 0, k = 0;
  std::uint64_t affine_total = 0, model_total = 0;
  std::int64_t hw = 0;
  std::optional<std::int64_t> sv_best;
  std::optional<std::uint64_t> sv_best_s;
  std::optional<std::int64_t> w_bound;
  std::string applicable_flags;  // '|'-joined names of the bounds that applied
  bool violation = false;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  /// (p, n, stride) for every subsampled (p, n).
  std::vector<std::array<std::uint64_t, 3>> strides;
  std::uint64_t violations = 0;
};

/// Every prime p in [p_min, p_max], every n | p-1 with n >= 2, every (a,b)
/// with ab not in {0,1}: the model count against every applicable bound.
/// Rows are sorted by (p, m, n, a, b).
ScanResult run_scan(const ScanOptions& options);
void write_scan(std::ostream& out, const ScanResult& result, const ScanOptions& options, OutputFormat format);
int cmd_scan(const ScanOptions& options, OutputFormat format, std::ostream& out, std::ostream& err);

// --- figure 1 ---------------------------------------------------------------

struct GridCell {
  std::uint64_t n = 0, p = 0, k = 0;
  /// Hasse-Weil chord bound minus the W-based chord bound, via interval enclosures.
  double delta = 0;
  /// 1 + n ((n+3)(n+4)(3n-1)/12 - 3): the largest admissible p for this n.
  Rational p_boundary;
};

/// Cells for n_min <= n <= n_max and primes p with n | p-1 and
/// n < p-1 <= n ((n+3)(n+4)(3n-1)/12 - 3), sorted by (n, p).
std::vector<GridCell> figure1_grid(std::uint64_t n_min, std::uint64_t n_max);
int cmd_figure1(std::uint64_t n_min, std::uint64_t n_max, std::ostream& out, std::ostream& err);

// --- vtable -----------------------------------------------------------------

/// CSV of k, V(k), Vtilde(k), W(k), giulietti, np_bound, refinement. V uses
/// the n-constrained minimum when n is given, Vtilde otherwise.
int cmd_vtable(std::int64_t k_min, std::int64_t k_max, std::optional<std::int64_t> n, std::ostream& out,
               std::ostream& err);

// --- verify -----------------------------------------------------------------

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && checks > 0; }
};

/// The (a, b) choices for one (p, n): b = 1 with a the smallest non-n-th power
/// (n1 = n), and b the smallest non-n-th power with a = 1 (n1 = 0) when n > 1
/// admits non-n-th powers.
std::vector<std::pair<std::uint64_t, std::uint64_t>> representative_parameters(std::uint64_t p, std::uint64_t n);

/// Order sequences at every place over P1, P2 and the axis inflections (split
/// over an extension where needed) against the closed forms, for n in [3, 7],
/// 2 <= s <= n-1, p = 1 mod n, s(n+1) < p <= p_max.
SuiteResult verify_orders(std::uint64_t p_max);
/// Tangent multiplicities at the same places: n at inflections, n+1 for a
/// branch and its tangent, 2n summed over all branches at P1 / P2.
SuiteResult verify_multiplicities(std::uint64_t p_max);
struct Prop41Sweep {
  /// 2 n^2 n_P = N_p over every admissible (p, n, P).
  SuiteResult identity;
  /// N_p = 2 n^2 n_P + n(n-1) T, with T the vertex tangents through P.
  SuiteResult tangent_corrected;
  std::uint64_t diagonal_checked = 0;
  std::uint64_t diagonal_failures = 0;
};

/// All primes p <= p_max, proper n | p-1 with n >= 2 and k >= 3, and all
/// P = (a, b) with ab not in {0, 1}.
Prop41Sweep verify_prop41_sweep(std::uint64_t p_max, unsigned jobs);
/// Lemma biconditional, Vtilde closed form vs brute force, the checkpoint
/// identity and W >= Vtilde.
SuiteResult verify_lemmas();

int cmd_verify(const std::string& suite, std::uint64_t p_max, unsigned jobs, std::ostream& out, std::ostream& err);

}  // namespace gfermat
