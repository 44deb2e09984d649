#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfermat/curve.hpp"
#include "gfermat/rational.hpp"

namespace gfermat {

/// One evaluated upper bound. `value` is the floor of the real bound and is
/// present only when the bound applies; `reasons` lists unmet hypotheses.
struct BoundReport {
  std::string name;
  std::optional<std::int64_t> value;
  bool applicable = false;
  std::vector<std::string> reasons;
  nlohmann::ordered_json intermediates = nlohmann::ordered_json::object();

  std::string to_json() const;
};

// --- Hasse-Weil -------------------------------------------------------------

/// q + 1 + floor(2 g sqrt(q)), exactly.
BoundReport hasse_weil(std::uint64_t q, std::uint64_t g);
/// Enclosure of the real number q + 1 + 2 g sqrt(q).
Interval hasse_weil_real(std::uint64_t q, std::uint64_t g);

// --- Stohr-Voloch for the degree-s series -----------------------------------

struct SvTerms {
  std::int64_t N = 0;      // projective dimension C(s+2,2) - 3
  std::int64_t delta = 0;  // degree 2n(s-1)
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  Rational gamma;
};

/// Throws InvalidS unless 2 <= s <= n-1.
SvTerms sv_terms(std::uint64_t n, std::uint64_t s);

/// (N-1)(n^2-2n) + delta (q+N)/N - 2 (n1 alpha + n2 beta + n gamma)/N.
Rational sv_bound_exact(std::uint64_t q, std::uint64_t n, std::uint64_t s, std::uint64_t n1, std::uint64_t n2);

/// The bound for one s; applicable iff delta < p (Frobenius classicality is
/// then guaranteed) and n | q-1.
BoundReport sv_bound(const CurveParams& curve, std::uint64_t s);
/// Same, from the raw parameters (n1, n2 supplied by the caller).
BoundReport sv_bound(std::uint64_t p, std::uint64_t q, std::uint64_t n, std::uint64_t s, std::uint64_t n1,
                     std::uint64_t n2);

// --- Minimisation machinery over t = s + 4 ----------------------------------

/// (3t^2 - 23t + 26)/6 + 4 (u + 3)/t, for t >= 6 and u >= 2.
Rational f_u(const Rational& t, const Rational& u);
/// t0 (t0 + 1)(3 t0 - 10)/12 - 3, for t0 >= 6.
Rational k_threshold(std::int64_t t0);

struct VResult {
  Rational value;
  std::int64_t argmin = 0;
};

/// min f_k(t) over integers 6 <= t <= n+3 with t <= k/2 + 5; ties go to the smaller t.
VResult v_of_k(std::int64_t k, std::int64_t n);

/// Unconstrained minimum over integers t >= 6, via the threshold sequence:
/// f_u(6) for u <= k_6, otherwise f_u(t0 + 1) where k_t0 <= u <= k_{t0+1}.
Rational vtilde(const Rational& u);
/// Direct minimum of f_u(t) over t in [6, t_max].
Rational vtilde_brute(const Rational& u, std::int64_t t_max);

struct Lemma34Sides {
  bool below_threshold;    // u <= k_t0
  bool nondecreasing_step; // f_u(t0) <= f_u(t0 + 1)
};
Lemma34Sides lemma34_sides(const Rational& u, std::int64_t t0);
/// u <= k_t0; throws DomainError if the two sides of the biconditional disagree.
bool lemma34_check(const Rational& u, std::int64_t t0);

/// 3 (sqrt2 u)^(2/3) - (103/19) (sqrt2 u)^(1/3) + lambda, enclosed.
Interval w_lambda(const Rational& u, const Rational& lambda);
/// W = W_lambda with lambda = 13/3.
Interval w_function(const Rational& u);

/// n^2 W(k) for curves over F_p with n >= 3 a proper divisor of p-1 and
/// p - 1 <= n ((n+3)(n+4)(3n-1)/12 - 3).
BoundReport w_bound(const CurveParams& curve);
BoundReport w_bound(std::uint64_t p, std::uint64_t n);

/// (k+1)/3.
Rational giulietti_bound(std::int64_t k);

/// W(k)/2, enclosed.
Interval np_real(const Rational& k);
/// floor(W(k)/2) for the chord count, same hypotheses as w_bound; in the window
/// 25 < k < 44 also reports floor(V(k)/2) as "refinement".
BoundReport np_bound(std::uint64_t p, std::uint64_t n);

/// Smallest lambda with W_lambda(k_t0) >= Vtilde(k_t0) for t0 in [6, t0_max]
/// and W_lambda(u) >= Vtilde(u) for integers 2 <= u < k_6, next to the two
/// closed-form candidates 10/3 - (103/19) sqrt2 and (103/19) sqrt2 - 10/3.
struct LambdaDiagnostic {
  double computed = 0;
  std::string attained_at;
  double candidate_as_printed = 0;
  double candidate_sign_flipped = 0;
  double stated = 0;
};
LambdaDiagnostic minimal_lambda(std::int64_t t0_max);

}  // namespace gfermat
