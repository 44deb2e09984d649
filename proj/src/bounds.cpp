#include "gfermat/bounds.hpp"

#include "gfermat/error.hpp"

namespace gfermat {

namespace {

nlohmann::ordered_json rational_json(const Rational& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return to_string(x);
}

Rational rat(std::int64_t v) { return make_rational(v); }

// n ((n+3)(n+4)(3n-1)/12 - 3): the largest admissible p - 1.
Rational threshold_for(std::uint64_t n) {
  return rat(static_cast<std::int64_t>(n)) * k_threshold(static_cast<std::int64_t>(n) + 3);
}

// Hypotheses shared by the W bound and the chord bound.
std::vector<std::string> w_hypotheses(std::uint64_t p, std::uint64_t n) {
  std::vector<std::string> reasons;
  if (!is_prime(p)) reasons.emplace_back("NonPrimeField");
  if (n < 3) reasons.emplace_back("DegreeTooSmall");
  if (n == 0 || (p - 1) % n != 0) {
    reasons.emplace_back("IncompatibleOrder");
  } else if (n == p - 1) {
    reasons.emplace_back("NotProperDivisor");
  }
  if (n >= 3 && Rational(Integer(std::to_string(p - 1))) > threshold_for(n)) reasons.emplace_back("ThresholdExceeded");
  return reasons;
}

}  // namespace

std::string BoundReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  if (value) {
    j["value"] = *value;
  } else {
    j["value"] = nullptr;
  }
  j["applicable"] = applicable;
  j["reasons"] = reasons;
  j["intermediates"] = intermediates;
  return j.dump();
}

// ---------------------------------------------------------------------------

BoundReport hasse_weil(std::uint64_t q, std::uint64_t g) {
  const Integer qq(std::to_string(q)), gg(std::to_string(g));
  // floor(2 g sqrt(q)) = floor(sqrt(4 g^2 q)).
  const Integer root = isqrt_floor(4 * gg * gg * qq);
  BoundReport r;
  r.name = "hasse_weil";
  r.applicable = true;
  r.value = to_int64(qq + 1 + root);
  r.intermediates["q"] = q;
  r.intermediates["g"] = g;
  r.intermediates["floor_2g_sqrt_q"] = to_int64(root);
  return r;
}

Interval hasse_weil_real(std::uint64_t q, std::uint64_t g) {
  const Rational qq(Integer(std::to_string(q)));
  const Rational twice_g(Integer(std::to_string(2 * g)));
  return Interval(qq + 1) + Interval(twice_g) * Interval::sqrt(qq);
}

// ---------------------------------------------------------------------------

SvTerms sv_terms(std::uint64_t n, std::uint64_t s) {
  if (s < 2 || s + 1 > n) throw Error(Errc::InvalidS, "s must lie in [2, n-1]");
  const auto nn = static_cast<std::int64_t>(n), ss = static_cast<std::int64_t>(s);
  SvTerms t;
  t.N = (ss + 2) * (ss + 1) / 2 - 3;
  t.delta = 2 * nn * (ss - 1);
  t.alpha = 1 + (ss - 1) * nn - t.N;
  t.beta = (ss - 1) * (nn + 1) - t.N;
  t.gamma = rat(2 * (nn + 1) - ss * (4 * nn + 3) - t.N * (t.N - 1)) +
            rat(ss * (2 * nn + 3) - 3) * make_rational(t.N + 3, 3);
  return t;
}

Rational sv_bound_exact(std::uint64_t q, std::uint64_t n, std::uint64_t s, std::uint64_t n1, std::uint64_t n2) {
  const SvTerms t = sv_terms(n, s);
  const Rational N = rat(t.N);
  const Rational nn = rat(static_cast<std::int64_t>(n));
  const Rational qq(Integer(std::to_string(q)));
  return (N - 1) * (nn * nn - 2 * nn) + rat(t.delta) * (qq + N) / N -
         2 * (rat(static_cast<std::int64_t>(n1)) * t.alpha + rat(static_cast<std::int64_t>(n2)) * t.beta +
              nn * t.gamma) /
             N;
}

BoundReport sv_bound(std::uint64_t p, std::uint64_t q, std::uint64_t n, std::uint64_t s, std::uint64_t n1,
                     std::uint64_t n2) {
  const SvTerms t = sv_terms(n, s);
  BoundReport r;
  r.name = "stohr_voloch";
  r.intermediates["s"] = s;
  r.intermediates["N"] = t.N;
  r.intermediates["delta"] = t.delta;
  r.intermediates["alpha"] = t.alpha;
  r.intermediates["beta"] = t.beta;
  r.intermediates["gamma"] = rational_json(t.gamma);
  r.intermediates["n1"] = n1;
  r.intermediates["n2"] = n2;
  if (static_cast<std::uint64_t>(t.delta) >= p) r.reasons.emplace_back("FrobeniusClassicalityUnverified");
  if ((q - 1) % n != 0) r.reasons.emplace_back("IncompatibleOrder");
  r.applicable = r.reasons.empty();
  const Rational raw = sv_bound_exact(q, n, s, n1, n2);
  r.intermediates["raw"] = to_string(raw);
  if (r.applicable) r.value = to_int64(floor(raw));
  return r;
}

BoundReport sv_bound(const CurveParams& curve, std::uint64_t s) {
  const FieldCtx& f = curve.ctx();
  sv_terms(curve.n, s);
  const std::uint64_t n1 = nth_root_count(f, curve.b, curve.n);
  const std::uint64_t n2 = nth_root_count(f, curve.a.inv(), curve.n);
  return sv_bound(f.p(), f.q(), curve.n, s, n1, n2);
}

// ---------------------------------------------------------------------------

Rational f_u(const Rational& t, const Rational& u) {
  if (t < 6 || u < 2) throw Error(Errc::DomainError, "f_u needs t >= 6 and u >= 2");
  return (3 * t * t - 23 * t + 26) / 6 + 4 * (u + 3) / t;
}

Rational k_threshold(std::int64_t t0) {
  if (t0 < 6) throw Error(Errc::DomainError, "k_t0 needs t0 >= 6");
  return make_rational(t0 * (t0 + 1) * (3 * t0 - 10), 12) - 3;
}

VResult v_of_k(std::int64_t k, std::int64_t n) {
  if (n < 3) throw Error(Errc::DomainError, "V(k) needs n >= 3");
  if (k < 2) throw Error(Errc::EmptyFeasibleSet, "no t in [6, n+3] with t <= k/2 + 5");
  const Rational u = rat(k);
  const Rational cap = u / 2 + 5;
  std::optional<VResult> best;
  for (std::int64_t t = 6; t <= n + 3 && rat(t) <= cap; ++t) {
    Rational v = f_u(rat(t), u);
    if (!best || v < best->value) best = VResult{v, t};
  }
  if (!best) throw Error(Errc::EmptyFeasibleSet, "no feasible t");
  return *best;
}

Rational vtilde(const Rational& u) {
  if (u < 2) throw Error(Errc::DomainError, "Vtilde needs u >= 2");
  if (u <= k_threshold(6)) return f_u(rat(6), u);
  std::int64_t t0 = 6;
  while (k_threshold(t0 + 1) < u) ++t0;
  return f_u(rat(t0 + 1), u);
}

Rational vtilde_brute(const Rational& u, std::int64_t t_max) {
  Rational best = f_u(rat(6), u);
  for (std::int64_t t = 7; t <= t_max; ++t) {
    Rational v = f_u(rat(t), u);
    if (v < best) best = v;
  }
  return best;
}

Lemma34Sides lemma34_sides(const Rational& u, std::int64_t t0) {
  if (u < 2) throw Error(Errc::DomainError, "u must be at least 2");
  return {u <= k_threshold(t0), f_u(rat(t0), u) <= f_u(rat(t0 + 1), u)};
}

bool lemma34_check(const Rational& u, std::int64_t t0) {
  const auto sides = lemma34_sides(u, t0);
  if (sides.below_threshold != sides.nondecreasing_step) {
    throw Error(Errc::DomainError, "biconditional fails at u = " + to_string(u) + ", t0 = " + std::to_string(t0));
  }
  return sides.below_threshold;
}

// ---------------------------------------------------------------------------

Interval w_lambda(const Rational& u, const Rational& lambda) {
  if (u < 2) throw Error(Errc::DomainError, "W needs u >= 2");
  const Interval x = Interval::sqrt(Rational(2)) * Interval(u);
  const Interval c = x.cbrt();
  return Interval(Rational(3)) * c * c - Interval(make_rational(103, 19)) * c + Interval(lambda);
}

Interval w_function(const Rational& u) { return w_lambda(u, make_rational(13, 3)); }

BoundReport w_bound(std::uint64_t p, std::uint64_t n) {
  BoundReport r;
  r.name = "w_bound";
  r.reasons = w_hypotheses(p, n);
  r.applicable = r.reasons.empty();
  if (n >= 3) r.intermediates["threshold"] = rational_json(threshold_for(n));
  if (n == 0 || (p - 1) % n != 0) return r;
  const std::int64_t k = static_cast<std::int64_t>((p - 1) / n);
  r.intermediates["k"] = k;
  if (k < 2) {
    if (r.applicable) r.reasons.emplace_back("DomainError");
    r.applicable = false;
    return r;
  }
  const Interval scaled = Interval(rat(static_cast<std::int64_t>(n * n))) * w_function(rat(k));
  r.intermediates["raw"] = scaled.to_decimal(12);
  if (r.applicable) r.value = to_int64(scaled.floor_upper());
  return r;
}

BoundReport w_bound(const CurveParams& curve) {
  if (!curve.ctx().is_prime_field()) {
    BoundReport r;
    r.name = "w_bound";
    r.reasons.emplace_back("NonPrimeField");
    return r;
  }
  return w_bound(curve.ctx().p(), curve.n);
}

Rational giulietti_bound(std::int64_t k) {
  if (k < 2) throw Error(Errc::DomainError, "k must be at least 2");
  return make_rational(k + 1, 3);
}

Interval np_real(const Rational& k) { return w_function(k) / Interval(Rational(2)); }

BoundReport np_bound(std::uint64_t p, std::uint64_t n) {
  BoundReport r;
  r.name = "np_bound";
  r.reasons = w_hypotheses(p, n);
  r.applicable = r.reasons.empty();
  if (n >= 3) r.intermediates["threshold"] = rational_json(threshold_for(n));
  if (n == 0 || (p - 1) % n != 0) return r;
  const std::int64_t k = static_cast<std::int64_t>((p - 1) / n);
  r.intermediates["k"] = k;
  if (k < 2) {
    if (r.applicable) r.reasons.emplace_back("DomainError");
    r.applicable = false;
    return r;
  }
  const Interval half = np_real(rat(k));
  r.intermediates["raw"] = half.to_decimal(12);
  r.intermediates["giulietti"] = rational_json(giulietti_bound(k));
  if (r.applicable) {
    r.value = to_int64(half.floor_upper());
    if (k > 25 && k < 44) {
      const VResult v = v_of_k(k, static_cast<std::int64_t>(n));
      r.intermediates["refinement"] = to_int64(floor(v.value / 2));
      r.intermediates["refinement_V"] = to_string(v.value);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

LambdaDiagnostic minimal_lambda(std::int64_t t0_max) {
  LambdaDiagnostic d;
  bool first = true;
  auto consider = [&](const Rational& u, const std::string& where) {
    const Interval gap = Interval(vtilde(u)) - w_lambda(u, Rational(0));
    const double v = gap.mid();
    if (first || v > d.computed) {
      d.computed = v;
      d.attained_at = where;
      first = false;
    }
  };
  for (std::int64_t u = 2; rat(u) < k_threshold(6); ++u) consider(rat(u), "u=" + std::to_string(u));
  for (std::int64_t t0 = 6; t0 <= t0_max; ++t0) consider(k_threshold(t0), "k_" + std::to_string(t0));

  const Interval sqrt2_term = Interval(make_rational(103, 19)) * Interval::sqrt(Rational(2));
  d.candidate_as_printed = (Interval(make_rational(10, 3)) - sqrt2_term).mid();
  d.candidate_sign_flipped = (sqrt2_term - Interval(make_rational(10, 3))).mid();
  d.stated = 13.0 / 3.0;
  return d;
}

}  // namespace gfermat
