#include "merobound/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "merobound/class_operators.hpp"
#include "merobound/rng.hpp"
#include "merobound/series.hpp"

namespace merobound {

namespace {

constexpr long kMaxMagnitude = 1000000;

Rational draw(Rng& rng, long max_num, long max_den) {
  Rational r(rng.between(-max_num, max_num), rng.between(1, max_den));
  r.canonicalize();
  return r;
}

// k / den with k uniform in [lo * den, hi * den], den uniform in [1, max_den].
Rational draw_in(Rng& rng, long lo, long hi, long max_den) {
  const long den = rng.between(1, max_den);
  Rational r(rng.between(lo * den, hi * den), den);
  r.canonicalize();
  return r;
}

ExactClassParams draw_params(Rng& rng, Variant v) {
  ExactClassParams p;
  p.variant = v;
  // Special values exercise the degenerate branches (mu = 1 kills the b_0^2
  // terms, lambda = 1 drops the (1 - lambda) part, mu = 0 is the classical case).
  const auto pick = rng.below(10);
  if (pick == 0) {
    p.mu = 1;
  } else if (pick == 1) {
    p.mu = 0;
  } else {
    p.mu = draw_in(rng, 0, 4, kMaxMagnitude);
  }
  const Rational base = std::max(Rational(1), p.mu);
  if (rng.below(5) == 0 && p.mu < 1) {
    p.lambda = 1;
  } else {
    Rational delta = draw_in(rng, 0, 4, kMaxMagnitude);
    if (sgn(delta) == 0) delta = Rational(1, 3);
    p.lambda = base + delta;
  }
  const long den = rng.between(2, kMaxMagnitude);
  if (v == Variant::Starlike) {
    p.alpha = Rational(rng.between(0, den - 1), den);
  } else {
    p.alpha = Rational(rng.between(1, den), den);
  }
  p.alpha.canonicalize();
  validate(p);
  return p;
}

struct Record {
  std::vector<IdentityOutcome>& out;
  const std::optional<std::string>& mutant;

  void operator()(std::string name, const Rational& lhs, const Rational& rhs) {
    Rational r = rhs;
    if (mutant && *mutant == name) r = -r;
    const bool holds = lhs == r;
    out.push_back({std::move(name), holds, lhs, r});
  }
};

Rational sq(const Rational& x) { return Rational(x * x); }

// Long exact values are shown as a decimal approximation.
std::string brief(const Rational& x) {
  std::string s = to_string(x);
  if (s.size() <= 64) return s;
  return "~" + format_double(to_double(x));
}

}  // namespace

bool VerificationSummary::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

std::vector<std::string> identity_names(Variant v) {
  std::vector<std::string> names = {"operator-f-z1", "operator-f-z2", "operator-g-w1",
                                    "operator-g-w2", "sign-antisymmetry"};
  if (v == Variant::Starlike) {
    for (const char* n : {"th2-ceof-p1", "th2-ceof-p2", "th2-ceof-q1", "th2-ceof-q2",
                          "th2-pr-p1=q1", "th2-b-0-square", "th2-a3-cal-e1"}) {
      names.emplace_back(n);
    }
  } else {
    for (const char* n : {"th1-power-roundtrip-p", "th1-power-roundtrip-q", "th1-ceof-p1",
                          "th1-ceof-p2", "th1-ceof-q1", "th1-ceof-q2", "th1-pr-p1=q1",
                          "th1-b-0-square", "th1-a3-cal-e1"}) {
      names.emplace_back(n);
    }
  }
  return names;
}

std::vector<IdentityOutcome> check_identities(const IdentityPoint& point,
                                              const std::optional<std::string>& mutant) {
  if (point.b.size() < 3) throw std::invalid_argument("check_identities: need order >= 2");
  validate(point.params);
  const auto& prm = point.params;
  const Rational& alpha = prm.alpha;
  const Rational& lambda = prm.lambda;
  const Rational& mu = prm.mu;
  const Rational& b0 = point.b[0];
  const Rational& b1 = point.b[1];

  const MeroSeries<Rational> f(point.b);
  const MeroSeries<Rational> g = revert_mero(f);
  const ExteriorSeries<Rational> df = operator_series(f, prm);
  const ExteriorSeries<Rational> dg = operator_series(g, prm);

  std::vector<IdentityOutcome> out;
  Record rec{out, mutant};

  const Rational lm = lambda - mu;
  const Rational tlm = 2 * lambda - mu;
  const Rational f2 = (mu - 2 * lambda) * (b1 + (mu - 1) * b0 * b0 / 2);
  const Rational g2 = tlm * (b1 - (mu - 1) * b0 * b0 / 2);

  rec("operator-f-z1", df[1], Rational((mu - lambda) * b0));
  rec("operator-f-z2", df[2], f2);
  rec("operator-g-w1", dg[1], Rational(lm * b0));
  rec("operator-g-w2", dg[2], g2);
  rec("sign-antisymmetry", df[1], Rational(-dg[1]));

  if (prm.variant == Variant::Starlike) {
    // p and q from D[f] = alpha + (1 - alpha) p and D[g] = alpha + (1 - alpha) q.
    const Rational s = 1 - alpha;
    const Rational p1 = df[1] / s, p2 = df[2] / s;
    const Rational q1 = dg[1] / s, q2 = dg[2] / s;
    rec("th2-ceof-p1", Rational((mu - lambda) * b0), Rational(s * p1));
    rec("th2-ceof-p2", f2, Rational(s * p2));
    rec("th2-ceof-q1", Rational(lm * b0), Rational(s * q1));
    rec("th2-ceof-q2", g2, Rational(s * q2));
    rec("th2-pr-p1=q1", p1, Rational(-q1));
    rec("th2-b-0-square", sq(b0), Rational(s * s * (p1 * p1 + q1 * q1) / (2 * lm * lm)));
    rec("th2-a3-cal-e1",
        Rational(sq(1 - mu) * sq(tlm) * sq(sq(b0)) - 4 * s * s * p2 * q2),
        Rational(4 * sq(tlm) * sq(b1)));
  } else {
    // p and q from D[f] = p^alpha and D[g] = q^alpha.
    const Rational inv = 1 / alpha;
    const ExteriorSeries<Rational> ps = binomial_pow(df, inv);
    const ExteriorSeries<Rational> qs = binomial_pow(dg, inv);
    const ExteriorSeries<Rational> p_back = binomial_pow(ps, alpha);
    const ExteriorSeries<Rational> q_back = binomial_pow(qs, alpha);
    // Roundtrips are compared coefficientwise; the recorded values are the
    // first differing coefficient (or the last one when all agree).
    auto first_diff = [&](const ExteriorSeries<Rational>& a, const ExteriorSeries<Rational>& b,
                          const char* name) {
      std::size_t k = 0;
      while (k < a.order() && a[k] == b[k]) ++k;
      rec(name, a[k], b[k]);
    };
    first_diff(p_back, df, "th1-power-roundtrip-p");
    first_diff(q_back, dg, "th1-power-roundtrip-q");

    const Rational &p1 = ps[1], &p2 = ps[2], &q1 = qs[1], &q2 = qs[2];
    rec("th1-ceof-p1", Rational((mu - lambda) * b0), Rational(alpha * p1));
    rec("th1-ceof-p2", f2, Rational((alpha * (alpha - 1) * p1 * p1 + 2 * alpha * p2) / 2));
    // The w^{-1} coefficient of D[g] is +(lambda - mu) b_0; a minus sign
    // here would contradict p_1 = -q_1.
    rec("th1-ceof-q1", Rational(lm * b0), Rational(alpha * q1));
    rec("th1-ceof-q2", g2, Rational((alpha * (alpha - 1) * q1 * q1 + 2 * alpha * q2) / 2));
    rec("th1-pr-p1=q1", p1, Rational(-q1));
    rec("th1-b-0-square", sq(b0), Rational(alpha * alpha * (p1 * p1 + q1 * q1) / (2 * lm * lm)));
    const Rational am1 = alpha - 1;
    rec("th1-a3-cal-e1",
        Rational(2 * sq(tlm) * sq(b1) + sq(tlm) * sq(1 - mu) * sq(sq(b0)) / 2),
        Rational(alpha * alpha * am1 * am1 * (sq(sq(p1)) + sq(sq(q1))) / 4 +
                 alpha * alpha * (p2 * p2 + q2 * q2) +
                 alpha * alpha * am1 * (p1 * p1 * p2 + q1 * q1 * q2)));
  }
  return out;
}

IdentityPoint random_identity_point(Variant v, std::uint64_t seed, std::size_t order) {
  if (order < 2) throw std::invalid_argument("random_identity_point: order must be >= 2");
  Rng rng(seed);
  IdentityPoint pt;
  pt.params = draw_params(rng, v);
  pt.b.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) pt.b.push_back(draw(rng, kMaxMagnitude, kMaxMagnitude));
  return pt;
}

VerificationSummary verify_coefficient_equations(Variant v, std::size_t trials, std::uint64_t seed,
                                                 const VerifyOptions& options) {
  if (trials == 0) throw std::invalid_argument("verify: trials must be >= 1");
  if (options.mutant) {
    const auto names = identity_names(v);
    if (std::find(names.begin(), names.end(), *options.mutant) == names.end()) {
      throw std::invalid_argument("verify: unknown identity '" + *options.mutant + "'");
    }
  }
  VerificationSummary summary{v, trials, seed, options.order, {}};
  for (const auto& name : identity_names(v)) summary.checks.push_back({name, true, 0, {}});

  for (std::size_t t = 0; t < trials; ++t) {
    const IdentityPoint pt = random_identity_point(v, derive_seed(seed, t), options.order);
    const auto outcomes = check_identities(pt, options.mutant);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      IdentityCheck& c = summary.checks[i];
      ++c.points;
      if (!outcomes[i].holds && c.passed) {
        c.passed = false;
        std::ostringstream w;
        w << "trial=" << t << " b0=" << pt.b[0] << " b1=" << pt.b[1]
          << " lambda=" << pt.params.lambda << " mu=" << pt.params.mu
          << " alpha=" << pt.params.alpha << " lhs=" << brief(outcomes[i].lhs)
          << " rhs=" << brief(outcomes[i].rhs);
        c.witness = w.str();
      }
    }
  }
  return summary;
}

}  // namespace merobound
