#include "merobound/bounds.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include <mpfr.h>

namespace merobound {

namespace {

Rational sq(const Rational& x) { return Rational(x * x); }

Rational exact_of(double x) { return Rational(x); }

}  // namespace

std::pair<Rational, Rational> b1_square_terms(const ExactClassParams& p) {
  validate(p);
  const Rational lm = p.lambda - p.mu;
  const Rational tlm = 2 * p.lambda - p.mu;
  const Rational lm4 = sq(sq(lm));
  if (p.variant == Variant::Starlike) {
    const Rational s = 1 - p.alpha;
    const Rational pre = 4 * sq(s);
    return {Rational(pre * sq(1 - p.mu) * sq(s) / lm4), Rational(pre / sq(tlm))};
  }
  const Rational pre = 4 * sq(sq(p.alpha));
  return {Rational(pre / sq(tlm)), Rational(pre * sq(1 - p.mu) / lm4)};
}

ExactBounds exact_bounds(const ExactClassParams& p) {
  validate(p);
  const Rational lm = p.lambda - p.mu;
  const Rational num = p.variant == Variant::Starlike ? Rational(2 * (1 - p.alpha))
                                                      : Rational(2 * p.alpha);
  const auto [a, b] = b1_square_terms(p);
  return {Rational(num / lm), Rational(a + b)};
}

double sqrt_nearest(const Rational& q) {
  if (sgn(q) < 0) throw std::domain_error("sqrt_nearest: negative argument");
  if (sgn(q) == 0) return 0.0;
  mpfr_t x;
  mpfr_init2(x, 256);
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt(x, x, MPFR_RNDN);
  double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);

  // Settle the last bit exactly against the neighbouring midpoints.
  for (;;) {
    const double up = std::nextafter(d, INFINITY);
    const double down = std::nextafter(d, 0.0);
    const Rational hi = (exact_of(d) + exact_of(up)) / 2;
    const Rational lo = (exact_of(d) + exact_of(down)) / 2;
    const Rational hi2 = sq(hi), lo2 = sq(lo);
    const bool even = (std::bit_cast<std::uint64_t>(d) & 1u) == 0;
    if (q > hi2 || (q == hi2 && !even)) {
      d = up;
    } else if (q < lo2 || (q == lo2 && !even)) {
      d = down;
    } else {
      return d;
    }
  }
}

BoundPair bound_pair(const ExactClassParams& p) {
  const ExactBounds e = exact_bounds(p);
  return {to_double(e.b0), sqrt_nearest(e.b1_squared), to_double(p)};
}

BoundPair bound_pair(const ClassParams& p) {
  BoundPair b = bound_pair(to_exact(p));
  b.params = p;
  return b;
}

std::vector<ReductionRow> reduction_check() {
  std::vector<ReductionRow> rows;
  for (Variant v : {Variant::Starlike, Variant::StronglyStarlike}) {
    const int first = v == Variant::Starlike ? 0 : 1;
    for (int k = first; k <= first + 19; ++k) {
      Rational a(k, 20);
      a.canonicalize();
      const BoundPair g = bound_pair(ExactClassParams{a, 1, 0, v});
      double b0, b1;
      if (v == Variant::Starlike) {
        const Rational s = 1 - a;
        b0 = to_double(Rational(2 * s));
        b1 = sqrt_nearest(Rational(sq(s) * (4 * sq(s) + 1)));
      } else {
        b0 = to_double(Rational(2 * a));
        b1 = sqrt_nearest(Rational(5 * sq(sq(a))));
      }
      rows.push_back({v, a, g, b0, b1, g.b0_bound == b0 && g.b1_bound == b1});
    }
  }
  return rows;
}

std::string bounds_csv_header() { return "variant,alpha,lambda,mu,b0_bound,b1_bound"; }

std::string to_csv_row(const BoundPair& b) {
  std::string s(to_string(b.params.variant));
  for (double x : {b.params.alpha, b.params.lambda, b.params.mu, b.b0_bound, b.b1_bound}) {
    s += ',';
    s += format_double(x);
  }
  return s;
}

nlohmann::json to_json(const ClassParams& p) {
  return {{"variant", std::string(to_string(p.variant))},
          {"alpha", p.alpha},
          {"lambda", p.lambda},
          {"mu", p.mu}};
}

ClassParams class_params_from_json(const nlohmann::json& j) {
  return {j.at("alpha").get<double>(), j.at("lambda").get<double>(), j.at("mu").get<double>(),
          parse_variant(j.at("variant").get<std::string>())};
}

nlohmann::json to_json(const BoundPair& b) {
  return {{"params", to_json(b.params)}, {"b0_bound", b.b0_bound}, {"b1_bound", b.b1_bound}};
}

BoundPair bound_pair_from_json(const nlohmann::json& j) {
  return {j.at("b0_bound").get<double>(), j.at("b1_bound").get<double>(),
          class_params_from_json(j.at("params"))};
}

}  // namespace merobound
