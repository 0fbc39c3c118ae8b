#include <cmath>
#include <random>

#include "doctest.h"
#include "merobound/bounds.hpp"
#include "test_support.hpp"

using namespace merobound;
using merobound::testing::q;

TEST_CASE("bound_pair examples") {
  CHECK(bound_pair(ExactClassParams{q(1, 2), 2, q(1, 2), Variant::Starlike}).b0_bound ==
        2.0 / 3.0);
  const auto st = bound_pair(ExactClassParams{0, 1, 0, Variant::Starlike});
  CHECK(st.b0_bound == 2.0);
  CHECK(st.b1_bound == std::sqrt(5.0));
  const auto ss = bound_pair(ExactClassParams{1, 1, 0, Variant::StronglyStarlike});
  CHECK(ss.b0_bound == 2.0);
  CHECK(ss.b1_bound == std::sqrt(5.0));
  CHECK(bound_pair(ExactClassParams{q(1, 2), 1, 0, Variant::StronglyStarlike}).b0_bound == 1.0);
}

TEST_CASE("mu = 1 removes the first summand") {
  for (const auto& [a, l] : {std::pair{q(0), q(3, 2)}, std::pair{q(1, 3), q(2)}, std::pair{q(7, 8), q(9, 4)}}) {
    const auto b = bound_pair(ExactClassParams{a, l, 1, Variant::Starlike});
    CHECK(b.b1_bound == to_double(Rational(2 * (1 - a) / (2 * l - 1))));
  }
}

TEST_CASE("sqrt_nearest matches the hardware root on exact squares of doubles") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(1e-6, 1e6);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng);
    CHECK(sqrt_nearest(Rational(x)) == std::sqrt(x));
  }
  CHECK(sqrt_nearest(q(9, 4)) == 1.5);
  CHECK(sqrt_nearest(0) == 0.0);
  CHECK_THROWS_AS(sqrt_nearest(q(-1)), std::domain_error);
}

TEST_CASE("bounds agree with a direct floating evaluation") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 300; ++i) {
    for (Variant v : {Variant::Starlike, Variant::StronglyStarlike}) {
      const Rational mu = q(static_cast<long>(rng() % 40), 10);
      const Rational lambda = std::max(Rational(1), mu) + q(1 + static_cast<long>(rng() % 40), 10);
      const Rational alpha = v == Variant::Starlike ? q(static_cast<long>(rng() % 100), 100)
                                                    : q(1 + static_cast<long>(rng() % 100), 100);
      const auto b = bound_pair(ExactClassParams{alpha, lambda, mu, v});
      const double a = alpha.get_d(), l = lambda.get_d(), m = mu.get_d();
      const double lm = l - m, t = 2 * l - m;
      double b0, b1;
      if (v == Variant::Starlike) {
        b0 = 2 * (1 - a) / lm;
        b1 = 2 * (1 - a) * std::sqrt((1 - m) * (1 - m) * (1 - a) * (1 - a) / std::pow(lm, 4) + 1 / (t * t));
      } else {
        b0 = 2 * a / lm;
        b1 = 2 * a * a * std::sqrt(1 / (t * t) + (1 - m) * (1 - m) / std::pow(lm, 4));
      }
      CHECK(b.b0_bound == doctest::Approx(b0).epsilon(1e-13));
      CHECK(b.b1_bound == doctest::Approx(b1).epsilon(1e-13));
      const auto [s1, s2] = b1_square_terms(ExactClassParams{alpha, lambda, mu, v});
      CHECK(s1 + s2 == exact_bounds(ExactClassParams{alpha, lambda, mu, v}).b1_squared);
    }
  }
}

TEST_CASE("monotonicity of the b0 bound") {
  auto b0 = [](double a, double l, double m, Variant v) {
    return bound_pair(ClassParams{a, l, m, v}).b0_bound;
  };
  for (double a = 0.0; a < 0.85; a += 0.1) {
    CHECK(b0(a + 0.1, 2.0, 0.5, Variant::Starlike) < b0(a, 2.0, 0.5, Variant::Starlike));
    CHECK(b0(a + 0.1, 2.0, 0.5, Variant::StronglyStarlike) > b0(a + 0.05, 2.0, 0.5, Variant::StronglyStarlike));
  }
  for (double l = 1.0; l < 5.0; l += 0.25) {
    CHECK(b0(0.3, l + 0.25, 0.5, Variant::Starlike) < b0(0.3, l, 0.5, Variant::Starlike));
  }
  for (double m = 0.0; m < 1.8; m += 0.2) {
    CHECK(b0(0.3, 2.0, m + 0.2, Variant::Starlike) > b0(0.3, 2.0, m, Variant::Starlike));
  }
}

TEST_CASE("bounds are positive on the open domain and rejected outside it") {
  CHECK(bound_pair(ClassParams{0.999, 1.0, 0.0, Variant::Starlike}).b1_bound > 0.0);
  CHECK(bound_pair(ClassParams{0.001, 1.0, 0.0, Variant::StronglyStarlike}).b1_bound > 0.0);
  CHECK_THROWS_AS(bound_pair(ClassParams{0.5, 1.0, 1.0, Variant::Starlike}), std::domain_error);
  CHECK_THROWS_AS(bound_pair(ClassParams{1.0, 2.0, 0.0, Variant::Starlike}), std::domain_error);
}

TEST_CASE("reduction to the one-parameter forms") {
  const auto rows = reduction_check();
  CHECK(rows.size() == 40);
  for (const auto& r : rows) CHECK(r.agrees);
  CHECK(rows.front().general.b0_bound == 2.0);
  CHECK(rows.front().general.b1_bound == std::sqrt(5.0));
  CHECK(rows[19].general.b0_bound == doctest::Approx(0.1));
}

TEST_CASE("CSV and JSON") {
  const auto b = bound_pair(ClassParams{0.0, 1.0, 0.0, Variant::Starlike});
  CHECK(bounds_csv_header() == "variant,alpha,lambda,mu,b0_bound,b1_bound");
  CHECK(to_csv_row(b) == "starlike,0,1,0,2,2.2360679774997898");
  CHECK(bound_pair_from_json(nlohmann::json::parse(to_json(b).dump())) == b);
  const auto c = bound_pair(ClassParams{0.1, 2.0, 0.5, Variant::StronglyStarlike});
  CHECK(bound_pair_from_json(nlohmann::json::parse(to_json(c).dump())) == c);
}
