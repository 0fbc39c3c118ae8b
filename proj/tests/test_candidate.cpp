#include <random>

#include "doctest.h"
#include "merobound/candidate.hpp"
#include "test_support.hpp"

using namespace merobound;
using merobound::testing::q;
using RC = RationalComplex;
using ExactSeries = ExteriorSeries<RC>;

namespace {

ExactSeries point_mass(const Rational& angle_over_pi, std::size_t order) {
  return to_exterior_series(ExactCaratheodoryAtoms({{1, angle_over_pi}}), order);
}

// Random exact atoms on the quarter-turn angles with rational weights.
ExactCaratheodoryAtoms quarter_atoms(std::mt19937_64& rng) {
  const std::size_t n = 1 + rng() % 4;
  std::vector<Rational> w(n);
  Rational total(0);
  for (auto& x : w) {
    x = Rational(static_cast<long>(1 + rng() % 50));
    total += x;
  }
  std::vector<ExactAtom> atoms;
  for (std::size_t k = 0; k < n; ++k) {
    atoms.push_back({Rational(w[k] / total), q(static_cast<long>(rng() % 4), 2)});
  }
  return ExactCaratheodoryAtoms(std::move(atoms));
}

ExactClassParams random_params(std::mt19937_64& rng, Variant v) {
  const Rational mu = q(static_cast<long>(rng() % 9), 4);
  const Rational lambda = std::max(Rational(1), mu) + q(static_cast<long>(1 + rng() % 6), 3);
  const long den = 2 + static_cast<long>(rng() % 9);
  const Rational alpha = v == Variant::Starlike ? q(static_cast<long>(rng() % den), den)
                                                : q(1 + static_cast<long>(rng() % den), den);
  return {alpha, lambda, mu, v};
}

// Antipodal partner of exact atoms: every angle moved by one (times pi).
ExactCaratheodoryAtoms flip(const ExactCaratheodoryAtoms& a) {
  std::vector<ExactAtom> out;
  for (const auto& atom : a.atoms()) {
    Rational t = atom.angle_over_pi + 1;
    if (t >= 2) t -= 2;
    out.push_back({atom.weight, t});
  }
  return ExactCaratheodoryAtoms(std::move(out));
}

}  // namespace

TEST_CASE("point masses at alpha = 0, lambda = 1, mu = 0 give b0 = 2") {
  const ExactClassParams prm{0, 1, 0, Variant::Starlike};
  const auto c = solve_candidate(point_mass(1, 3), point_mass(0, 2), prm, 2, 2);
  CHECK(c.consistent);
  CHECK(c.f.b()[0] == RC(2));
}

TEST_CASE("b0 and b1 from q at alpha = 1/2, lambda = 2, mu = 0") {
  const ExactClassParams prm{q(1, 2), 2, 0, Variant::Starlike};
  const auto c = solve_candidate(point_mass(1, 2), point_mass(0, 2), prm, 1, 1);
  CHECK(c.consistent);
  CHECK(c.f.b()[0] == RC(q(1, 2)));
  CHECK(c.f.b()[1] == RC(q(1, 8)));
}

TEST_CASE("equal first coefficients are inconsistent") {
  const ExactClassParams prm{0, 1, 0, Variant::Starlike};
  const auto c = solve_candidate(point_mass(0, 3), point_mass(0, 2), prm, 2, 2);
  CHECK_FALSE(c.consistent);
  CHECK(c.consistency_residual == doctest::Approx(4.0));
}

TEST_CASE("fill depth zeroes the tail") {
  const ExactClassParams prm{q(1, 3), 2, q(1, 2), Variant::Starlike};
  const auto c = solve_candidate(point_mass(1, 8), point_mass(0, 2), prm, 6, 3);
  CHECK(c.f.order() == 6);
  for (std::size_t n = 4; n <= 6; ++n) CHECK(c.f.b()[n] == RC(0));
  CHECK_FALSE(c.f.b()[3] == RC(0));
}

TEST_CASE("exact candidates satisfy both coefficient systems") {
  std::mt19937_64 rng(31);
  for (Variant v : {Variant::Starlike, Variant::StronglyStarlike}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto prm = random_params(rng, v);
      const auto pa = quarter_atoms(rng);
      const std::size_t N = 5;
      const ExactSeries p = to_exterior_series(pa, N + 1);
      const ExactSeries qs = to_exterior_series(flip(pa), N + 1);
      const auto c = solve_candidate(p, qs, prm, N, N);
      REQUIRE(c.consistent);
      const auto tp = class_target(p, prm);
      const auto tq = class_target(qs, prm);
      const auto df = operator_series(c.f.padded(N + 1), prm);
      const auto dg = operator_series(revert_mero(c.f), prm);
      // b_1 comes from the g side, so the z^{-2} coefficient of D[f] is free.
      CHECK(df[1] == tp[1]);
      for (std::size_t k = 3; k <= N + 1; ++k) CHECK(df[k] == tp[k]);
      CHECK(dg[1] == tq[1]);
      CHECK(dg[2] == tq[2]);
    }
  }
}

TEST_CASE("float candidate from atoms tracks the exact one") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const auto prm = random_params(rng, Variant::StronglyStarlike);
    const auto pa = quarter_atoms(rng);
    const auto exact = solve_candidate(to_exterior_series(pa, 5), to_exterior_series(flip(pa), 2),
                                       prm, 4, 4);
    const auto approx = solve_candidate(pa.to_float(), flip(pa).to_float(), to_double(prm), 4);
    CHECK(approx.consistent);
    for (std::size_t n = 0; n <= 4; ++n) {
      CHECK(std::abs(approx.f.b()[n] - to_complex(exact.f.b()[n])) < 1e-10);
    }
  }
}

TEST_CASE("antipodal random atoms are consistent in floating point") {
  const ClassParams prm{0.4, 1.5, 0.5, Variant::Starlike};
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto p = random_atoms(s, 4);
    CHECK(solve_candidate(p, antipodal(p), prm, 8).consistent);
  }
}
