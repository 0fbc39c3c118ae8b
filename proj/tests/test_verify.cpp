#include "doctest.h"
#include "merobound/verify.hpp"
#include "test_support.hpp"

using namespace merobound;
using merobound::testing::q;

namespace {

IdentityPoint point(Variant v) {
  return {{q(1, 3), q(3, 2), q(1, 2), v}, {q(2, 7), q(-1, 5), q(3, 4)}};
}

bool all_hold(const std::vector<IdentityOutcome>& out) {
  for (const auto& o : out) {
    if (!o.holds) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("identities hold at a fixed point") {
  for (Variant v : {Variant::Starlike, Variant::StronglyStarlike}) {
    const auto out = check_identities(point(v));
    CHECK(out.size() == identity_names(v).size());
    CHECK(all_hold(out));
  }
}

TEST_CASE("identities hold on the degenerate branches") {
  for (Variant v : {Variant::Starlike, Variant::StronglyStarlike}) {
    for (const auto& [lambda, mu] : {std::pair{Rational(1), Rational(0)},
                                     std::pair{Rational(2), Rational(1)},
                                     std::pair{Rational(1), Rational(1)}}) {
      IdentityPoint pt{{q(1, 2), lambda, mu, v}, {q(-4, 9), q(5, 3), q(1, 6)}};
      if (lambda == mu) continue;
      CHECK(all_hold(check_identities(pt)));
    }
  }
}

TEST_CASE("random verification passes for both variants") {
  for (Variant v : {Variant::Starlike, Variant::StronglyStarlike}) {
    const auto s = verify_coefficient_equations(v, 40, 7);
    CHECK(s.all_passed());
    for (const auto& c : s.checks) {
      CHECK(c.points == 40);
      CHECK(c.witness.empty());
    }
  }
}

TEST_CASE("every single-identity mutant is caught") {
  for (Variant v : {Variant::Starlike, Variant::StronglyStarlike}) {
    for (const auto& name : identity_names(v)) {
      VerifyOptions opt;
      opt.mutant = name;
      const auto s = verify_coefficient_equations(v, 10, 3, opt);
      CHECK_FALSE(s.all_passed());
      for (const auto& c : s.checks) {
        CHECK(c.passed == (c.name != name));
        if (c.name == name) CHECK(c.witness.find("trial=0") == 0);
      }
    }
  }
}

TEST_CASE("the negated g-side first-order form fails") {
  const auto pt = point(Variant::StronglyStarlike);
  const auto out = check_identities(pt);
  const auto& p = pt.params;
  const Rational b0 = pt.b[0];
  // alpha q_1 equals +(lambda - mu) b_0, so the opposite sign cannot hold.
  for (const auto& o : out) {
    if (o.name == "th1-ceof-q1") {
      CHECK(o.holds);
      CHECK(o.rhs == (p.lambda - p.mu) * b0);
      CHECK_FALSE(o.rhs == -(p.lambda - p.mu) * b0);
    }
  }
}

TEST_CASE("random points respect the parameter domain") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    for (Variant v : {Variant::Starlike, Variant::StronglyStarlike}) {
      const auto pt = random_identity_point(v, s, 3);
      CHECK_FALSE(domain_violation(pt.params));
      CHECK(pt.b.size() == 4);
    }
  }
}

TEST_CASE("bad arguments") {
  CHECK_THROWS_AS(verify_coefficient_equations(Variant::Starlike, 0, 1), std::invalid_argument);
  VerifyOptions opt;
  opt.mutant = "th1-ceof-q1";
  CHECK_THROWS_AS(verify_coefficient_equations(Variant::Starlike, 1, 1, opt), std::invalid_argument);
  CHECK_THROWS_AS(random_identity_point(Variant::Starlike, 1, 1), std::invalid_argument);
}
