#include <cmath>
#include <numbers>

#include "doctest.h"
#include "merobound/membership.hpp"

using namespace merobound;

namespace {

MeroSeries<Complex> mero(std::vector<Complex> b) { return MeroSeries<Complex>(std::move(b)); }

}  // namespace

TEST_CASE("identity is a member with margin alpha") {
  const auto rep = membership_check(MeroSeries<Complex>::identity(8),
                                    ClassParams{0.5, 2.0, 0.5, Variant::Starlike});
  CHECK(rep.is_member);
  CHECK(rep.min_margin == 0.5);
  CHECK_FALSE(rep.heuristic);
  CHECK(rep.tail_estimate == 0.0);
  CHECK(rep.samples_used == 2 * 16 * 720);
  CHECK_FALSE(rep.univalence_checked);
}

TEST_CASE("a large translation is rejected") {
  const auto f = mero({3.0, 0, 0, 0, 0, 0, 0, 0, 0});
  const auto s = membership_check(f, ClassParams{0.0, 1.0, 0.0, Variant::Starlike});
  CHECK_FALSE(s.is_member);
  CHECK(s.heuristic);
  CHECK(s.min_margin < 0.0);
  const auto ss = membership_check(f, ClassParams{1.0, 1.0, 0.0, Variant::StronglyStarlike});
  CHECK_FALSE(ss.is_member);

  // Closed form at the witness radius: z / (z + 3) is negative real.
  const Complex z(-1.01, 0.0);
  CHECK((z / (z + 3.0)).real() == doctest::Approx(-0.5075376884));
  CHECK(class_margin(z / (z + 3.0), ClassParams{1.0, 1.0, 0.0, Variant::StronglyStarlike}) ==
        doctest::Approx(std::numbers::pi / 2 - std::numbers::pi));
}

TEST_CASE("a small perturbation passes and is certified") {
  const auto f = mero({0.01, 0.005, 0, 0, 0, 0, 0, 0, 0});
  MembershipGrid grid;
  grid.eval_order = 24;
  const auto rep = membership_check(f, ClassParams{0.2, 1.0, 0.0, Variant::Starlike}, grid);
  CHECK(rep.is_member);
  CHECK_FALSE(rep.heuristic);
  CHECK(rep.min_margin > 0.7);
  CHECK(rep.min_margin < 0.8);
}

TEST_CASE("margin definitions") {
  const ClassParams st{0.25, 1.0, 0.0, Variant::Starlike};
  const ClassParams ss{0.5, 1.0, 0.0, Variant::StronglyStarlike};
  CHECK(class_margin({1.0, 5.0}, st) == 0.75);
  CHECK(class_margin({1.0, 1.0}, ss) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(class_margin({-1.0, 0.0}, ss) == doctest::Approx(std::numbers::pi / 4 - std::numbers::pi));
  CHECK(class_margin({NAN, 0.0}, st) == -INFINITY);
  CHECK(class_margin({INFINITY, 0.0}, ss) == -INFINITY);
}

TEST_CASE("tail estimate") {
  const std::vector<Complex> zero_tail{1.0, 0.5, 0.0, 0.0, 0.0};
  CHECK(tail_estimate(zero_tail, 1.5) == 0.0);

  // Geometric c_n = x^n: the estimate is the exact remainder.
  std::vector<Complex> geo;
  for (int n = 0; n <= 10; ++n) geo.push_back(std::pow(0.5, n));
  const double r = 1.25;
  const double exact = std::pow(0.5 / r, 11) / (1.0 - 0.5 / r);
  CHECK(tail_estimate(geo, r) == doctest::Approx(exact).epsilon(1e-12));

  // Alternating zeros: two-step ratio.
  const std::vector<Complex> alt{1.0, 0.0, 0.25, 0.0, 0.0625};
  CHECK(tail_estimate(alt, 1.0) == doctest::Approx(0.0625 * 1.0));

  const std::vector<Complex> growing{1.0, 2.0, 4.0};
  CHECK(std::isinf(tail_estimate(growing, 1.5)));
  CHECK(std::isinf(tail_estimate(std::vector<Complex>{1.0, NAN, 0.0}, 2.0)));
}

TEST_CASE("serial and OpenMP kernels agree exactly") {
  const auto f = mero({Complex(0.02, -0.01), 0.01, Complex(0, 0.004), 0, 0, 0, 0, 0, 0});
  for (Variant v : {Variant::Starlike, Variant::StronglyStarlike}) {
    const ClassParams p{0.5, 2.0, 0.5, v};
    const auto a = membership_check(f, p, {}, Exec::Serial);
    for (int t : {1, 2, 3, 7}) CHECK(membership_check(f, p, {}, Exec::Parallel, t) == a);
  }
}

TEST_CASE("conjugated coefficients give the same verdict") {
  const std::vector<Complex> b{Complex(0.3, 0.2), Complex(-0.1, 0.15), Complex(0.05, -0.02)};
  std::vector<Complex> bc;
  for (auto x : b) bc.push_back(std::conj(x));
  for (Variant v : {Variant::Starlike, Variant::StronglyStarlike}) {
    const ClassParams p{0.3, 1.5, 0.25, v};
    const auto a = membership_check(mero(b), p);
    const auto c = membership_check(mero(bc), p);
    CHECK(a.min_margin == c.min_margin);
    CHECK(a.is_member == c.is_member);
    CHECK(a.heuristic == c.heuristic);
  }
}

TEST_CASE("skip_when_heuristic leaves the grid unsampled") {
  MembershipGrid grid;
  grid.skip_when_heuristic = true;
  const auto rep = membership_check(mero({3.0, 1.0}), ClassParams{0.0, 1.0, 0.0, Variant::Starlike}, grid);
  CHECK(rep.heuristic);
  CHECK_FALSE(rep.is_member);
  CHECK(rep.samples_used == 0);
}

TEST_CASE("report JSON round trip") {
  const auto rep = membership_check(mero({Complex(0.02, 0.01), 0.01}),
                                    ClassParams{0.5, 2.0, 0.5, Variant::StronglyStarlike});
  const auto back = membership_report_from_json(nlohmann::json::parse(to_json(rep).dump()));
  CHECK(back == rep);
  MembershipReport empty;
  empty.tail_estimate = INFINITY;
  CHECK(membership_report_from_json(nlohmann::json::parse(to_json(empty).dump())) == empty);
  CHECK(to_json(empty)["min_margin"].is_null());
}

TEST_CASE("unit roots are conjugation symmetric") {
  const auto w = kernels::unit_roots(720);
  CHECK(w[0] == Complex(1.0, 0.0));
  for (std::size_t k = 1; k < 720; ++k) CHECK(w[720 - k] == std::conj(w[k]));
}
