#ifndef MEROBOUND_MEMBERSHIP_HPP
#define MEROBOUND_MEMBERSHIP_HPP

// Numerical test of the class inequalities on a polar grid of |z| > 1.
// Both D[f] and D[g], g the inverse of f, are sampled. Univalence is not
// decided here; every report carries univalence_checked = false.

#include <limits>
#include <vector>

#include "json.hpp"

#include "merobound/class_params.hpp"
#include "merobound/scalar.hpp"
#include "merobound/series.hpp"

namespace merobound {

enum class Exec { Serial, Parallel };

struct MembershipGrid {
  std::vector<double> radii = default_radii();
  std::size_t angles = 720;
  // f is padded with zero coefficients to this order before inversion.
  std::size_t eval_order = 8;
  double margin_eps = 1e-9;
  double tail_tol = 1e-6;
  // Leave the grid unsampled once the tail rule already fails.
  bool skip_when_heuristic = false;

  static std::vector<double> default_radii();
  double min_radius() const;
};

struct MembershipReport {
  bool is_member = false;
  double min_margin = -std::numeric_limits<double>::infinity();
  Complex worst_point{};
  std::size_t samples_used = 0;
  bool heuristic = false;
  double tail_estimate = 0.0;
  bool univalence_checked = false;

  friend bool operator==(const MembershipReport&, const MembershipReport&) = default;
};

// Estimated sum_{n > N} |c_n| r^{-n} from the last three coefficients of c,
// assuming geometric decay at the observed rate. Infinite when the rate
// reaches r.
double tail_estimate(std::span<const Complex> c, double r);

// Margin of one operator value: Re v - alpha, or alpha pi/2 - |arg v|.
// Non-finite values give -inf.
double class_margin(Complex v, const ClassParams& params);

MembershipReport membership_check(const MeroSeries<Complex>& f, const ClassParams& params,
                                  const MembershipGrid& grid = {}, Exec exec = Exec::Serial,
                                  int threads = 0);

nlohmann::json to_json(const MembershipReport& r);
MembershipReport membership_report_from_json(const nlohmann::json& j);

namespace kernels {

// Flattened sampling problem. Sample s = (which * R + ri) * A + k evaluates
// series `which` (0: D[f], 1: D[g]) at radii[ri] * roots[k].
struct GridProblem {
  std::span<const Complex> df;
  std::span<const Complex> dg;
  std::span<const double> radii;
  std::span<const Complex> roots;
  ClassParams params;
};

struct GridMin {
  double margin;
  std::size_t index;
};

// Smallest margin; ties go to the lower sample index.
GridMin grid_min_serial(const GridProblem& p);
GridMin grid_min_omp(const GridProblem& p, int threads);

Complex sample_point(const GridProblem& p, std::size_t index);
std::vector<Complex> unit_roots(std::size_t n);

}  // namespace kernels

}  // namespace merobound

#endif
