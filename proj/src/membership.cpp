#include "merobound/membership.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "merobound/class_operators.hpp"

namespace merobound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double finite_or(const nlohmann::json& j, double fallback) {
  return j.is_null() ? fallback : j.get<double>();
}

}  // namespace

std::vector<double> MembershipGrid::default_radii() {
  std::vector<double> r;
  for (int j = 1; j <= 12; ++j) r.push_back(1.0 + std::ldexp(1.0, -j));
  for (double x : {2.0, 5.0, 10.0, 100.0}) r.push_back(x);
  return r;
}

double MembershipGrid::min_radius() const {
  if (radii.empty()) throw std::invalid_argument("MembershipGrid: no radii");
  return *std::min_element(radii.begin(), radii.end());
}

double tail_estimate(std::span<const Complex> c, double r) {
  const std::size_t N = c.size() - 1;
  if (N < 2) return kInf;
  const double m0 = std::abs(c[N - 2]);
  const double m1 = std::abs(c[N - 1]);
  const double m2 = std::abs(c[N]);
  if (!std::isfinite(m0) || !std::isfinite(m1) || !std::isfinite(m2)) return kInf;
  if (m2 == 0.0 && m1 == 0.0 && m0 == 0.0) return 0.0;

  // Decay rate from the two-step ratio, which tolerates the sign and phase
  // oscillation of complex-conjugate singularities. One-step ratios cover a
  // zero at either end and a root test covers a lone nonzero coefficient.
  double rho;
  if (m0 > 0.0 && m2 > 0.0) {
    rho = std::sqrt(m2 / m0);
  } else if (m0 > 0.0) {
    rho = m1 / m0;
  } else if (m1 > 0.0) {
    rho = m2 / m1;
  } else {
    rho = std::pow(m2, 1.0 / static_cast<double>(N));
  }
  const double x = rho / r;
  if (x >= 1.0) return kInf;
  const double last = std::max({m2, m1 * rho, m0 * rho * rho});
  return last * std::pow(r, -static_cast<double>(N)) * x / (1.0 - x);
}

double class_margin(Complex v, const ClassParams& params) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return -kInf;
  if (params.variant == Variant::Starlike) return v.real() - params.alpha;
  return params.alpha * std::numbers::pi / 2.0 - std::abs(std::arg(v));
}

MembershipReport membership_check(const MeroSeries<Complex>& f, const ClassParams& params,
                                  const MembershipGrid& grid, Exec exec, int threads) {
  validate(params);
  const std::size_t N = std::max(f.order(), grid.eval_order);
  const MeroSeries<Complex> fp = f.padded(N);
  const MeroSeries<Complex> g = revert_mero(fp);
  const ExteriorSeries<Complex> df = operator_series(fp, params);
  const ExteriorSeries<Complex> dg = operator_series(g, params);

  MembershipReport rep;
  const double r0 = grid.min_radius();
  for (auto c : {fp.b(), g.b(), df.coeffs(), dg.coeffs()}) {
    rep.tail_estimate = std::max(rep.tail_estimate, tail_estimate(c, r0));
  }
  rep.heuristic = !(rep.tail_estimate < grid.tail_tol);
  if (rep.heuristic && grid.skip_when_heuristic) return rep;

  const std::vector<Complex> roots = kernels::unit_roots(grid.angles);
  const kernels::GridProblem prob{df.coeffs(), dg.coeffs(), grid.radii, roots, params};
  const kernels::GridMin best =
      exec == Exec::Serial ? kernels::grid_min_serial(prob) : kernels::grid_min_omp(prob, threads);

  rep.samples_used = 2 * grid.radii.size() * roots.size();
  rep.min_margin = best.margin;
  rep.worst_point = kernels::sample_point(prob, best.index);
  rep.is_member = rep.min_margin > grid.margin_eps;
  return rep;
}

nlohmann::json to_json(const MembershipReport& r) {
  nlohmann::json j;
  j["is_member"] = r.is_member;
  j["min_margin"] = std::isfinite(r.min_margin) ? nlohmann::json(r.min_margin) : nlohmann::json();
  j["worst_point"] = {{"re", r.worst_point.real()}, {"im", r.worst_point.imag()}};
  j["samples_used"] = r.samples_used;
  j["heuristic"] = r.heuristic;
  j["tail_estimate"] =
      std::isfinite(r.tail_estimate) ? nlohmann::json(r.tail_estimate) : nlohmann::json();
  j["univalence_checked"] = r.univalence_checked;
  return j;
}

MembershipReport membership_report_from_json(const nlohmann::json& j) {
  MembershipReport r;
  r.is_member = j.at("is_member").get<bool>();
  r.min_margin = finite_or(j.at("min_margin"), -kInf);
  r.worst_point = {j.at("worst_point").at("re").get<double>(),
                   j.at("worst_point").at("im").get<double>()};
  r.samples_used = j.at("samples_used").get<std::size_t>();
  r.heuristic = j.at("heuristic").get<bool>();
  r.tail_estimate = finite_or(j.at("tail_estimate"), kInf);
  r.univalence_checked = j.at("univalence_checked").get<bool>();
  return r;
}

namespace kernels {

std::vector<Complex> unit_roots(std::size_t n) {
  // Mirror pairs are exact conjugates so the grid is conjugation-symmetric.
  std::vector<Complex> w(n);
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    w[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  }
  if (n % 2 == 0) w[n / 2] = Complex(-1.0, 0.0);
  for (std::size_t k = n / 2 + 1; k < n; ++k) w[k] = std::conj(w[n - k]);
  return w;
}

Complex sample_point(const GridProblem& p, std::size_t index) {
  const std::size_t A = p.roots.size();
  const std::size_t R = p.radii.size();
  if (index >= 2 * A * R) return {};
  return p.radii[(index / A) % R] * p.roots[index % A];
}

}  // namespace kernels

}  // namespace merobound
