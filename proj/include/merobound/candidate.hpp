#ifndef MEROBOUND_CANDIDATE_HPP
#define MEROBOUND_CANDIDATE_HPP

// Candidate class members from Caratheodory data. With D the class operator
// and p, q positive-real-part functions, the construction solves
//
//   starlike:          D[f] = alpha + (1 - alpha) p,   D[g] = alpha + (1 - alpha) q
//   strongly starlike: D[f] = p^alpha,                 D[g] = q^alpha
//
// for b_0 and b_1 from the w^{-1}, w^{-2} coefficients on the g side, then
// continues matching the z^{-(n+1)} coefficient on the f side for b_n,
// n >= 2. The two sides agree at first order only when p_1 = -q_1.

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "merobound/caratheodory.hpp"
#include "merobound/class_operators.hpp"
#include "merobound/class_params.hpp"
#include "merobound/series.hpp"

namespace merobound {

inline constexpr double kConsistencyTolerance = 1e-12;

template <Scalar S>
struct Candidate {
  MeroSeries<S> f;
  bool consistent;
  double consistency_residual;  // |p_1 + q_1|
};

// The right-hand side alpha + (1 - alpha) p, or p^alpha.
template <Scalar S>
ExteriorSeries<S> class_target(const ExteriorSeries<S>& p, const BasicClassParams<real_t<S>>& params) {
  using R = real_t<S>;
  if (params.variant == Variant::Starlike) {
    const R one_minus = R(1) - params.alpha;
    ExteriorSeries<S> t = scale(one_minus, p);
    std::vector<S> c(t.coeffs().begin(), t.coeffs().end());
    c[0] += from_real<S>(params.alpha);
    return ExteriorSeries<S>(std::move(c));
  }
  return binomial_pow(p, params.alpha);
}

// b_0..b_order of a candidate; b_n for 2 <= n <= fill_depth come from the
// f-side matching, b_n beyond fill_depth are zero. p must reach order
// fill_depth + 1 and q order 2.
template <Scalar S>
Candidate<S> solve_candidate(const ExteriorSeries<S>& p, const ExteriorSeries<S>& q,
                             const BasicClassParams<real_t<S>>& params, std::size_t order,
                             std::size_t fill_depth) {
  using R = real_t<S>;
  validate(params);
  fill_depth = std::min(fill_depth, order);
  if (q.order() < std::min<std::size_t>(order, 1) + 1) {
    throw std::invalid_argument("solve_candidate: q must reach order 2");
  }
  if (fill_depth >= 2 && p.order() < fill_depth + 1) {
    throw std::invalid_argument("solve_candidate: p does not reach the fill depth");
  }
  const R& alpha = params.alpha;
  const R& lambda = params.lambda;
  const R& mu = params.mu;
  const R lm = lambda - mu;
  const R tlm = R(2) * lambda - mu;

  std::vector<S> b(order + 1, from_int<S>(0));
  const S q1 = q[1];
  const S q2 = q[2];
  // g side: w^{-1} gives (lambda - mu) b_0 = T_1, w^{-2} gives
  // (2 lambda - mu)(b_1 - (mu - 1) b_0^2 / 2) = T_2.
  S t1, t2;
  if (params.variant == Variant::Starlike) {
    t1 = R(R(1) - alpha) * q1;
    t2 = R(R(1) - alpha) * q2;
  } else {
    t1 = alpha * q1;
    t2 = R(alpha * R(alpha - R(1)) / R(2)) * (q1 * q1) + alpha * q2;
  }
  b[0] = t1 / lm;
  if (order >= 1) b[1] = t2 / tlm + R(R(mu - R(1)) / R(2)) * (b[0] * b[0]);

  if (fill_depth >= 2) {
    const ExteriorSeries<S> target = class_target(p, params);
    for (std::size_t n = 2; n <= fill_depth; ++n) {
      std::vector<S> partial(b.begin(), b.begin() + n + 1);
      partial[n] = from_int<S>(0);
      partial.push_back(from_int<S>(0));
      const ExteriorSeries<S> d = operator_series(MeroSeries<S>(std::move(partial)), params);
      // The z^{-(n+1)} coefficient of D[f] is (mu - lambda (n + 1)) b_n + (terms in b_0..b_{n-1}).
      const R slope = mu - lambda * R(static_cast<long>(n + 1));
      b[n] = (target[n + 1] - d[n + 1]) / slope;
    }
  }

  const S sum = p[1] + q1;
  const double residual = std::abs(to_complex(sum));
  const bool consistent =
      scalar_traits<S>::exact ? is_zero(sum) : residual <= kConsistencyTolerance;
  return Candidate<S>{MeroSeries<S>(std::move(b)), consistent, residual};
}

// Float candidate from atom lists; fill_depth defaults to the full order.
Candidate<Complex> solve_candidate(const CaratheodoryAtoms& p_atoms, const CaratheodoryAtoms& q_atoms,
                                   const ClassParams& params, std::size_t order,
                                   std::size_t fill_depth);

inline Candidate<Complex> solve_candidate(const CaratheodoryAtoms& p_atoms,
                                          const CaratheodoryAtoms& q_atoms,
                                          const ClassParams& params, std::size_t order) {
  return solve_candidate(p_atoms, q_atoms, params, order, order);
}

}  // namespace merobound

#endif
