#ifndef MEROBOUND_CLASS_OPERATORS_HPP
#define MEROBOUND_CLASS_OPERATORS_HPP

#include "merobound/class_params.hpp"
#include "merobound/series.hpp"

namespace merobound {

// D[f](z) = (1 - lambda) (f/z)^mu + lambda f'(z) (f/z)^(mu - 1), truncated
// to the order of f. The constant term is exactly one.
template <Scalar S>
ExteriorSeries<S> operator_series(const MeroSeries<S>& f, const BasicClassParams<real_t<S>>& p) {
  using R = real_t<S>;
  const std::size_t N = f.order();
  const ExteriorSeries<S> u = over_z(f);
  const ExteriorSeries<S> fprime = derivative(f).truncated(N);
  const ExteriorSeries<S> second = scale(p.lambda, mul(fprime, binomial_pow(u, R(p.mu - R(1)))));
  if (p.lambda == R(1)) return second;
  return add(scale(R(R(1) - p.lambda), binomial_pow(u, p.mu)), second);
}

}  // namespace merobound

#endif
