#ifndef MEROBOUND_KERNELS_GRID_COMMON_HPP
#define MEROBOUND_KERNELS_GRID_COMMON_HPP

#include "merobound/membership.hpp"

namespace merobound::kernels::detail {

inline bool before(double m, std::size_t i, const GridMin& best) {
  return m < best.margin || (m == best.margin && i < best.index);
}

inline double sample_margin(const GridProblem& p, std::size_t s) {
  const std::size_t A = p.roots.size();
  const std::size_t R = p.radii.size();
  const std::size_t k = s % A;
  const std::size_t ri = (s / A) % R;
  const std::size_t which = s / (A * R);
  const Complex z = p.radii[ri] * p.roots[k];
  return class_margin(evaluate(which == 0 ? p.df : p.dg, z), p.params);
}

}  // namespace merobound::kernels::detail

#endif
