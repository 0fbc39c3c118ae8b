#include <limits>

#include "grid_common.hpp"

namespace merobound::kernels {

GridMin grid_min_serial(const GridProblem& p) {
  const std::size_t total = 2 * p.radii.size() * p.roots.size();
  GridMin best{std::numeric_limits<double>::infinity(), total};
  for (std::size_t s = 0; s < total; ++s) {
    const double m = detail::sample_margin(p, s);
    if (detail::before(m, s, best)) best = {m, s};
  }
  return best;
}

}  // namespace merobound::kernels
