#include <limits>

#include <omp.h>

#include "grid_common.hpp"

namespace merobound::kernels {

GridMin grid_min_omp(const GridProblem& p, int threads) {
  const std::size_t total = 2 * p.radii.size() * p.roots.size();
  const int nt = threads > 0 ? threads : omp_get_max_threads();
  const GridMin none{std::numeric_limits<double>::infinity(), total};
  std::vector<GridMin> local(static_cast<std::size_t>(nt), none);

#pragma omp parallel num_threads(nt)
  {
    GridMin best = none;
#pragma omp for schedule(static)
    for (std::size_t s = 0; s < total; ++s) {
      const double m = detail::sample_margin(p, s);
      if (detail::before(m, s, best)) best = {m, s};
    }
    local[static_cast<std::size_t>(omp_get_thread_num())] = best;
  }

  GridMin best = none;
  for (const auto& b : local) {
    if (detail::before(b.margin, b.index, best)) best = b;
  }
  return best;
}

}  // namespace merobound::kernels
