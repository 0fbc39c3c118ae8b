#include "merobound/candidate.hpp"

namespace merobound {

Candidate<Complex> solve_candidate(const CaratheodoryAtoms& p_atoms, const CaratheodoryAtoms& q_atoms,
                                   const ClassParams& params, std::size_t order,
                                   std::size_t fill_depth) {
  fill_depth = std::min(fill_depth, order);
  const std::size_t p_order = std::max<std::size_t>(fill_depth + 1, 2);
  return solve_candidate(to_exterior_series(p_atoms, p_order), to_exterior_series(q_atoms, 2),
                         params, order, fill_depth);
}

}  // namespace merobound
