#ifndef MEROBOUND_SEARCH_HPP
#define MEROBOUND_SEARCH_HPP

// Randomized search for class members with large |b_0| and |b_1|.
//
// A trial draws Caratheodory atoms p and q (q antipodal to p in half of the
// trials), each damped towards p = 1 by mixing in kUniformAtoms equally
// spaced atoms with a drawn weight, builds a candidate with solve_candidate and keeps it only when
// p_1 + q_1 vanishes, the membership grid passes and the tail rule holds.
// The random phase is followed by hill climbing on the atoms of the two
// incumbents. Trials use seeds derived from (seed, index) and are reduced in
// index order, so the report does not depend on the thread count.

#include <cstdint>
#include <optional>

#include "json.hpp"

#include "merobound/bounds.hpp"
#include "merobound/caratheodory.hpp"
#include "merobound/membership.hpp"

namespace merobound {

inline constexpr double kBoundSlack = 1e-9;
inline constexpr std::size_t kUniformAtoms = 64;

struct SearchConfig {
  std::size_t budget = 10000;
  std::uint64_t seed = 0;
  std::size_t order = 8;
  std::size_t refine_steps = 32;
  std::size_t atoms = 4;  // atom counts are drawn from 1..atoms
  MembershipGrid grid = default_grid();
  int threads = 0;        // 0: OpenMP default

  static MembershipGrid default_grid();
};

std::optional<std::string> config_violation(const SearchConfig& cfg);

// An accepted candidate that exceeds a bound.
struct Witness {
  std::string bound;  // "b0" or "b1"
  double value;
  double limit;
  MeroSeries<Complex> f;
  CaratheodoryAtoms p;
  CaratheodoryAtoms q;
  MembershipReport membership;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct BoundReport {
  ClassParams params;
  BoundPair bounds;
  double empirical_b0_max = 0.0;
  double empirical_b1_max = 0.0;
  double gap_b0 = 0.0;
  double gap_b1 = 0.0;
  std::size_t accepted_candidates = 0;
  std::size_t rejected_inconsistent = 0;
  std::size_t rejected_nonmember = 0;
  std::size_t refine_evaluations = 0;
  std::size_t refine_accepted = 0;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  std::size_t order = 0;
  std::size_t eval_order = 0;
  std::optional<Witness> witness;

  bool falsified() const { return witness.has_value(); }
  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

// Membership evaluation of one proposal, exposed for tests and benchmarks.
struct TrialOutcome {
  enum class Status { Accepted, Inconsistent, NonMember } status;
  double b0_abs = 0.0;
  double b1_abs = 0.0;
};

// Raw atoms and damping weights; the Caratheodory functions used are
// t p + (1 - t) u with u the uniform atoms.
struct Proposal {
  CaratheodoryAtoms p;
  CaratheodoryAtoms q;
  double tp;
  double tq;
  std::size_t fill_depth;
  bool coupled;

  CaratheodoryAtoms damped_p() const;
  CaratheodoryAtoms damped_q() const;
};

Proposal draw_proposal(std::uint64_t seed, const SearchConfig& cfg);

BoundReport search(const ClassParams& params, const SearchConfig& cfg);

// Serial reference of the random phase: accepted, inconsistent and
// non-member counts with the two maxima, trial by trial.
BoundReport search_serial(const ClassParams& params, const SearchConfig& cfg);

nlohmann::json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const nlohmann::json& j);

}  // namespace merobound

#endif
