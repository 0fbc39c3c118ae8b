#include "merobound/search.hpp"

#include <algorithm>
#include <cmath>

#include <omp.h>

#include "merobound/candidate.hpp"
#include "merobound/rng.hpp"
#include "merobound/series_io.hpp"

namespace merobound {

namespace {

constexpr std::uint64_t kRefineStream = 0x5eed0f2efe11edULL;

struct Evaluated {
  TrialOutcome outcome;
  std::optional<Candidate<Complex>> candidate;
  MembershipReport membership;
};

Evaluated evaluate_proposal(const Proposal& pr, const ClassParams& params, const SearchConfig& cfg) {
  Evaluated e;
  auto cand = solve_candidate(pr.damped_p(), pr.damped_q(), params, cfg.order, pr.fill_depth);
  if (!cand.consistent) {
    e.outcome.status = TrialOutcome::Status::Inconsistent;
    return e;
  }
  e.membership = membership_check(cand.f, params, cfg.grid, Exec::Serial);
  const bool ok = e.membership.is_member && !e.membership.heuristic;
  e.outcome.status = ok ? TrialOutcome::Status::Accepted : TrialOutcome::Status::NonMember;
  e.outcome.b0_abs = std::abs(cand.f.b()[0]);
  e.outcome.b1_abs = std::abs(cand.f.b()[1]);
  e.candidate = std::move(cand);
  return e;
}

class Reducer {
 public:
  Reducer(BoundReport& r) : r_(r) {}

  void take(const Proposal& pr, const Evaluated& e) {
    if (e.outcome.status != TrialOutcome::Status::Accepted) return;
    r_.empirical_b0_max = std::max(r_.empirical_b0_max, e.outcome.b0_abs);
    r_.empirical_b1_max = std::max(r_.empirical_b1_max, e.outcome.b1_abs);
    if (r_.witness) return;
    const auto& bd = r_.bounds;
    if (e.outcome.b0_abs > bd.b0_bound + kBoundSlack) {
      r_.witness = Witness{"b0", e.outcome.b0_abs, bd.b0_bound, e.candidate->f, pr.damped_p(), pr.damped_q(), e.membership};
    } else if (e.outcome.b1_abs > bd.b1_bound + kBoundSlack) {
      r_.witness = Witness{"b1", e.outcome.b1_abs, bd.b1_bound, e.candidate->f, pr.damped_p(), pr.damped_q(), e.membership};
    }
  }

 private:
  BoundReport& r_;
};

CaratheodoryAtoms nudge(const CaratheodoryAtoms& a, std::size_t coord, double delta) {
  std::vector<Atom> v(a.atoms().begin(), a.atoms().end());
  Atom& atom = v[coord / 2];
  if (coord % 2 == 0) {
    atom.theta = wrap_angle(atom.theta + delta);
  } else {
    atom.weight = std::max(atom.weight + delta, 1e-6);
    double total = 0.0;
    for (const Atom& x : v) total += x.weight;
    for (Atom& x : v) x.weight /= total;
  }
  return CaratheodoryAtoms(std::move(v));
}

double nudge_weight(double t, double delta) { return std::clamp(t + delta, 1e-3, 1.0); }

// Coordinates: angle and weight of each p atom, the damping of p, then the
// same for q when q is drawn independently.
Proposal perturb(const Proposal& pr, Rng& rng, double step) {
  const std::size_t np = 2 * pr.p.size() + 1;
  const std::size_t nq = pr.coupled ? 0 : 2 * pr.q.size() + 1;
  const std::size_t c = rng.below(np + nq);
  const double delta = rng.coin() ? step : -step;
  Proposal out = pr;
  if (c + 1 == np) {
    out.tp = nudge_weight(pr.tp, delta);
  } else if (c < np) {
    out.p = nudge(pr.p, c, delta);
  } else if (c + 1 == np + nq) {
    out.tq = nudge_weight(pr.tq, delta);
  } else {
    out.q = nudge(pr.q, c - np, delta);
  }
  if (pr.coupled) {
    out.q = antipodal(out.p);
    out.tq = out.tp;
  }
  return out;
}

void refine(const ClassParams& params, const SearchConfig& cfg, Proposal incumbent, double value,
            bool b1_objective, BoundReport& report, Reducer& red) {
  Rng rng(derive_seed(cfg.seed ^ kRefineStream, b1_objective ? 1 : 0));
  double step = 0.05;
  for (std::size_t s = 0; s < cfg.refine_steps; ++s) {
    const Proposal trial = perturb(incumbent, rng, step);
    const Evaluated e = evaluate_proposal(trial, params, cfg);
    ++report.refine_evaluations;
    const bool ok = e.outcome.status == TrialOutcome::Status::Accepted;
    if (ok) {
      ++report.refine_accepted;
      red.take(trial, e);
    }
    const double v = b1_objective ? e.outcome.b1_abs : e.outcome.b0_abs;
    if (ok && v > value) {
      incumbent = trial;
      value = v;
    } else {
      step *= 0.7;
    }
  }
}

BoundReport run(const ClassParams& params, const SearchConfig& cfg, bool parallel) {
  validate(params);
  if (auto msg = config_violation(cfg)) throw std::invalid_argument(*msg);

  BoundReport report;
  report.params = params;
  report.bounds = bound_pair(params);
  report.seed = cfg.seed;
  report.budget = cfg.budget;
  report.order = cfg.order;
  report.eval_order = cfg.grid.eval_order;

  std::vector<Proposal> proposals;
  proposals.reserve(cfg.budget);
  for (std::size_t t = 0; t < cfg.budget; ++t) {
    proposals.push_back(draw_proposal(derive_seed(cfg.seed, t), cfg));
  }
  std::vector<Evaluated> results(cfg.budget);
  const auto n = static_cast<std::int64_t>(cfg.budget);
  if (parallel) {
    const int nt = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
    for (std::int64_t t = 0; t < n; ++t) {
      results[static_cast<std::size_t>(t)] =
          evaluate_proposal(proposals[static_cast<std::size_t>(t)], params, cfg);
    }
  } else {
    for (std::int64_t t = 0; t < n; ++t) {
      results[static_cast<std::size_t>(t)] =
          evaluate_proposal(proposals[static_cast<std::size_t>(t)], params, cfg);
    }
  }

  Reducer red(report);
  std::optional<std::size_t> best0, best1;
  for (std::size_t t = 0; t < cfg.budget; ++t) {
    const Evaluated& e = results[t];
    switch (e.outcome.status) {
      case TrialOutcome::Status::Inconsistent:
        ++report.rejected_inconsistent;
        continue;
      case TrialOutcome::Status::NonMember:
        ++report.rejected_nonmember;
        continue;
      case TrialOutcome::Status::Accepted:
        ++report.accepted_candidates;
        break;
    }
    red.take(proposals[t], e);
    if (!best0 || e.outcome.b0_abs > results[*best0].outcome.b0_abs) best0 = t;
    if (!best1 || e.outcome.b1_abs > results[*best1].outcome.b1_abs) best1 = t;
  }

  if (best0) refine(params, cfg, proposals[*best0], results[*best0].outcome.b0_abs, false, report, red);
  if (best1) refine(params, cfg, proposals[*best1], results[*best1].outcome.b1_abs, true, report, red);

  report.gap_b0 = report.bounds.b0_bound - report.empirical_b0_max;
  report.gap_b1 = report.bounds.b1_bound - report.empirical_b1_max;
  return report;
}

nlohmann::json witness_json(const Witness& w) {
  return {{"bound", w.bound},
          {"value", w.value},
          {"limit", w.limit},
          {"f", to_json(w.f)},
          {"p", to_json(w.p)},
          {"q", to_json(w.q)},
          {"membership", to_json(w.membership)}};
}

Witness witness_from_json(const nlohmann::json& j) {
  return {j.at("bound").get<std::string>(),
          j.at("value").get<double>(),
          j.at("limit").get<double>(),
          mero_from_json<Complex>(j.at("f")),
          atoms_from_json(j.at("p")),
          atoms_from_json(j.at("q")),
          membership_report_from_json(j.at("membership"))};
}

}  // namespace

MembershipGrid SearchConfig::default_grid() {
  MembershipGrid g;
  g.eval_order = 24;
  g.skip_when_heuristic = true;
  return g;
}

std::optional<std::string> config_violation(const SearchConfig& cfg) {
  if (cfg.budget < 1) return "budget must be >= 1";
  if (cfg.order < 4) return "order must be >= 4";
  if (cfg.atoms < 1) return "atom count must be >= 1";
  if (cfg.grid.radii.empty() || cfg.grid.angles == 0) return "membership grid is empty";
  return std::nullopt;
}

namespace {

CaratheodoryAtoms damp(const CaratheodoryAtoms& a, double t) {
  if (t >= 1.0) return a;
  static const CaratheodoryAtoms u = uniform_atoms(kUniformAtoms);
  return mix(a, u, t);
}

}  // namespace

CaratheodoryAtoms Proposal::damped_p() const { return damp(p, tp); }
CaratheodoryAtoms Proposal::damped_q() const { return damp(q, tq); }

Proposal draw_proposal(std::uint64_t seed, const SearchConfig& cfg) {
  Rng rng(seed);
  const bool coupled = rng.coin();
  const std::size_t fill = 1 + rng.below(cfg.order);
  CaratheodoryAtoms p = random_atoms(rng, 1 + rng.below(cfg.atoms));
  const double tp = rng.uniform_open0();
  if (coupled) {
    CaratheodoryAtoms q = antipodal(p);
    return {std::move(p), std::move(q), tp, tp, fill, true};
  }
  CaratheodoryAtoms q = random_atoms(rng, 1 + rng.below(cfg.atoms));
  const double tq = rng.uniform_open0();
  return {std::move(p), std::move(q), tp, tq, fill, false};
}

BoundReport search(const ClassParams& params, const SearchConfig& cfg) { return run(params, cfg, true); }

BoundReport search_serial(const ClassParams& params, const SearchConfig& cfg) {
  return run(params, cfg, false);
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["params"] = to_json(r.params);
  j["bounds"] = to_json(r.bounds);
  j["empirical_b0_max"] = r.empirical_b0_max;
  j["empirical_b1_max"] = r.empirical_b1_max;
  j["gap_b0"] = r.gap_b0;
  j["gap_b1"] = r.gap_b1;
  j["accepted_candidates"] = r.accepted_candidates;
  j["rejected_inconsistent"] = r.rejected_inconsistent;
  j["rejected_nonmember"] = r.rejected_nonmember;
  j["refine_evaluations"] = r.refine_evaluations;
  j["refine_accepted"] = r.refine_accepted;
  j["seed"] = r.seed;
  j["budget"] = r.budget;
  j["order"] = r.order;
  j["eval_order"] = r.eval_order;
  j["falsified"] = r.falsified();
  j["witness"] = r.witness ? witness_json(*r.witness) : nlohmann::json();
  j["univalence_checked"] = false;
  return j;
}

BoundReport bound_report_from_json(const nlohmann::json& j) {
  BoundReport r;
  r.params = class_params_from_json(j.at("params"));
  r.bounds = bound_pair_from_json(j.at("bounds"));
  r.empirical_b0_max = j.at("empirical_b0_max").get<double>();
  r.empirical_b1_max = j.at("empirical_b1_max").get<double>();
  r.gap_b0 = j.at("gap_b0").get<double>();
  r.gap_b1 = j.at("gap_b1").get<double>();
  r.accepted_candidates = j.at("accepted_candidates").get<std::size_t>();
  r.rejected_inconsistent = j.at("rejected_inconsistent").get<std::size_t>();
  r.rejected_nonmember = j.at("rejected_nonmember").get<std::size_t>();
  r.refine_evaluations = j.at("refine_evaluations").get<std::size_t>();
  r.refine_accepted = j.at("refine_accepted").get<std::size_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.budget = j.at("budget").get<std::size_t>();
  r.order = j.at("order").get<std::size_t>();
  r.eval_order = j.at("eval_order").get<std::size_t>();
  if (!j.at("witness").is_null()) r.witness = witness_from_json(j.at("witness"));
  return r;
}

}  // namespace merobound
