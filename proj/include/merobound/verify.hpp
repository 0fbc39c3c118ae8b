#ifndef MEROBOUND_VERIFY_HPP
#define MEROBOUND_VERIFY_HPP

// Exact checks of the coefficient identities behind the |b_0|, |b_1|
// estimates. Every identity is polynomial in (b_0, b_1, lambda, mu, alpha,
// p_1, p_2, q_1, q_2), so agreement at many random rational points is
// overwhelming evidence and a single disagreement is a disproof.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "merobound/class_params.hpp"
#include "merobound/scalar.hpp"

namespace merobound {

struct IdentityPoint {
  ExactClassParams params;
  std::vector<Rational> b;  // b_0..b_N; only b_0, b_1 enter the identities
};

struct IdentityOutcome {
  std::string name;
  bool holds;
  Rational lhs;
  Rational rhs;
};

struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::size_t points = 0;
  std::string witness;  // first failing point, empty when passed
};

struct VerificationSummary {
  Variant variant;
  std::size_t trials;
  std::uint64_t seed;
  std::size_t order;
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
};

struct VerifyOptions {
  std::size_t order = 8;
  // Name of one identity whose right-hand side is negated before comparing.
  // Exists so the suite can demonstrate that it detects a wrong sign.
  std::optional<std::string> mutant;
};

std::vector<std::string> identity_names(Variant v);

// All identities of the variant at one point.
std::vector<IdentityOutcome> check_identities(const IdentityPoint& point,
                                              const std::optional<std::string>& mutant = {});

// Random rational point inside the parameter domain of the variant.
IdentityPoint random_identity_point(Variant v, std::uint64_t seed, std::size_t order);

VerificationSummary verify_coefficient_equations(Variant v, std::size_t trials, std::uint64_t seed,
                                                 const VerifyOptions& options = {});

}  // namespace merobound

#endif
