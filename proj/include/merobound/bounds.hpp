#ifndef MEROBOUND_BOUNDS_HPP
#define MEROBOUND_BOUNDS_HPP

// Closed-form estimates for |b_0| and |b_1|.
//
//   starlike:          |b_0| <= 2(1 - a)/(l - m)
//                      |b_1| <= 2(1 - a) sqrt((1 - m)^2 (1 - a)^2/(l - m)^4 + 1/(2l - m)^2)
//   strongly starlike: |b_0| <= 2a/(l - m)
//                      |b_1| <= 2a^2 sqrt(1/(2l - m)^2 + (1 - m)^2/(l - m)^4)
//
// Everything up to the final square root is exact.

#include <string>
#include <vector>

#include "json.hpp"

#include "merobound/class_params.hpp"
#include "merobound/scalar.hpp"

namespace merobound {

struct BoundPair {
  double b0_bound;
  double b1_bound;
  ClassParams params;

  friend bool operator==(const BoundPair&, const BoundPair&) = default;
};

struct ExactBounds {
  Rational b0;
  Rational b1_squared;
};

ExactBounds exact_bounds(const ExactClassParams& p);

// The two summands under the root of the b_1 bound, scaled by the prefactor
// squared so that b1_squared = first + second.
std::pair<Rational, Rational> b1_square_terms(const ExactClassParams& p);

// Binary64 nearest to sqrt(q), q >= 0, ties to even.
double sqrt_nearest(const Rational& q);

BoundPair bound_pair(const ExactClassParams& p);
BoundPair bound_pair(const ClassParams& p);  // the doubles are taken as exact

struct ReductionRow {
  Variant variant;
  Rational alpha;
  BoundPair general;     // bound_pair at lambda = 1, mu = 0
  double b0_special;
  double b1_special;
  bool agrees;
};

// bound_pair at lambda = 1, mu = 0 against the one-parameter forms
// (2(1 - a), (1 - a) sqrt(4(1 - a)^2 + 1)) and (2a, sqrt(5) a^2) on the
// alpha grid k/20.
std::vector<ReductionRow> reduction_check();

std::string bounds_csv_header();
std::string to_csv_row(const BoundPair& b);
nlohmann::json to_json(const BoundPair& b);
BoundPair bound_pair_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClassParams& p);
ClassParams class_params_from_json(const nlohmann::json& j);

}  // namespace merobound

#endif
