#ifndef MEROBOUND_CLASS_PARAMS_HPP
#define MEROBOUND_CLASS_PARAMS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "merobound/scalar.hpp"

namespace merobound {

enum class Variant {
  Starlike,          // Re D[f] > alpha, 0 <= alpha < 1
  StronglyStarlike,  // |arg D[f]| < alpha pi / 2, 0 < alpha <= 1
};

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);

// Parameters (alpha, lambda, mu) of the two classes. R is double for
// numerical work and Rational for exact identity checks.
template <class R>
struct BasicClassParams {
  R alpha;
  R lambda;
  R mu;
  Variant variant = Variant::Starlike;

  friend bool operator==(const BasicClassParams&, const BasicClassParams&) = default;
};

using ClassParams = BasicClassParams<double>;
using ExactClassParams = BasicClassParams<Rational>;

// Reason the parameters fall outside the class domain, if they do:
// lambda >= 1, mu >= 0, lambda > mu, and the alpha range of the variant.
std::optional<std::string> domain_violation(const ClassParams& p);
std::optional<std::string> domain_violation(const ExactClassParams& p);

// Throws std::domain_error on a violation.
void validate(const ClassParams& p);
void validate(const ExactClassParams& p);

// Exact image of the binary64 parameters.
ExactClassParams to_exact(const ClassParams& p);
ClassParams to_double(const ExactClassParams& p);

}  // namespace merobound

#endif
