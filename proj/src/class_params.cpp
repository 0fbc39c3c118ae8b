#include "merobound/class_params.hpp"

#include <cmath>
#include <stdexcept>

namespace merobound {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Starlike:
      return "starlike";
    case Variant::StronglyStarlike:
      return "strongly-starlike";
  }
  return "?";
}

Variant parse_variant(std::string_view text) {
  if (text == "starlike") return Variant::Starlike;
  if (text == "strongly-starlike" || text == "strongly_starlike" || text == "strong") {
    return Variant::StronglyStarlike;
  }
  throw std::invalid_argument("unknown variant '" + std::string(text) +
                              "' (expected starlike or strongly-starlike)");
}

namespace {

template <class R>
std::optional<std::string> check(const R& alpha, const R& lambda, const R& mu, Variant v) {
  if (!(lambda >= 1)) return "lambda must be >= 1";
  if (!(mu >= 0)) return "mu must be >= 0";
  if (!(lambda > mu)) return "lambda must exceed mu";
  if (v == Variant::Starlike && !(alpha >= 0 && alpha < 1)) {
    return "starlike alpha must lie in [0, 1)";
  }
  if (v == Variant::StronglyStarlike && !(alpha > 0 && alpha <= 1)) {
    return "strongly-starlike alpha must lie in (0, 1]";
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> domain_violation(const ClassParams& p) {
  if (!std::isfinite(p.alpha) || !std::isfinite(p.lambda) || !std::isfinite(p.mu)) {
    return "parameters must be finite";
  }
  return check(p.alpha, p.lambda, p.mu, p.variant);
}

std::optional<std::string> domain_violation(const ExactClassParams& p) {
  return check(p.alpha, p.lambda, p.mu, p.variant);
}

void validate(const ClassParams& p) {
  if (auto why = domain_violation(p)) throw std::domain_error(*why);
}

void validate(const ExactClassParams& p) {
  if (auto why = domain_violation(p)) throw std::domain_error(*why);
}

ExactClassParams to_exact(const ClassParams& p) {
  if (!std::isfinite(p.alpha) || !std::isfinite(p.lambda) || !std::isfinite(p.mu)) {
    throw std::domain_error("parameters must be finite");
  }
  return {Rational(p.alpha), Rational(p.lambda), Rational(p.mu), p.variant};
}

ClassParams to_double(const ExactClassParams& p) {
  return {merobound::to_double(p.alpha), merobound::to_double(p.lambda),
          merobound::to_double(p.mu), p.variant};
}

}  // namespace merobound
