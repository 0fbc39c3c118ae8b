#ifndef MEROBOUND_SERIES_IO_HPP
#define MEROBOUND_SERIES_IO_HPP

// JSON form of series: an array of coefficient strings. Exact rationals are
// written "num/den"; complex coefficients as {"re": "...", "im": "..."}.

#include <span>
#include <vector>

#include "json.hpp"

#include "merobound/scalar.hpp"
#include "merobound/series.hpp"

namespace merobound {

using json = nlohmann::json;

json coefficient_to_json(const Rational& x);
json coefficient_to_json(const RationalComplex& x);
json coefficient_to_json(const Complex& x);

void coefficient_from_json(const json& j, Rational& out);
void coefficient_from_json(const json& j, RationalComplex& out);
void coefficient_from_json(const json& j, Complex& out);

template <Scalar S>
json coefficients_to_json(std::span<const S> c) {
  json arr = json::array();
  for (const S& x : c) arr.push_back(coefficient_to_json(x));
  return arr;
}

template <Scalar S>
std::vector<S> coefficients_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("series JSON must be an array");
  std::vector<S> out(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) coefficient_from_json(j[i], out[i]);
  return out;
}

template <Scalar S>
json to_json(const ExteriorSeries<S>& s) {
  return coefficients_to_json<S>(s.coeffs());
}

template <Scalar S>
json to_json(const MeroSeries<S>& f) {
  return coefficients_to_json<S>(f.b());
}

template <Scalar S>
json to_json(const AnalyticSeries<S>& h) {
  return coefficients_to_json<S>(h.a());
}

template <Scalar S>
ExteriorSeries<S> exterior_from_json(const json& j) {
  return ExteriorSeries<S>(coefficients_from_json<S>(j));
}

template <Scalar S>
MeroSeries<S> mero_from_json(const json& j) {
  return MeroSeries<S>(coefficients_from_json<S>(j));
}

template <Scalar S>
AnalyticSeries<S> analytic_from_json(const json& j) {
  return AnalyticSeries<S>(coefficients_from_json<S>(j));
}

}  // namespace merobound

#endif
