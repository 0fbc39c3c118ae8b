#include "merobound/series_io.hpp"

#include <stdexcept>
#include <string>

namespace merobound {

json coefficient_to_json(const Rational& x) { return to_string(x); }

json coefficient_to_json(const RationalComplex& x) {
  return json{{"re", to_string(x.real())}, {"im", to_string(x.imag())}};
}

json coefficient_to_json(const Complex& x) {
  return json{{"re", format_double(x.real())}, {"im", format_double(x.imag())}};
}

void coefficient_from_json(const json& j, Rational& out) {
  if (!j.is_string()) throw std::invalid_argument("exact coefficient must be a string");
  out = parse_rational(j.get<std::string>());
}

void coefficient_from_json(const json& j, RationalComplex& out) {
  if (j.is_string()) {
    out = RationalComplex(parse_rational(j.get<std::string>()));
    return;
  }
  out = RationalComplex(parse_rational(j.at("re").get<std::string>()),
                        parse_rational(j.at("im").get<std::string>()));
}

void coefficient_from_json(const json& j, Complex& out) {
  if (j.is_string()) {
    out = Complex(parse_double(j.get<std::string>()), 0.0);
    return;
  }
  out = Complex(parse_double(j.at("re").get<std::string>()),
                parse_double(j.at("im").get<std::string>()));
}

}  // namespace merobound
