#include "merobound/scalar.hpp"

#include <charconv>
#include <stdexcept>
#include <string>
#include <system_error>

#include <mpfr.h>

namespace merobound {

RationalComplex& RationalComplex::operator+=(const RationalComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

RationalComplex& RationalComplex::operator-=(const RationalComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

RationalComplex& RationalComplex::operator*=(const RationalComplex& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

RationalComplex& RationalComplex::operator/=(const RationalComplex& o) {
  const Rational d = o.norm();
  if (sgn(d) == 0) {
    throw std::domain_error("RationalComplex: division by zero");
  }
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

RationalComplex operator-(const RationalComplex& a) { return {-a.real(), -a.imag()}; }
RationalComplex operator+(RationalComplex a, const RationalComplex& b) { return a += b; }
RationalComplex operator-(RationalComplex a, const RationalComplex& b) { return a -= b; }
RationalComplex operator*(RationalComplex a, const RationalComplex& b) { return a *= b; }
RationalComplex operator/(RationalComplex a, const RationalComplex& b) { return a /= b; }

RationalComplex operator*(const Rational& s, const RationalComplex& a) {
  return {Rational(s * a.real()), Rational(s * a.imag())};
}

RationalComplex operator*(const RationalComplex& a, const Rational& s) { return s * a; }

RationalComplex operator/(const RationalComplex& a, const Rational& s) {
  if (sgn(s) == 0) {
    throw std::domain_error("RationalComplex: division by zero");
  }
  return {Rational(a.real() / s), Rational(a.imag() / s)};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

bool is_exact_literal(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return is_integer_literal(text);
  const auto den = text.substr(slash + 1);
  return is_integer_literal(text.substr(0, slash)) && is_integer_literal(den) &&
         den.front() != '-' && den.front() != '+';
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (!is_exact_literal(text)) {
    throw std::invalid_argument("not an exact rational literal: '" + std::string(text) + "'");
  }
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (const auto slash = s.find('/'); slash != std::string::npos && s[slash + 1] == '+') {
    s.erase(slash + 1, 1);
  }
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("not an exact rational literal: '" + s + "'");
  }
  if (s.find('/') != std::string::npos && sgn(q.get_den()) == 0) {
    throw std::invalid_argument("zero denominator: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double x = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return x;
}

double to_double(const Rational& q) {
  mpfr_t x;
  mpfr_init2(x, 53);
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return d;
}

}  // namespace merobound
