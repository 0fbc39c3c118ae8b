#ifndef MEROBOUND_SCALAR_HPP
#define MEROBOUND_SCALAR_HPP

#include <complex>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace merobound {

using Rational = mpq_class;
using Complex = std::complex<double>;

// Exact Gaussian-rational scalar. Only the field operations needed by the
// series engine are provided.
class RationalComplex {
 public:
  RationalComplex() = default;
  RationalComplex(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  RationalComplex(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  RationalComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  RationalComplex conj() const { return {re_, -im_}; }
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

  RationalComplex& operator+=(const RationalComplex& o);
  RationalComplex& operator-=(const RationalComplex& o);
  RationalComplex& operator*=(const RationalComplex& o);
  RationalComplex& operator/=(const RationalComplex& o);

  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

RationalComplex operator-(const RationalComplex& a);
RationalComplex operator+(RationalComplex a, const RationalComplex& b);
RationalComplex operator-(RationalComplex a, const RationalComplex& b);
RationalComplex operator*(RationalComplex a, const RationalComplex& b);
RationalComplex operator/(RationalComplex a, const RationalComplex& b);
RationalComplex operator*(const Rational& s, const RationalComplex& a);
RationalComplex operator*(const RationalComplex& a, const Rational& s);
RationalComplex operator/(const RationalComplex& a, const Rational& s);

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  using real_type = Rational;
  static constexpr bool exact = true;
  static Rational from_real(const Rational& r) { return r; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Complex to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
};

template <>
struct scalar_traits<RationalComplex> {
  using real_type = Rational;
  static constexpr bool exact = true;
  static RationalComplex from_real(const Rational& r) { return RationalComplex(r); }
  static bool is_zero(const RationalComplex& x) {
    return sgn(x.real()) == 0 && sgn(x.imag()) == 0;
  }
  static Complex to_complex(const RationalComplex& x) {
    return {x.real().get_d(), x.imag().get_d()};
  }
};

template <>
struct scalar_traits<Complex> {
  using real_type = double;
  static constexpr bool exact = false;
  static Complex from_real(double r) { return {r, 0.0}; }
  static bool is_zero(const Complex& x) { return x == Complex{}; }
  static Complex to_complex(const Complex& x) { return x; }
};

// The three coefficient fields the series engine is instantiated over.
template <class S>
concept Scalar = requires(const S& a, const S& b, const typename scalar_traits<S>::real_type& r) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { r * a } -> std::convertible_to<S>;
  { a / r } -> std::convertible_to<S>;
};

template <Scalar S>
using real_t = typename scalar_traits<S>::real_type;

template <Scalar S>
S from_real(const real_t<S>& r) {
  return scalar_traits<S>::from_real(r);
}

template <Scalar S>
S from_int(long n) {
  return scalar_traits<S>::from_real(real_t<S>(n));
}

template <Scalar S>
bool is_zero(const S& x) {
  return scalar_traits<S>::is_zero(x);
}

template <Scalar S>
Complex to_complex(const S& x) {
  return scalar_traits<S>::to_complex(x);
}

// Parses "a", "-a/b" (exact). Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

// True when text uses exact syntax (integer or a/b), false for decimals.
bool is_exact_literal(std::string_view text);

// Canonical "num/den" rendering; integers print without a denominator.
std::string to_string(const Rational& q);

// 17 significant digits, '.' separator, independent of locale.
std::string format_double(double x);

double parse_double(std::string_view text);

// Correctly rounded conversion of an exact rational to binary64.
double to_double(const Rational& q);

}  // namespace merobound

#endif
