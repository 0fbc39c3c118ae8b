#ifndef MEROBOUND_SERIES_HPP
#define MEROBOUND_SERIES_HPP

// Truncated series near infinity and near zero.
//
// ExteriorSeries holds c_0 + c_1/z + ... + c_N/z^N. Arithmetic between
// operands of different truncation orders resolves to the smaller order;
// no operation invents coefficients past the order it was given.
//
// MeroSeries holds z + b_0 + b_1/z + ... + b_N/z^N with the leading z
// implicit. AnalyticSeries holds z + a_2 z^2 + ... + a_N z^N.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "merobound/scalar.hpp"

namespace merobound {

template <Scalar S>
class ExteriorSeries {
 public:
  explicit ExteriorSeries(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw std::invalid_argument("ExteriorSeries: needs at least the constant term");
    }
  }

  static ExteriorSeries constant(const S& c, std::size_t order) {
    std::vector<S> v(order + 1, from_int<S>(0));
    v[0] = c;
    return ExteriorSeries(std::move(v));
  }

  static ExteriorSeries one(std::size_t order) { return constant(from_int<S>(1), order); }

  std::size_t order() const { return coeffs_.size() - 1; }
  const S& operator[](std::size_t n) const { return coeffs_[n]; }
  std::span<const S> coeffs() const { return coeffs_; }

  ExteriorSeries truncated(std::size_t order) const {
    if (order > this->order()) {
      throw std::invalid_argument("ExteriorSeries: cannot extend truncation order");
    }
    return ExteriorSeries(std::vector<S>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend bool operator==(const ExteriorSeries&, const ExteriorSeries&) = default;

 private:
  std::vector<S> coeffs_;
};

template <Scalar S>
class MeroSeries {
 public:
  explicit MeroSeries(std::vector<S> b) : b_(std::move(b)) {
    if (b_.empty()) {
      throw std::invalid_argument("MeroSeries: needs at least b_0");
    }
  }

  // f(z) = z, truncated at order N.
  static MeroSeries identity(std::size_t order) {
    return MeroSeries(std::vector<S>(order + 1, from_int<S>(0)));
  }

  std::size_t order() const { return b_.size() - 1; }
  const S& operator[](std::size_t n) const { return b_[n]; }
  std::span<const S> b() const { return b_; }

  // Reads the stored coefficients as the exact Laurent polynomial they
  // describe and extends it with zeros.
  MeroSeries padded(std::size_t order) const {
    if (order < this->order()) {
      throw std::invalid_argument("MeroSeries: padding cannot shrink the order");
    }
    std::vector<S> v = b_;
    v.resize(order + 1, from_int<S>(0));
    return MeroSeries(std::move(v));
  }

  MeroSeries truncated(std::size_t order) const {
    if (order > this->order()) {
      throw std::invalid_argument("MeroSeries: cannot extend truncation order");
    }
    return MeroSeries(std::vector<S>(b_.begin(), b_.begin() + order + 1));
  }

  friend bool operator==(const MeroSeries&, const MeroSeries&) = default;

 private:
  std::vector<S> b_;
};

template <Scalar S>
class AnalyticSeries {
 public:
  // a = (a_2, ..., a_N); an empty list is h(z) = z at order 1.
  explicit AnalyticSeries(std::vector<S> a) : a_(std::move(a)) {}

  std::size_t order() const { return a_.size() + 1; }
  // Coefficient of z^n for 2 <= n <= order().
  const S& coeff(std::size_t n) const { return a_.at(n - 2); }
  std::span<const S> a() const { return a_; }

  friend bool operator==(const AnalyticSeries&, const AnalyticSeries&) = default;

 private:
  std::vector<S> a_;
};

template <Scalar S>
ExteriorSeries<S> add(const ExteriorSeries<S>& x, const ExteriorSeries<S>& y) {
  const std::size_t n = std::min(x.order(), y.order());
  std::vector<S> c;
  c.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c.push_back(x[i] + y[i]);
  return ExteriorSeries<S>(std::move(c));
}

template <Scalar S>
ExteriorSeries<S> sub(const ExteriorSeries<S>& x, const ExteriorSeries<S>& y) {
  const std::size_t n = std::min(x.order(), y.order());
  std::vector<S> c;
  c.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c.push_back(x[i] - y[i]);
  return ExteriorSeries<S>(std::move(c));
}

template <Scalar S>
ExteriorSeries<S> scale(const real_t<S>& s, const ExteriorSeries<S>& x) {
  std::vector<S> c;
  c.reserve(x.order() + 1);
  for (const S& v : x.coeffs()) c.push_back(s * v);
  return ExteriorSeries<S>(std::move(c));
}

template <Scalar S>
ExteriorSeries<S> mul(const ExteriorSeries<S>& x, const ExteriorSeries<S>& y) {
  const std::size_t n = std::min(x.order(), y.order());
  std::vector<S> c(n + 1, from_int<S>(0));
  for (std::size_t i = 0; i <= n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += x[i] * y[j];
  }
  return ExteriorSeries<S>(std::move(c));
}

template <Scalar S>
ExteriorSeries<S> operator+(const ExteriorSeries<S>& x, const ExteriorSeries<S>& y) {
  return add(x, y);
}

template <Scalar S>
ExteriorSeries<S> operator-(const ExteriorSeries<S>& x, const ExteriorSeries<S>& y) {
  return sub(x, y);
}

template <Scalar S>
ExteriorSeries<S> operator*(const ExteriorSeries<S>& x, const ExteriorSeries<S>& y) {
  return mul(x, y);
}

namespace detail {

// One step of the power recurrence for v = u^e with u_0 = 1:
//   j v_j = sum_{k=1}^{j} ((e + 1) k - j) u_k v_{j-k}.
// `u` must hold at least j + 1 entries and `v` exactly j entries.
template <Scalar S>
S power_step(std::span<const S> u, std::span<const S> v, const real_t<S>& e, std::size_t j) {
  using R = real_t<S>;
  S acc = from_int<S>(0);
  const R e1 = e + R(1);
  for (std::size_t k = 1; k <= j; ++k) {
    if (is_zero(u[k])) continue;
    const R w = e1 * R(static_cast<long>(k)) - R(static_cast<long>(j));
    acc += w * (u[k] * v[j - k]);
  }
  return acc / R(static_cast<long>(j));
}

}  // namespace detail

// u^e as a formal series. Requires the constant term of u to be exactly
// one, which fixes the branch: the result is sum_k C(e, k) (u - 1)^k.
template <Scalar S>
ExteriorSeries<S> binomial_pow(const ExteriorSeries<S>& u, const real_t<S>& e) {
  if (!(u[0] == from_int<S>(1))) {
    throw std::domain_error("binomial_pow: constant term must be exactly 1");
  }
  std::vector<S> v;
  v.reserve(u.order() + 1);
  v.push_back(from_int<S>(1));
  for (std::size_t j = 1; j <= u.order(); ++j) {
    v.push_back(detail::power_step<S>(u.coeffs(), v, e, j));
  }
  return ExteriorSeries<S>(std::move(v));
}

// d/dz of sum c_n z^{-n}; the result is known through z^{-(N+1)}.
template <Scalar S>
ExteriorSeries<S> derivative(const ExteriorSeries<S>& s) {
  using R = real_t<S>;
  std::vector<S> c(s.order() + 2, from_int<S>(0));
  for (std::size_t n = 1; n <= s.order(); ++n) {
    c[n + 1] = R(-static_cast<long>(n)) * s[n];
  }
  return ExteriorSeries<S>(std::move(c));
}

// f'(z) = 1 - sum_{n>=1} n b_n z^{-(n+1)}, reported at order N + 1.
template <Scalar S>
ExteriorSeries<S> derivative(const MeroSeries<S>& f) {
  using R = real_t<S>;
  std::vector<S> c(f.order() + 2, from_int<S>(0));
  c[0] = from_int<S>(1);
  for (std::size_t n = 1; n <= f.order(); ++n) {
    c[n + 1] = R(-static_cast<long>(n)) * f[n];
  }
  return ExteriorSeries<S>(std::move(c));
}

// f(z)/z = 1 + b_0/z + ... + b_{N-1}/z^N, kept at the order of f.
template <Scalar S>
ExteriorSeries<S> over_z(const MeroSeries<S>& f) {
  std::vector<S> c;
  c.reserve(f.order() + 1);
  c.push_back(from_int<S>(1));
  for (std::size_t n = 0; n < f.order(); ++n) c.push_back(f[n]);
  return ExteriorSeries<S>(std::move(c));
}

// Compositional inverse g with f(g(w)) = w + O(w^{-(N+1)}).
//
// Writing g(w) = w h(1/w), h = 1 + B_0 t + B_1 t^2 + ..., the t^m coefficient
// of f(g(w)) is B_m + [m = 0] b_0 + sum_{n=1}^{m} b_n [t^{m-n}] h^{-n}.
// The bracketed terms depend only on B_0..B_{m-2}, so each B_m is solved
// directly. The powers h^{-n} are grown one coefficient per step.
template <Scalar S>
MeroSeries<S> revert_mero(const MeroSeries<S>& f) {
  using R = real_t<S>;
  const std::size_t N = f.order();
  std::vector<S> B(N + 1, from_int<S>(0));
  std::vector<S> h(N + 1, from_int<S>(0));  // h_0 = 1, h_k = B_{k-1}
  h[0] = from_int<S>(1);
  std::vector<std::vector<S>> inv_pow(N + 1);  // inv_pow[n] = h^{-n}, grown lazily

  for (std::size_t m = 0; m <= N; ++m) {
    if (m >= 1) h[m] = B[m - 1];
    S acc = (m == 0) ? f[0] : from_int<S>(0);
    for (std::size_t n = 1; n <= m; ++n) {
      auto& pw = inv_pow[n];
      const std::size_t j = m - n;
      if (pw.empty()) pw.push_back(from_int<S>(1));
      while (pw.size() <= j) {
        const std::size_t next = pw.size();
        pw.push_back(detail::power_step<S>(std::span<const S>(h.data(), next + 1), pw,
                                           R(-static_cast<long>(n)), next));
      }
      if (!is_zero(f[n])) acc += f[n] * pw[j];
    }
    B[m] = from_int<S>(0) - acc;
  }
  return MeroSeries<S>(std::move(B));
}

// Compositional inverse H with h(H(w)) = w + O(w^{N+1}); same scheme as
// revert_mero with H(w) = w k(w) and positive powers of k.
template <Scalar S>
AnalyticSeries<S> revert_analytic(const AnalyticSeries<S>& h) {
  using R = real_t<S>;
  const std::size_t N = h.order();
  if (N < 2) return AnalyticSeries<S>({});
  std::vector<S> A(N + 1, from_int<S>(0));  // A[m] for 2 <= m <= N
  std::vector<S> k(N, from_int<S>(0));      // k_0 = 1, k_j = A_{j+1}
  k[0] = from_int<S>(1);
  std::vector<std::vector<S>> pow_k(N + 1);

  for (std::size_t m = 2; m <= N; ++m) {
    if (m >= 3) k[m - 2] = A[m - 1];
    S acc = from_int<S>(0);
    for (std::size_t n = 2; n <= m; ++n) {
      auto& pw = pow_k[n];
      const std::size_t j = m - n;
      if (pw.empty()) pw.push_back(from_int<S>(1));
      while (pw.size() <= j) {
        const std::size_t next = pw.size();
        pw.push_back(detail::power_step<S>(std::span<const S>(k.data(), next + 1), pw,
                                           R(static_cast<long>(n)), next));
      }
      const S& an = h.coeff(n);
      if (!is_zero(an)) acc += an * pw[j];
    }
    A[m] = from_int<S>(0) - acc;
  }
  return AnalyticSeries<S>(std::vector<S>(A.begin() + 2, A.end()));
}

// Reciprocal of a series with unit constant term by long division.
template <Scalar S>
ExteriorSeries<S> reciprocal(const ExteriorSeries<S>& u) {
  if (!(u[0] == from_int<S>(1))) {
    throw std::domain_error("reciprocal: constant term must be exactly 1");
  }
  std::vector<S> r(u.order() + 1, from_int<S>(0));
  r[0] = from_int<S>(1);
  for (std::size_t n = 1; n <= u.order(); ++n) {
    S acc = from_int<S>(0);
    for (std::size_t k = 1; k <= n; ++k) acc += u[k] * r[n - k];
    r[n] = from_int<S>(0) - acc;
  }
  return ExteriorSeries<S>(std::move(r));
}

// f(g(w)) as w + sum c_n w^{-n}. Expands each g^{-n} by plain repeated
// multiplication of the reciprocal, independently of revert_mero.
template <Scalar S>
MeroSeries<S> compose_mero(const MeroSeries<S>& f, const MeroSeries<S>& g) {
  if (f.order() != g.order()) {
    throw std::invalid_argument("compose_mero: orders must match");
  }
  const std::size_t N = f.order();
  const ExteriorSeries<S> h = over_z(g);  // g(w)/w
  const ExteriorSeries<S> hinv = reciprocal(h);
  std::vector<S> c(g.b().begin(), g.b().end());
  c[0] += f[0];
  ExteriorSeries<S> pw = ExteriorSeries<S>::one(N);  // h^{-n}
  for (std::size_t n = 1; n <= N; ++n) {
    pw = mul(pw, hinv);
    for (std::size_t m = n; m <= N; ++m) c[m] += f[n] * pw[m - n];
  }
  return MeroSeries<S>(std::move(c));
}

// h(H(w)) as w + sum c_n w^n, by repeated multiplication.
template <Scalar S>
AnalyticSeries<S> compose_analytic(const AnalyticSeries<S>& h, const AnalyticSeries<S>& H) {
  if (h.order() != H.order()) {
    throw std::invalid_argument("compose_analytic: orders must match");
  }
  const std::size_t N = h.order();
  if (N < 2) return AnalyticSeries<S>({});
  // Work with t-series of H(w)/w = 1 + A_2 w + ...
  std::vector<S> kv(N, from_int<S>(0));
  kv[0] = from_int<S>(1);
  for (std::size_t j = 1; j < N; ++j) kv[j] = H.coeff(j + 1);
  const ExteriorSeries<S> k(std::move(kv));
  std::vector<S> c(N + 1, from_int<S>(0));
  for (std::size_t m = 2; m <= N; ++m) c[m] = H.coeff(m);
  ExteriorSeries<S> pw = k;
  for (std::size_t n = 2; n <= N; ++n) {
    pw = mul(pw, k);  // k^n
    for (std::size_t m = n; m <= N; ++m) c[m] += h.coeff(n) * pw[m - n];
  }
  return AnalyticSeries<S>(std::vector<S>(c.begin() + 2, c.end()));
}

// Horner evaluation in 1/z.
inline Complex evaluate(std::span<const Complex> coeffs, Complex z) {
  const Complex t = 1.0 / z;
  Complex acc{0.0, 0.0};
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
  return acc;
}

inline Complex evaluate(const ExteriorSeries<Complex>& s, Complex z) {
  return evaluate(s.coeffs(), z);
}

// f(z) = z + sum b_n z^{-n} at a point.
inline Complex evaluate(const MeroSeries<Complex>& f, Complex z) { return z + evaluate(f.b(), z); }

template <Scalar S>
ExteriorSeries<Complex> to_complex(const ExteriorSeries<S>& s) {
  std::vector<Complex> c;
  c.reserve(s.order() + 1);
  for (const S& v : s.coeffs()) c.push_back(to_complex(v));
  return ExteriorSeries<Complex>(std::move(c));
}

template <Scalar S>
MeroSeries<Complex> to_complex(const MeroSeries<S>& s) {
  std::vector<Complex> c;
  c.reserve(s.order() + 1);
  for (const S& v : s.b()) c.push_back(to_complex(v));
  return MeroSeries<Complex>(std::move(c));
}

}  // namespace merobound

#endif
