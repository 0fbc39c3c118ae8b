#ifndef MEROBOUND_CARATHEODORY_HPP
#define MEROBOUND_CARATHEODORY_HPP

// Positive-real-part functions on |z| > 1 normalized by p(inf) = 1, built as
// finite convex combinations of the extreme kernels
//
//   p(z) = sum_k w_k (z + e^{i theta_k}) / (z - e^{i theta_k}),
//
// whose coefficients p_n = 2 sum_k w_k e^{i n theta_k} satisfy |p_n| <= 2.

#include <cstdint>
#include <span>
#include <vector>

#include "json.hpp"

#include "merobound/rng.hpp"
#include "merobound/scalar.hpp"
#include "merobound/series.hpp"

namespace merobound {

struct Atom {
  double weight;
  double theta;  // in [0, 2 pi)

  friend bool operator==(const Atom&, const Atom&) = default;
};

class CaratheodoryAtoms {
 public:
  static constexpr double kWeightTolerance = 1e-12;

  // Throws std::invalid_argument unless weights are positive and sum to one
  // within kWeightTolerance and every angle lies in [0, 2 pi).
  explicit CaratheodoryAtoms(std::vector<Atom> atoms);

  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  friend bool operator==(const CaratheodoryAtoms&, const CaratheodoryAtoms&) = default;

 private:
  std::vector<Atom> atoms_;
};

// p_n = 2 sum_k w_k e^{i n theta_k}; n = 0 gives the normalization 1.
Complex coefficient(const CaratheodoryAtoms& atoms, std::size_t n);

ExteriorSeries<Complex> to_exterior_series(const CaratheodoryAtoms& atoms, std::size_t order);

// Closed-form value p(z) = sum w_k (z + u_k)/(z - u_k), u_k = e^{i theta_k}.
Complex evaluate(const CaratheodoryAtoms& atoms, Complex z);

// Weights from normalized exponential draws, angles uniform on [0, 2 pi).
CaratheodoryAtoms random_atoms(std::uint64_t seed, std::size_t n_atoms);
CaratheodoryAtoms random_atoms(Rng& rng, std::size_t n_atoms);

// Same weights with every angle moved by pi: q_n = (-1)^n p_n.
CaratheodoryAtoms antipodal(const CaratheodoryAtoms& atoms);

// m atoms of weight 1/m at the m-th roots of unity: p_n = 0 for 0 < n < m
// up to rounding, the finite stand-in for p = 1.
CaratheodoryAtoms uniform_atoms(std::size_t m);

// Convex mixture t A + (1 - t) B, 0 < t < 1.
CaratheodoryAtoms mix(const CaratheodoryAtoms& a, const CaratheodoryAtoms& b, double t);

double wrap_angle(double theta);

nlohmann::json to_json(const CaratheodoryAtoms& atoms);
CaratheodoryAtoms atoms_from_json(const nlohmann::json& j);

// Exact atoms whose angles are rational multiples of pi. Coefficients are
// exact Gaussian rationals whenever n * theta is a multiple of pi / 2.
struct ExactAtom {
  Rational weight;
  Rational angle_over_pi;  // in [0, 2)
};

class ExactCaratheodoryAtoms {
 public:
  // Weights positive and summing to exactly one; angles in [0, 2).
  explicit ExactCaratheodoryAtoms(std::vector<ExactAtom> atoms);

  std::span<const ExactAtom> atoms() const { return atoms_; }
  CaratheodoryAtoms to_float() const;

 private:
  std::vector<ExactAtom> atoms_;
};

// Throws std::domain_error when some n * theta_k is not a multiple of pi / 2.
RationalComplex coefficient(const ExactCaratheodoryAtoms& atoms, std::size_t n);

ExteriorSeries<RationalComplex> to_exterior_series(const ExactCaratheodoryAtoms& atoms,
                                                   std::size_t order);

}  // namespace merobound

#endif
