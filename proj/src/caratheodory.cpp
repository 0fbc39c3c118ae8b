#include "merobound/caratheodory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace merobound {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

CaratheodoryAtoms::CaratheodoryAtoms(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("CaratheodoryAtoms: need at least one atom");
  double total = 0.0;
  for (const Atom& a : atoms_) {
    if (!(a.weight > 0.0) || !std::isfinite(a.weight)) {
      throw std::invalid_argument("CaratheodoryAtoms: weights must be positive");
    }
    if (!(a.theta >= 0.0 && a.theta < kTwoPi)) {
      throw std::invalid_argument("CaratheodoryAtoms: angles must lie in [0, 2pi)");
    }
    total += a.weight;
  }
  if (std::abs(total - 1.0) > kWeightTolerance) {
    throw std::invalid_argument("CaratheodoryAtoms: weights must sum to 1");
  }
}

Complex coefficient(const CaratheodoryAtoms& atoms, std::size_t n) {
  if (n == 0) return {1.0, 0.0};
  Complex acc{0.0, 0.0};
  const double nn = static_cast<double>(n);
  for (const Atom& a : atoms.atoms()) acc += a.weight * std::polar(1.0, nn * a.theta);
  return 2.0 * acc;
}

ExteriorSeries<Complex> to_exterior_series(const CaratheodoryAtoms& atoms, std::size_t order) {
  std::vector<Complex> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = coefficient(atoms, n);
  return ExteriorSeries<Complex>(std::move(c));
}

Complex evaluate(const CaratheodoryAtoms& atoms, Complex z) {
  Complex acc{0.0, 0.0};
  for (const Atom& a : atoms.atoms()) {
    const Complex u = std::polar(1.0, a.theta);
    acc += a.weight * (z + u) / (z - u);
  }
  return acc;
}

CaratheodoryAtoms random_atoms(Rng& rng, std::size_t n_atoms) {
  if (n_atoms == 0) throw std::invalid_argument("random_atoms: n_atoms must be >= 1");
  std::vector<Atom> atoms(n_atoms);
  double total = 0.0;
  for (Atom& a : atoms) {
    a.weight = -std::log(rng.uniform_open0()) + 1e-300;
    a.theta = wrap_angle(kTwoPi * rng.uniform());
    total += a.weight;
  }
  for (Atom& a : atoms) a.weight /= total;
  return CaratheodoryAtoms(std::move(atoms));
}

CaratheodoryAtoms random_atoms(std::uint64_t seed, std::size_t n_atoms) {
  Rng rng(seed);
  return random_atoms(rng, n_atoms);
}

CaratheodoryAtoms antipodal(const CaratheodoryAtoms& atoms) {
  std::vector<Atom> out(atoms.atoms().begin(), atoms.atoms().end());
  for (Atom& a : out) a.theta = wrap_angle(a.theta + std::numbers::pi);
  return CaratheodoryAtoms(std::move(out));
}

CaratheodoryAtoms uniform_atoms(std::size_t m) {
  if (m == 0) throw std::invalid_argument("uniform_atoms: m must be >= 1");
  std::vector<Atom> out;
  out.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    out.push_back({1.0 / static_cast<double>(m),
                   wrap_angle(kTwoPi * static_cast<double>(k) / static_cast<double>(m))});
  }
  return CaratheodoryAtoms(std::move(out));
}

CaratheodoryAtoms mix(const CaratheodoryAtoms& a, const CaratheodoryAtoms& b, double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("mix: t must lie in (0, 1)");
  std::vector<Atom> out;
  out.reserve(a.size() + b.size());
  for (const Atom& x : a.atoms()) out.push_back({t * x.weight, x.theta});
  for (const Atom& x : b.atoms()) out.push_back({(1.0 - t) * x.weight, x.theta});
  return CaratheodoryAtoms(std::move(out));
}

nlohmann::json to_json(const CaratheodoryAtoms& atoms) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Atom& a : atoms.atoms()) arr.push_back({{"w", a.weight}, {"theta", a.theta}});
  return nlohmann::json{{"atoms", arr}};
}

CaratheodoryAtoms atoms_from_json(const nlohmann::json& j) {
  std::vector<Atom> atoms;
  for (const auto& a : j.at("atoms")) {
    atoms.push_back({a.at("w").get<double>(), a.at("theta").get<double>()});
  }
  return CaratheodoryAtoms(std::move(atoms));
}

ExactCaratheodoryAtoms::ExactCaratheodoryAtoms(std::vector<ExactAtom> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("ExactCaratheodoryAtoms: need at least one atom");
  Rational total(0);
  for (const ExactAtom& a : atoms_) {
    if (sgn(a.weight) <= 0) {
      throw std::invalid_argument("ExactCaratheodoryAtoms: weights must be positive");
    }
    if (sgn(a.angle_over_pi) < 0 || a.angle_over_pi >= 2) {
      throw std::invalid_argument("ExactCaratheodoryAtoms: angles must lie in [0, 2pi)");
    }
    total += a.weight;
  }
  if (total != 1) throw std::invalid_argument("ExactCaratheodoryAtoms: weights must sum to 1");
}

CaratheodoryAtoms ExactCaratheodoryAtoms::to_float() const {
  std::vector<Atom> out;
  double total = 0.0;
  for (const ExactAtom& a : atoms_) {
    out.push_back({merobound::to_double(a.weight),
                   wrap_angle(merobound::to_double(a.angle_over_pi) * std::numbers::pi)});
    total += out.back().weight;
  }
  for (Atom& a : out) a.weight /= total;
  return CaratheodoryAtoms(std::move(out));
}

namespace {

// e^{i pi x} for x a multiple of 1/2.
RationalComplex quarter_turn(const Rational& x) {
  Rational twice = 2 * x;
  if (twice.get_den() != 1) {
    throw std::domain_error("exact atom angle is not a multiple of pi/2 at this index");
  }
  mpz_class k = twice.get_num() % 4;
  if (k < 0) k += 4;
  switch (k.get_si()) {
    case 0:
      return {Rational(1), Rational(0)};
    case 1:
      return {Rational(0), Rational(1)};
    case 2:
      return {Rational(-1), Rational(0)};
    default:
      return {Rational(0), Rational(-1)};
  }
}

}  // namespace

RationalComplex coefficient(const ExactCaratheodoryAtoms& atoms, std::size_t n) {
  if (n == 0) return RationalComplex(1);
  RationalComplex acc;
  const Rational nn(static_cast<long>(n));
  for (const ExactAtom& a : atoms.atoms()) {
    acc += a.weight * quarter_turn(Rational(nn * a.angle_over_pi));
  }
  return Rational(2) * acc;
}

ExteriorSeries<RationalComplex> to_exterior_series(const ExactCaratheodoryAtoms& atoms,
                                                   std::size_t order) {
  std::vector<RationalComplex> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = coefficient(atoms, n);
  return ExteriorSeries<RationalComplex>(std::move(c));
}

}  // namespace merobound
