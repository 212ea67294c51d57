#include "raman/nr_approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "raman/multi_pass.hpp"

namespace raman {

namespace {

constexpr double kPi = std::numbers::pi;

Probability clip(double raw) {
  return Probability{std::clamp(raw, 0.0, 1.0), raw};
}

void check_range(const HamiltonianErrors& err) {
  if (std::abs(err.epsilon) > kNrMaxRange || std::abs(err.delta) > kNrMaxRange) {
    throw std::domain_error("near-resonance formulas require |epsilon|, |delta| <= 0.2");
  }
}

// Distance of theta from pi, i.e. sqrt(eps^2 + delta^2 (1-r)^2 / 4).
double nr_distance(const HamiltonianErrors& err) {
  return std::hypot(err.epsilon, 0.5 * err.delta * (1.0 - err.fill));
}

// sin(n theta) / sin(theta) for theta = pi - distance.
double nr_ratio(const HamiltonianErrors& err, std::uint64_t n) {
  return dirichlet_ratio(n, nr_distance(err), true);
}

}  // namespace

NRParams nr_ck(const HamiltonianErrors& err) {
  check_range(err);
  const double ce = std::cos(err.epsilon);
  const double se = std::sin(err.epsilon);
  NRParams p;
  p.a = -ce * std::polar(1.0, -0.5 * err.delta * err.fill);
  p.b = Complex(0.0, -se) * std::polar(1.0, -0.5 * err.delta);
  p.a_delta = -ce * std::polar(1.0, 0.5 * err.delta * (1.0 - err.fill));
  p.b_delta = Complex(0.0, -se);
  p.theta = nr_theta(err);
  p.beyond_validated_range = std::abs(err.epsilon) > kNrValidatedRange || std::abs(err.delta) > kNrValidatedRange;
  return p;
}

double nr_theta(const HamiltonianErrors& err) {
  return kPi - nr_distance(err);
}

GateErrors gate_error_map(const HamiltonianErrors& err) {
  check_range(err);
  GateErrors e;
  e.alpha = err.delta * err.fill / 2.0;
  e.beta = err.delta / 2.0;
  e.gamma = std::abs(err.epsilon);
  return e;
}

Probability pa_nr(const HamiltonianErrors& err, std::uint64_t n, const RamanDrive& drive) {
  check_range(err);
  const double se = std::sin(err.epsilon);
  const double ratio = nr_ratio(err, n);
  return clip(drive.weight0() * se * se * ratio * ratio);
}

Probability pa_resonant(double epsilon, std::uint64_t n, const RamanDrive& drive) {
  const double s = std::sin(static_cast<double>(n) * epsilon);
  return clip(drive.weight0() * s * s);
}

Probability pa_taylor(const HamiltonianErrors& err, std::uint64_t n, const RamanDrive& drive) {
  check_range(err);
  const double ne = static_cast<double>(n) * err.epsilon;
  const double s = std::sin(ne);
  if (std::abs(s) < 1e-12) {
    std::ostringstream os;
    os << "pa_taylor: n*epsilon = " << ne << " is a multiple of pi (cot singular)";
    throw std::domain_error(os.str());
  }
  const double base = drive.weight0() * s * s;
  const double one_minus_r = 1.0 - err.fill;
  if (err.delta == 0.0 || one_minus_r == 0.0) return clip(base);
  const double bracket = 1.0 - err.delta * err.delta * one_minus_r * one_minus_r * (1.0 - ne * std::cos(ne) / s) /
                                   (4.0 * err.epsilon * err.epsilon);
  return clip(base * bracket);
}

Probability p1_even_nr(const HamiltonianErrors& err, std::uint64_t n, const RamanDrive& drive) {
  if (n % 2 != 0) throw std::invalid_argument("p1_even_nr: n must be even");
  check_range(err);
  const double nd = static_cast<double>(n);
  const double y = nr_distance(err);
  // theta = pi - y with n even: cos(n theta) = cos(n y), sin(n theta) = -sin(n y).
  const double cos_n = std::cos(nd * y);
  const double ratio = nr_ratio(err, n);
  const double se = std::sin(err.epsilon);
  const double half = 0.5 * nd * err.delta;
  const double bracket = 1.0 - std::cos(half) * cos_n +
                         std::sin(half) * ratio * std::sin(0.5 * err.delta * (1.0 - err.fill)) -
                         0.5 * se * se * ratio * ratio;
  return clip(2.0 * drive.weight0() * drive.weight1() * bracket);
}

Probability p1_small_eps(double delta, double fill, std::uint64_t n, const RamanDrive& drive) {
  const double s = std::sin(static_cast<double>(n) * delta * fill / 4.0);
  return clip(4.0 * drive.weight0() * drive.weight1() * s * s);
}

}  // namespace raman
