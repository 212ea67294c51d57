#include "raman/single_pass.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "raman/errors.hpp"

namespace raman {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double x) {
  // (-pi, pi]
  double y = std::remainder(x, 2.0 * kPi);
  if (y <= -kPi) y += 2.0 * kPi;
  return y;
}

void require_constraint(const CKPair& ck, double tol, const char* where) {
  const double defect = ck.constraint_defect();
  if (!(defect <= tol)) {
    std::ostringstream os;
    os << where << ": |a|^2 + |b|^2 deviates from 1 by " << defect;
    throw ConsistencyError(os.str());
  }
}

// exp(-i H tau) for H = [[0, w/2], [w/2, D]].
Mat2 constant_step(double w, double detuning, double tau) {
  const double g = std::hypot(w, detuning);
  const Complex phase = std::polar(1.0, -0.5 * detuning * tau);
  const double c = std::cos(0.5 * g * tau);
  // sin(g tau / 2) / g, with its tau/2 limit at g = 0.
  const double s_over_g = g > 0.0 ? std::sin(0.5 * g * tau) / g : 0.5 * tau;
  Mat2 u;
  u(0, 0) = phase * Complex(c, detuning * s_over_g);
  u(0, 1) = phase * Complex(0.0, -w * s_over_g);
  u(1, 0) = u(0, 1);
  u(1, 1) = phase * Complex(c, -detuning * s_over_g);
  return u;
}

struct TwoLevelRhs {
  const PulseShape& shape;
  double rms;
  double detuning;

  // -i H(t) U
  Mat2 operator()(double t, const Mat2& u) const {
    const double t_clamped = std::clamp(t, 0.0, shape.duration());
    const double half_w = 0.5 * rms * shape_value(shape, t_clamped);
    Mat2 out;
    for (std::size_t c = 0; c < 2; ++c) {
      const Complex h0 = half_w * u(1, c);
      const Complex h1 = half_w * u(0, c) + detuning * u(1, c);
      out(0, c) = Complex(h0.imag(), -h0.real());
      out(1, c) = Complex(h1.imag(), -h1.real());
    }
    return out;
  }
};

Mat2 integrate_rk4(const PulseShape& shape, double rms, double detuning, int total_steps) {
  const TwoLevelRhs rhs{shape, rms, detuning};
  const auto pts = shape.breakpoints();
  const double t_end = shape.duration();
  Mat2 u = Mat2::identity();
  for (std::size_t seg = 1; seg < pts.size(); ++seg) {
    const double t0 = pts[seg - 1];
    const double t1 = pts[seg];
    const int steps = std::max(1, static_cast<int>(std::lround(total_steps * (t1 - t0) / t_end)));
    const double h = (t1 - t0) / steps;
    for (int k = 0; k < steps; ++k) {
      const double t = t0 + k * h;
      const Mat2 k1 = rhs(t, u);
      const Mat2 k2 = rhs(t + 0.5 * h, u + k1 * Complex(0.5 * h));
      const Mat2 k3 = rhs(t + 0.5 * h, u + k2 * Complex(0.5 * h));
      const Mat2 k4 = rhs(t + h, u + k3 * Complex(h));
      u += (k1 + k2 * Complex(2.0) + k3 * Complex(2.0) + k4) * Complex(h / 6.0);
    }
  }
  return u;
}

Mat2 integrate_rectangular(const PulseShape& shape, double fill, double rms, double detuning) {
  const double t_end = shape.duration();
  const double width = fill * t_end;
  const double gap = 0.5 * (t_end - width);
  const Mat2 free = constant_step(0.0, detuning, gap);
  const Mat2 pulse = constant_step(rms, detuning, width);
  return free * pulse * free;
}

}  // namespace

Mat3 ms_matrix(const RamanDrive& drive) {
  const double omega = drive.rms();
  const Complex o0 = drive.omega0() / omega;
  const Complex o1 = drive.omega1() / omega;
  return Mat3{{o1, -o0, 0.0}, {std::conj(o0), std::conj(o1), 0.0}, {0.0, 0.0, 1.0}};
}

Mat3 ms_reduce(const Mat3& hamiltonian, const RamanDrive& drive) {
  const Mat3 s = ms_matrix(drive);
  const Mat3 reduced = s * hamiltonian * s.adjoint();
  double residual = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    residual = std::max({residual, std::abs(reduced(0, k)), std::abs(reduced(k, 0))});
  }
  if (residual > 1e-9) {
    std::ostringstream os;
    os << "MS symmetry violated: dark state coupling " << residual;
    throw SymmetryError(os.str());
  }
  return reduced;
}

CKPair ck_rabi(const HamiltonianErrors& err) {
  if (!(err.fill > 0.0)) throw std::invalid_argument("ck_rabi: filling ratio must be positive");
  const double area = err.area();
  const double dr = err.delta * err.fill;
  // Generalized Rabi angle accumulated during the pulse window rT.
  const double phi = std::hypot(dr, area);
  const double c = std::cos(0.5 * phi);
  const double s = std::sin(0.5 * phi);
  CKPair ck;
  ck.a = Complex(c, dr / phi * s) * std::polar(1.0, -0.5 * dr);
  ck.b = Complex(0.0, -area / phi * s) * std::polar(1.0, -0.5 * err.delta);
  ck.delta = err.delta;
  require_constraint(ck, 1e-10, "ck_rabi");
  return ck;
}

Complex complex_gamma(Complex z) {
  static constexpr std::array<double, 9> kLanczos = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double kG = 7.0;

  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real())) {
    throw std::domain_error("complex_gamma: pole at non-positive integer");
  }
  if (z.real() < 0.5) {
    const Complex s = std::sin(kPi * z);
    if (s == Complex(0.0)) throw std::domain_error("complex_gamma: pole at non-positive integer");
    return kPi / (s * complex_gamma(1.0 - z));
  }
  const Complex zm = z - 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (zm + static_cast<double>(i));
  const Complex t = zm + kG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((zm + 0.5) * std::log(t) - t) * x;
}

CKPair ck_rosen_zener(const HamiltonianErrors& err) {
  if (err.fill > 0.1) throw std::invalid_argument("ck_rosen_zener: filling ratio must be <= 0.1");
  const double area = err.area();
  const Complex shift(0.0, err.delta * err.fill / (2.0 * kPi));
  const double half_area = area / (2.0 * kPi);
  const Complex g_half = complex_gamma(0.5 + shift);
  CKPair ck;
  ck.a = g_half * g_half / (complex_gamma(0.5 + half_area + shift) * complex_gamma(0.5 - half_area + shift));
  ck.b = Complex(0.0, -std::sin(0.5 * area) / std::cosh(0.5 * err.delta * err.fill)) *
         std::polar(1.0, -0.5 * err.delta);
  ck.delta = err.delta;
  require_constraint(ck, 1e-9, "ck_rosen_zener");
  return ck;
}

CKPair ck_numeric(const PulseShape& shape, const HamiltonianErrors& err, double rms,
                  const NumericOptions& options, NumericReport* report) {
  const double fill = filling_ratio(shape);
  if (std::abs(fill - err.fill) > 1e-6) {
    std::ostringstream os;
    os << "ck_numeric: shape filling ratio " << fill << " inconsistent with error fill " << err.fill;
    throw std::invalid_argument(os.str());
  }
  const double area = rms * fill * shape.duration();
  if (std::abs(area - err.area()) > 1e-9 * err.area()) {
    throw std::invalid_argument("ck_numeric: rms does not give pulse area 2(pi - epsilon)");
  }
  const double detuning = err.delta / shape.duration();

  NumericReport local;
  Mat2 u;
  if (const auto* rect = std::get_if<RectangularPulse>(&shape.kind())) {
    u = integrate_rectangular(shape, rect->fill, rms, detuning);
    local.analytic_segments = true;
  } else {
    int steps = std::max(options.initial_steps, 1);
    Mat2 prev = integrate_rk4(shape, rms, detuning, steps);
    bool converged = false;
    for (int halving = 1; halving <= options.max_halvings; ++halving) {
      steps *= 2;
      u = integrate_rk4(shape, rms, detuning, steps);
      local.halvings = halving;
      local.last_change = std::max(std::abs(u(0, 0) - prev(0, 0)), std::abs(u(0, 1) - prev(0, 1)));
      if (local.last_change < options.tolerance) {
        converged = true;
        break;
      }
      prev = u;
    }
    local.steps = steps;
    if (!converged) {
      std::ostringstream os;
      os << "ck_numeric: no convergence after " << options.max_halvings << " step halvings (last change "
         << local.last_change << ")";
      throw IntegrationError(os.str());
    }
  }
  if (report != nullptr) *report = local;

  CKPair ck{u(0, 0), u(0, 1), err.delta};
  const Complex phase = std::polar(1.0, -err.delta);
  const double bottom = std::max(std::abs(u(1, 0) + std::conj(ck.b) * phase),
                                 std::abs(u(1, 1) - std::conj(ck.a) * phase));
  if (bottom > 1e-9) {
    std::ostringstream os;
    os << "ck_numeric: propagator bottom row breaks the CK form by " << bottom;
    throw ConsistencyError(os.str());
  }
  return ck;
}

Mat2 ms_propagator(const CKPair& ck) {
  const Complex phase = std::polar(1.0, -ck.delta);
  return Mat2{{ck.a, ck.b}, {-std::conj(ck.b) * phase, std::conj(ck.a) * phase}};
}

Mat3 assemble_propagator(const RamanDrive& drive, const CKPair& ck) {
  const double omega = drive.rms();
  const Complex o0 = drive.omega0() / omega;
  const Complex o1 = drive.omega1() / omega;
  const Complex am1 = ck.a - 1.0;
  const Complex phase = std::polar(1.0, -ck.delta);
  Mat3 u;
  u(0, 0) = 1.0 + am1 * std::norm(o0);
  u(0, 1) = am1 * o0 * std::conj(o1);
  u(0, 2) = ck.b * o0;
  u(1, 0) = am1 * std::conj(o0) * o1;
  u(1, 1) = 1.0 + am1 * std::norm(o1);
  u(1, 2) = ck.b * o1;
  u(2, 0) = -std::conj(ck.b) * std::conj(o0) * phase;
  u(2, 1) = -std::conj(ck.b) * std::conj(o1) * phase;
  u(2, 2) = std::conj(ck.a) * phase;
  return u;
}

Populations single_pass_populations(const RamanDrive& drive, const CKPair& ck) {
  const double w0 = drive.weight0();
  const double w1 = drive.weight1();
  const Complex am1 = ck.a - 1.0;
  return Populations{std::norm(1.0 + am1 * w0), std::norm(am1) * w0 * w1, std::norm(ck.b) * w0};
}

Mat3 target_gate(double zeta, double phi) {
  const double c = std::cos(zeta);
  const double s = std::sin(zeta);
  return Mat3{{c, std::polar(s, -phi), 0.0}, {std::polar(s, phi), -c, 0.0}, {0.0, 0.0, -1.0}};
}

Mat3 ideal_gate(const RamanDrive& drive) {
  return assemble_propagator(drive, CKPair{-1.0, 0.0, 0.0});
}

GateErrors gate_errors_from_ck(const CKPair& ck) {
  const double abs_a = std::abs(ck.a);
  if (abs_a > 1.0 + 1e-10) {
    std::ostringstream os;
    os << "gate_errors_from_ck: |a| = " << abs_a << " exceeds 1";
    throw ConsistencyError(os.str());
  }
  GateErrors e;
  // atan2 form of arccos|a|, accurate for small gamma.
  e.gamma = std::clamp(std::atan2(std::abs(ck.b), std::min(abs_a, 1.0)), 0.0, kPi / 2.0);
  e.alpha = wrap_angle(-std::arg(-ck.a));
  if (std::abs(ck.b) > 1e-12) e.beta = wrap_angle(-std::arg(kI * ck.b));
  return e;
}

CKPair ck_from_gate_errors(const GateErrors& errors, double delta) {
  const double beta = errors.beta.value_or(0.0);
  return CKPair{-std::polar(std::cos(errors.gamma), -errors.alpha),
                -kI * std::polar(std::sin(errors.gamma), -beta), delta};
}

double fidelity(const Mat3& u, const Mat3& target) {
  return std::norm((target * u.adjoint()).trace()) / 9.0;
}

double fidelity_closed_r1(double alpha, double gamma, double zeta_err) {
  const double c = std::cos(zeta_err);
  const double cg = std::cos(gamma);
  return (c * c + 2.0 * std::cos(alpha) * c * cg * (1.0 + c) + (1.0 + c) * (1.0 + c) * cg * cg) / 9.0;
}

double fidelity_closed_r1_series(double alpha, double gamma, double zeta_err) {
  const double ca = std::cos(alpha);
  const double cg = std::cos(gamma);
  return (1.0 + 4.0 * ca * cg + 4.0 * cg * cg) / 9.0 -
         (1.0 + 3.0 * ca * cg + 2.0 * cg * cg) / 9.0 * zeta_err * zeta_err;
}

double fidelity_hamiltonian(const HamiltonianErrors& err) {
  const double ce = std::cos(err.epsilon);
  const double d = err.delta;
  const double r = err.fill;
  return (1.0 + 2.0 * ce * (std::cos(r * d / 2.0) + std::cos(d - r * d / 2.0) + (1.0 + std::cos(d - r * d)) * ce)) /
         9.0;
}

}  // namespace raman
