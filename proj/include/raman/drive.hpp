#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "raman/linalg.hpp"

namespace raman {

/// Constant complex prefactors of the two Raman couplings Omega_0 f(t) and
/// Omega_1 f(t), with the derived RMS coupling, mixing angle and relative phase.
class RamanDrive {
 public:
  /// Throws std::invalid_argument for a zero or non-finite drive.
  RamanDrive(Complex omega0, Complex omega1);

  Complex omega0() const { return omega0_; }
  Complex omega1() const { return omega1_; }

  /// sqrt(|Omega_0|^2 + |Omega_1|^2).
  double rms() const { return rms_; }
  /// zeta in [0, pi] with |Omega_0|/Omega = sin(zeta/2), |Omega_1|/Omega = cos(zeta/2).
  double mixing_angle() const;
  /// arg(Omega_0) - arg(Omega_1).
  double relative_phase() const;

  /// |Omega_0|^2 / Omega^2, the weight of |psi_0> in the bright state.
  double weight0() const { return std::norm(omega0_) / (rms_ * rms_); }
  /// |Omega_1|^2 / Omega^2.
  double weight1() const { return std::norm(omega1_) / (rms_ * rms_); }

 private:
  Complex omega0_;
  Complex omega1_;
  double rms_;
};

enum class Gate { X, Hadamard };

/// Drive with the coupling ratio of the requested gate; phi is put on Omega_0.
RamanDrive drive_for_gate(Gate gate, double rms, double phi);

/// Drive with an arbitrary mixing angle zeta in [0, pi].
RamanDrive drive_for_mixing_angle(double zeta, double rms, double phi);

/// Nominal mixing angle of a gate: pi/2 for X, pi/4 for Hadamard.
double gate_mixing_angle(Gate gate);

/// Lambda-system Hamiltonian at one instant: couplings Omega_k * envelope / 2 to
/// |psi_a>, detuning on the diagonal of |psi_a>.
Mat3 raman_hamiltonian(const RamanDrive& drive, double envelope, double detuning);

/// Same, with independent envelopes on the two legs (breaks the MS symmetry
/// when they differ).
Mat3 raman_hamiltonian(const RamanDrive& drive, double envelope0, double envelope1, double detuning);

// ---------------------------------------------------------------------------
// Pulse envelopes. Every pass occupies [0, T]; trains are built by repeating
// the single-pass propagator.

struct RectangularPulse {
  double fill;  // width r*T, centered at T/2
};

struct SechPulse {
  double fill;  // sech[(pi/r)(t/T - 1/2)], r <= 0.1
};

struct SinSquaredPulse {};

struct OneMinusCosTenPulse {};

struct SampledPulse {
  std::vector<double> times;   // strictly increasing, times.front() == 0
  std::vector<double> values;  // finite, non-negative
};

class PulseShape {
 public:
  using Kind = std::variant<RectangularPulse, SechPulse, SinSquaredPulse, OneMinusCosTenPulse, SampledPulse>;

  static PulseShape rectangular(double fill, double duration = 1.0);
  static PulseShape sech(double fill, double duration = 1.0);
  static PulseShape sin_squared(double duration = 1.0);
  static PulseShape one_minus_cos_ten(double duration = 1.0);
  /// Duration is times.back(); times must start at 0.
  static PulseShape sampled(std::vector<double> times, std::vector<double> values);

  /// Parses `rect:<r>`, `sech:<r>`, `sin2`, `cos10`, `file:<path>`.
  /// Throws std::invalid_argument for an unknown or malformed token and
  /// std::runtime_error when a referenced file cannot be read.
  static PulseShape parse(std::string_view token);

  const Kind& kind() const { return kind_; }
  double duration() const { return duration_; }
  /// Canonical token, e.g. "rect:0.25" or "sin2".
  std::string token() const;

  /// Points where the envelope has a kink or jump; always includes 0 and T.
  std::vector<double> breakpoints() const;

 private:
  PulseShape(Kind kind, double duration, std::string source = {});

  Kind kind_;
  double duration_;
  std::string source_;
};

/// f(t) for 0 <= t <= T; std::domain_error outside.
double shape_value(const PulseShape& shape, double t);

/// (1/T) int_0^T f(t) dt from closed forms (trapezoid for sampled shapes).
double filling_ratio(const PulseShape& shape);

/// (1/T) int_0^T f(t) dt by adaptive Gauss-Kronrod quadrature, abs tol 1e-10.
double filling_ratio_quadrature(const PulseShape& shape);

/// RMS pulse area A = Omega * r * T.
double pulse_area(const PulseShape& shape, double rms);

/// RMS coupling giving area 2(pi - epsilon) for this shape.
double rms_for_area_error(const PulseShape& shape, double epsilon);

/// Hamiltonian-side error parameters of one pass.
struct HamiltonianErrors {
  double epsilon;  // pulse area error, A = 2(pi - epsilon)
  double delta;    // accumulated detuning phase, Delta * T
  double fill;     // filling ratio r in (0, 1]

  /// Validating constructor: |epsilon|, |delta| <= pi and 0 < fill <= 1.
  static HamiltonianErrors make(double epsilon, double delta, double fill);

  double area() const;
};

}  // namespace raman
