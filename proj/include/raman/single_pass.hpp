#pragma once

#include <optional>

#include "raman/drive.hpp"
#include "raman/linalg.hpp"

namespace raman {

/// Single-pass Cayley-Klein parameters of the driven bright/upper pair.
/// The MS-basis propagator is [[a, b], [-b* e^{-i delta}, a* e^{-i delta}]].
struct CKPair {
  Complex a;
  Complex b;
  double delta = 0.0;

  /// | |a|^2 + |b|^2 - 1 |.
  double constraint_defect() const { return std::abs(std::norm(a) + std::norm(b) - 1.0); }
};

/// Coherent gate errors: a = -e^{-i alpha} cos(gamma), b = -i e^{-i beta} sin(gamma).
struct GateErrors {
  double alpha = 0.0;
  std::optional<double> beta;  // empty when b = 0
  double gamma = 0.0;          // >= 0
  double zeta_err = 0.0;       // error of the mixing angle
};

struct Populations {
  double p0 = 0.0;
  double p1 = 0.0;
  double pa = 0.0;

  double sum() const { return p0 + p1 + pa; }
};

/// Unitary S with S H S^dagger = Htilde: row 0 is the dark combination
/// (Omega_1, -Omega_0)/Omega, row 1 the bright one (Omega_0*, Omega_1*)/Omega,
/// row 2 the upper state.
Mat3 ms_matrix(const RamanDrive& drive);

/// S H S^dagger. Throws SymmetryError if the dark row or column keeps a
/// coupling above 1e-9 (mismatched envelopes, missing two-photon resonance).
Mat3 ms_reduce(const Mat3& hamiltonian, const RamanDrive& drive);

/// Exact CK parameters of a rectangular pulse of width rT centered in [0, T].
CKPair ck_rabi(const HamiltonianErrors& err);

/// Exact CK parameters of a single sech pulse (Rosen-Zener), r <= 0.1.
CKPair ck_rosen_zener(const HamiltonianErrors& err);

/// Gamma function on the complex plane: Lanczos (g = 7, 9 terms) with
/// reflection for Re z < 1/2. Throws std::domain_error at the poles.
Complex complex_gamma(Complex z);

struct NumericOptions {
  int initial_steps = 20000;
  int max_halvings = 6;
  double tolerance = 1e-10;
};

/// Diagnostics of the last numeric integration.
struct NumericReport {
  int steps = 0;
  int halvings = 0;
  double last_change = 0.0;
  bool analytic_segments = false;
};

/// Integrates i dc/dt = H2(t) c, H2 = [[0, Omega f/2], [Omega f/2, Delta]],
/// over one pass with RK4 and step halving (piecewise-exact stepping for
/// rectangular pulses). rms must give area 2(pi - epsilon) for the shape.
CKPair ck_numeric(const PulseShape& shape, const HamiltonianErrors& err, double rms,
                  const NumericOptions& options = {}, NumericReport* report = nullptr);

/// 2x2 MS-basis propagator for (a, b, delta).
Mat2 ms_propagator(const CKPair& ck);

/// U = S^dagger Utilde S written out in closed form.
Mat3 assemble_propagator(const RamanDrive& drive, const CKPair& ck);

/// Populations after one pass starting from |psi_0>.
Populations single_pass_populations(const RamanDrive& drive, const CKPair& ck);

/// Target gate [[cos z, e^{-i phi} sin z, 0], [e^{i phi} sin z, -cos z, 0], [0, 0, -1]].
Mat3 target_gate(double zeta, double phi);

/// Propagator of the error-free pass (a = -1, b = 0, delta = 0) for this
/// drive; equals target_gate(zeta, pi - phi).
Mat3 ideal_gate(const RamanDrive& drive);

/// Inverts a = -e^{-i alpha} cos(gamma), b = -i e^{-i beta} sin(gamma) with gamma >= 0.
GateErrors gate_errors_from_ck(const CKPair& ck);

/// CK pair from gate errors (beta treated as 0 when absent).
CKPair ck_from_gate_errors(const GateErrors& errors, double delta);

/// |Tr(U_tar U^dagger)|^2 / 9.
double fidelity(const Mat3& u, const Mat3& target);

/// r = 1 fidelity in gate errors with mixing-angle error zeta_err (full form).
double fidelity_closed_r1(double alpha, double gamma, double zeta_err);

/// Small-zeta_err expansion of fidelity_closed_r1 to second order.
double fidelity_closed_r1_series(double alpha, double gamma, double zeta_err);

/// Fidelity in Hamiltonian errors (zeta_err = 0).
double fidelity_hamiltonian(const HamiltonianErrors& err);

}  // namespace raman
