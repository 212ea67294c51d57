#pragma once

// Near-resonance (small epsilon, small delta) closed forms. They depend on
// the envelope only through its filling ratio.

#include <cstdint>

#include "raman/drive.hpp"
#include "raman/single_pass.hpp"

namespace raman {

/// Errors above this magnitude are outside the range where the closed forms
/// were validated against the exact models.
inline constexpr double kNrValidatedRange = 0.05;
/// Hard limit for evaluating the closed forms at all.
inline constexpr double kNrMaxRange = 0.2;

struct NRParams {
  Complex a;
  Complex b;
  Complex a_delta;
  Complex b_delta;
  double theta = 0.0;
  bool beyond_validated_range = false;
};

/// A probability clipped to [0, 1]; `raw` keeps the unclipped formula value.
struct Probability {
  double value = 0.0;
  double raw = 0.0;

  operator double() const { return value; }  // NOLINT(google-explicit-constructor)
};

/// Approximate CK parameters. Throws std::domain_error if |epsilon| or
/// |delta| exceeds kNrMaxRange.
NRParams nr_ck(const HamiltonianErrors& err);

/// pi - sqrt(epsilon^2 + delta^2 (1 - r)^2 / 4).
double nr_theta(const HamiltonianErrors& err);

/// alpha = delta r / 2, beta = delta / 2, gamma = |epsilon|.
GateErrors gate_error_map(const HamiltonianErrors& err);

/// Upper-state population after n passes:
/// K0 sin^2(eps) sin^2(n theta) / sin^2(theta).
Probability pa_nr(const HamiltonianErrors& err, std::uint64_t n, const RamanDrive& drive);

/// Resonant (delta = 0) limit K0 sin^2(n eps).
Probability pa_resonant(double epsilon, std::uint64_t n, const RamanDrive& drive);

/// Second-order expansion of pa_nr in delta. Throws std::domain_error when
/// n*eps is a multiple of pi.
Probability pa_taylor(const HamiltonianErrors& err, std::uint64_t n, const RamanDrive& drive);

/// |psi_1> population after an even number of passes. Throws
/// std::invalid_argument for odd n.
Probability p1_even_nr(const HamiltonianErrors& err, std::uint64_t n, const RamanDrive& drive);

/// Small-epsilon limit 4 K0 K1 sin^2(n delta r / 4).
Probability p1_small_eps(double delta, double fill, std::uint64_t n, const RamanDrive& drive);

}  // namespace raman
