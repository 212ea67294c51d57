#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "raman/multi_pass.hpp"
#include "raman/nr_approx.hpp"

using namespace raman;

namespace {

constexpr double kPi = std::numbers::pi;

HamiltonianErrors errs(double e, double d, double r) { return HamiltonianErrors::make(e, d, r); }

const RamanDrive& x_drive() {
  static const RamanDrive d = drive_for_gate(Gate::X, 1, 0);
  return d;
}

const RamanDrive& h_drive() {
  static const RamanDrive d = drive_for_gate(Gate::Hadamard, 1, 0);
  return d;
}

double exact_pa(double e, double d, double r, std::uint64_t n) {
  return multipass_populations(x_drive(), ck_rabi(errs(e, d, r)), n).pa;
}

double exact_p1(double e, double d, double r, std::uint64_t n) {
  return multipass_populations(x_drive(), ck_rabi(errs(e, d, r)), n).p1;
}

}  // namespace

TEST(NrCk, ErrorFree) {
  const NRParams p = nr_ck(errs(0, 0, 0.5));
  EXPECT_EQ(p.a, Complex(-1.0));
  EXPECT_LE(std::abs(p.b), 1e-16);
  EXPECT_DOUBLE_EQ(p.theta, kPi);
}

TEST(NrCk, FullFillKillsTheDetuningInTheta) {
  const NRParams p = nr_ck(errs(-0.03, 0.04, 1.0));
  EXPECT_LE(std::abs(p.a_delta - Complex(-std::cos(0.03))), 1e-16);
  EXPECT_NEAR(p.theta, kPi - 0.03, 1e-15);
}

TEST(NrCk, CloseToTheExactRabiPair) {
  const HamiltonianErrors e = errs(0.03, 0.04, 0.25);
  EXPECT_LE(std::abs(nr_ck(e).a - ck_rabi(e).a), 1e-3);
  EXPECT_LE(std::abs(nr_ck(e).a - ck_rabi(e).a), 5e-5);
}

TEST(NrCk, RangeFlags) {
  EXPECT_FALSE(nr_ck(errs(0.05, 0.05, 1)).beyond_validated_range);
  EXPECT_TRUE(nr_ck(errs(0.1, 0.0, 1)).beyond_validated_range);
  EXPECT_THROW(nr_ck(errs(0.25, 0.0, 1)), std::domain_error);
}

TEST(GateErrorMap, DirectMap) {
  const GateErrors g = gate_error_map(errs(0.02, 0.03, 1));
  EXPECT_DOUBLE_EQ(g.alpha, 0.015);
  EXPECT_DOUBLE_EQ(*g.beta, 0.015);
  EXPECT_DOUBLE_EQ(g.gamma, 0.02);
  const GateErrors z = gate_error_map(errs(0.02, 0.0, 0.3));
  EXPECT_EQ(z.alpha, 0.0);
  EXPECT_EQ(*z.beta, 0.0);
}

TEST(GateErrorMap, AgreesWithExactInversion) {
  const HamiltonianErrors e = errs(0.01, 0.04, 0.5);
  const GateErrors approx = gate_error_map(e);
  const GateErrors exact = gate_errors_from_ck(ck_rabi(e));
  EXPECT_NEAR(approx.alpha, exact.alpha, 2e-4);
  EXPECT_NEAR(*approx.beta, *exact.beta, 2e-4);
  EXPECT_NEAR(approx.gamma, exact.gamma, 2e-4);
}

TEST(PaNr, NoAreaErrorNoLeakage) {
  for (std::uint64_t n : {1u, 10u, 100u}) EXPECT_EQ(pa_nr(errs(0, 0.04, 0.25), n, x_drive()).value, 0.0);
}

TEST(PaNr, ResonantLimit) {
  for (std::uint64_t n : {1u, 20u, 63u}) {
    EXPECT_NEAR(pa_nr(errs(0.025, 0, 0.25), n, x_drive()), pa_resonant(0.025, n, x_drive()), 1e-12);
  }
}

TEST(PaNr, AgainstExactRabi) {
  EXPECT_NEAR(pa_nr(errs(0.025, 0.02, 0.25), 40, x_drive()), exact_pa(0.025, 0.02, 0.25, 40), 5e-3);
  EXPECT_NEAR(pa_nr(errs(0.025, 0.02, 0.25), 40, x_drive()), exact_pa(0.025, 0.02, 0.25, 40), 1e-4);
}

TEST(PaNr, EvenInBothErrors) {
  for (std::uint64_t n : {7u, 40u}) {
    const double ref = pa_nr(errs(0.02, 0.03, 0.4), n, x_drive());
    EXPECT_DOUBLE_EQ(pa_nr(errs(-0.02, 0.03, 0.4), n, x_drive()), ref);
    EXPECT_DOUBLE_EQ(pa_nr(errs(0.02, -0.03, 0.4), n, x_drive()), ref);
  }
}

TEST(PaResonant, ReferenceValues) {
  EXPECT_NEAR(pa_resonant(0.025, 20, x_drive()), 0.5 * std::pow(std::sin(0.5), 2), 1e-15);
  EXPECT_NEAR(pa_resonant(0.025, 20, x_drive()), 0.11492, 1e-5);
  EXPECT_NEAR(pa_resonant(kPi / 40, 20, x_drive()), 0.5, 1e-15);
  EXPECT_NEAR(pa_resonant(0.025, 20, h_drive()), 0.03366, 1e-5);
}

TEST(PaTaylor, LimitsWithoutDetuningSensitivity) {
  EXPECT_NEAR(pa_taylor(errs(0.025, 0, 0.25), 30, x_drive()), pa_resonant(0.025, 30, x_drive()), 1e-15);
  EXPECT_NEAR(pa_taylor(errs(0.025, 0.04, 1), 30, x_drive()), pa_resonant(0.025, 30, x_drive()), 1e-15);
}

TEST(PaTaylor, CotSingularityIsRejected) {
  try {
    pa_taylor(errs(kPi / 100, 0.01, 0.25), 100, x_drive());
    FAIL() << "expected a domain error";
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("3.14159"), std::string::npos);
  }
}

TEST(PaTaylor, SecondOrderAccuracy) {
  // Expansion error scales as delta^4: small at moderate delta, a few 1e-2
  // deep in the divergence region (n = 60, delta = 0.04 gives 1.93e-2).
  EXPECT_NEAR(pa_taylor(errs(0.025, 0.01, 0.25), 40, x_drive()), exact_pa(0.025, 0.01, 0.25, 40), 2e-4);
  EXPECT_NEAR(pa_taylor(errs(0.025, 0.04, 0.25), 60, x_drive()), exact_pa(0.025, 0.04, 0.25, 60), 2.0e-2);
  EXPECT_NEAR(pa_taylor(errs(0.025, 0.04, 0.25), 60, x_drive()), pa_nr(errs(0.025, 0.04, 0.25), 60, x_drive()), 2.0e-2);
}

TEST(P1EvenNr, OddPassesAreRejected) {
  EXPECT_THROW(p1_even_nr(errs(0.01, 0.01, 1), 3, x_drive()), std::invalid_argument);
}

TEST(P1EvenNr, ErrorFreeReturn) {
  for (std::uint64_t n = 2; n <= 100; n += 14) EXPECT_NEAR(p1_even_nr(errs(0, 0, 0.754), n, x_drive()), 0.0, 1e-15);
}

TEST(P1EvenNr, AgainstExactRabi) {
  EXPECT_NEAR(p1_even_nr(errs(0.02, 0.02, 1), 50, x_drive()), exact_p1(0.02, 0.02, 1, 50), 5e-3);
  EXPECT_NEAR(p1_even_nr(errs(0.02, 0.02, 1), 50, x_drive()), exact_p1(0.02, 0.02, 1, 50), 6e-4);
}

TEST(P1EvenNr, SmallEpsilonLimit) {
  // The general form approaches the small-epsilon closed form quadratically.
  const double limit = p1_small_eps(0.03, 0.754, 100, x_drive());
  const double d2 = std::abs(p1_even_nr(errs(0.002, 0.03, 0.754), 100, x_drive()) - limit);
  const double d1 = std::abs(p1_even_nr(errs(0.001, 0.03, 0.754), 100, x_drive()) - limit);
  EXPECT_LE(d2, 8e-3);
  EXPECT_NEAR(d2 / d1, 4.0, 0.1);
  EXPECT_NEAR(p1_even_nr(errs(0.0, 0.03, 0.754), 100, x_drive()), limit, 1e-12);
}

TEST(P1EvenNr, ClippingKeepsTheRawValue) {
  const Probability p = p1_even_nr(errs(0.05, 0.05, 0.5), 100, x_drive());
  EXPECT_GE(p.value, 0.0);
  EXPECT_LE(p.value, 1.0);
  EXPECT_EQ(p.value, std::clamp(p.raw, 0.0, 1.0));
}

TEST(P1SmallEps, ReferenceValues) {
  EXPECT_EQ(p1_small_eps(0, 1, 100, x_drive()).value, 0.0);
  EXPECT_NEAR(p1_small_eps(0.02, 1, 100, x_drive()), std::pow(std::sin(0.5), 2), 1e-15);
  EXPECT_NEAR(p1_small_eps(0.02, 1, 100, x_drive()), 0.22985, 1e-5);
  EXPECT_NEAR(p1_small_eps(0.02, 1, 100, h_drive()), 0.11492, 1e-5);
  EXPECT_NEAR(exact_p1(0.001, 0.02, 1, 100), 0.228874, 1e-5);
}
