#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "raman/errors.hpp"
#include "raman/multi_pass.hpp"
#include "raman/nr_approx.hpp"
#include "raman/tomography.hpp"

using namespace raman;

namespace {

constexpr double kPi = std::numbers::pi;

const RamanDrive& x_drive() {
  static const RamanDrive d = drive_for_gate(Gate::X, 1, 0);
  return d;
}

ExperimentRecord exact_record(double e, double d, double r, std::uint64_t n, const RamanDrive& drive = x_drive()) {
  const Populations p = multipass_populations(drive, ck_rabi(HamiltonianErrors::make(e, d, r)), n);
  return ExperimentRecord{n, p.p0, p.p1, p.pa, 0};
}

std::vector<ExperimentRecord> exact_records(double e, double d, double r, const std::vector<std::uint64_t>& ns) {
  std::vector<ExperimentRecord> out;
  for (auto n : ns) out.push_back(exact_record(e, d, r, n));
  return out;
}

}  // namespace

// ---- zeta ----------------------------------------------------------------------

TEST(EstimateZeta, ReferenceGates) {
  EXPECT_NEAR(estimate_zeta({1, 0, 1, 0, 0}).zeta, kPi / 2, 1e-15);
  const ZetaEstimate h = estimate_zeta({1, 0.5, 0.5, 0, 0});
  EXPECT_NEAR(h.zeta, kPi / 4, 1e-15);
  EXPECT_NEAR(h.omega0_ratio, std::sin(kPi / 8), 1e-15);
  EXPECT_NEAR(h.omega1_ratio, std::cos(kPi / 8), 1e-15);
  EXPECT_THROW(estimate_zeta({1, 0, 1.2, 0, 0}), std::invalid_argument);
}

TEST(EstimateZeta, SimulatedHadamard) {
  const RamanDrive h = drive_for_gate(Gate::Hadamard, 1, 0);
  const double z = estimate_zeta(exact_record(0.01, 0.01, 1, 1, h)).zeta;
  EXPECT_NEAR(z, kPi / 4, 2e-2);
  EXPECT_NEAR(z, kPi / 4, 1e-4);
}

TEST(RefineZeta, RemovesTheLeakageBiasNearX) {
  const ExperimentRecord rec = exact_record(0.0225, 0.03, 0.25, 1);
  const double plain = estimate_zeta(rec).zeta;
  const double refined = refine_zeta(rec, 0.0225, 0.03, 0.25);
  EXPECT_GT(std::abs(plain - kPi / 2), 1e-2);
  EXPECT_LT(std::abs(refined - kPi / 2), 2e-4);
}

// ---- gamma ---------------------------------------------------------------------

TEST(EstimateGamma, ResonantRoundTrip) {
  const double pa = 0.5 * std::pow(std::sin(20 * 0.025), 2);
  const ErrorEstimate e = estimate_gamma(std::vector<ExperimentRecord>{{20, 1 - pa, 0, pa, 0}}, kPi / 2);
  EXPECT_NEAR(e.gamma_hat, 0.025, 1e-14);
  EXPECT_EQ(e.method, EstimationMethod::ResonantArcsin);
}

TEST(EstimateGamma, NoLeakageNoError) {
  for (std::uint64_t n : {1u, 30u, 200u}) {
    const ErrorEstimate e = estimate_gamma(std::vector<ExperimentRecord>{{n, 1, 0, 0, 0}}, kPi / 2);
    EXPECT_EQ(e.gamma_hat, 0.0);
  }
}

TEST(EstimateGamma, ExactRabiRecords) {
  const auto recs = exact_records(0.025, 0.02, 0.25, {5, 10, 15, 20});
  EXPECT_NEAR(estimate_gamma(recs, kPi / 2).gamma_hat, 0.025, 1e-3);
}

TEST(EstimateGamma, AmplificationIsLinearInsideTheWindow) {
  // Without detuning the per-record estimate is n-independent across the whole
  // window. Detuning adds a slowly growing bias; the pipeline keeps its gamma
  // records at n <= 20 where it stays below 5e-4.
  double worst_resonant = 0.0, worst_short = 0.0, worst_window = 0.0;
  for (std::uint64_t n = 1; n * 0.025 < 0.8 * kPi / 2; ++n) {
    const auto est = [&](double delta) {
      const auto rec = exact_record(0.025, delta, 0.25, n);
      return std::abs(estimate_gamma(std::vector<ExperimentRecord>{rec}, kPi / 2).gamma_hat - 0.025);
    };
    worst_resonant = std::max(worst_resonant, est(0.0));
    const double detuned = est(0.02);
    if (n <= 20) worst_short = std::max(worst_short, detuned);
    worst_window = std::max(worst_window, detuned);
  }
  EXPECT_LT(worst_resonant, 1e-12);
  EXPECT_LT(worst_short, 5e-4);
  EXPECT_LT(worst_window, 1.5e-3);  // measured 1.41e-3 at n = 50
}

TEST(EstimateGamma, RecordsBeyondTheWindowAreDiscarded) {
  const auto recs = exact_records(0.03, 0.0, 1.0, {5, 10, 20, 45});
  const ErrorEstimate e = estimate_gamma(recs, kPi / 2);
  EXPECT_EQ(e.records_used, 3u);
  EXPECT_FALSE(e.warnings.empty());
  EXPECT_NEAR(e.gamma_hat, 0.03, 1e-12);
}

TEST(EstimateGamma, AllSaturatedFails) {
  const std::vector<ExperimentRecord> recs{{10, 0.5, 0, 0.5, 0}, {20, 0.5, 0, 0.5, 0}};
  EXPECT_THROW(estimate_gamma(recs, kPi / 2), EstimationError);
  EXPECT_THROW(estimate_gamma({}, kPi / 2), EstimationError);
}

TEST(EstimateGamma, InvalidRecordsAreRejected) {
  const std::vector<ExperimentRecord> bad{{10, 0.7, 0.2, 0.3, 0}};
  EXPECT_THROW(estimate_gamma(bad, kPi / 2), std::invalid_argument);
}

// ---- alpha, low fill -----------------------------------------------------------

TEST(LowFill, NoDetuningGivesZero) {
  const auto recs = exact_records(0.025, 0.0, 0.25, {40, 60, 80});
  const ErrorEstimate e = estimate_alpha_low_fill(recs, 0.025, 0.25, kPi / 2);
  EXPECT_NEAR(e.delta_hat, 0.0, 1e-6);
  EXPECT_NEAR(e.alpha_hat, 0.0, 1e-6);
  EXPECT_EQ(e.method, EstimationMethod::TaylorLowFill);
}

TEST(LowFill, DivergenceRegionRecord) {
  const auto recs = exact_records(0.025, 0.03, 0.25, {80});
  const ErrorEstimate e = estimate_alpha_low_fill(recs, 0.025, 0.25, kPi / 2);
  EXPECT_NEAR(e.delta_hat, 0.03, 3e-3);
  EXPECT_NEAR(e.alpha_hat, 0.25 * e.delta_hat / 2, 1e-15);
  EXPECT_NEAR(e.beta_hat, e.delta_hat / 2, 1e-15);
  ASSERT_TRUE(e.taylor_delta.has_value());
  EXPECT_NEAR(*e.taylor_delta, 0.027851, 1e-5);
}

TEST(LowFill, WeakSignal) {
  const auto recs = exact_records(0.025, 0.01, 0.25, {120});
  const ErrorEstimate e = estimate_alpha_low_fill(recs, 0.025, 0.25, kPi / 2);
  EXPECT_LE(std::abs(e.delta_hat - 0.01) / 0.01, 0.15);
  EXPECT_NEAR(*e.taylor_delta, 0.0092755, 1e-6);
}

TEST(LowFill, TaylorSquareMatchesTheSeed) {
  const auto rec = exact_record(0.025, 0.03, 0.25, 80);
  EXPECT_NEAR(std::sqrt(taylor_delta_squared(rec, 0.025, 0.25, kPi / 2)), 0.027851, 1e-5);
  EXPECT_THROW(taylor_delta_squared(rec, kPi / 80, 0.25, kPi / 2), std::domain_error);
}

TEST(LowFill, InconsistentRecordsAreRejected) {
  // More leakage than any detuning can produce at this gamma.
  const double base = 0.5 * std::pow(std::sin(60 * 0.02), 2);
  const std::vector<ExperimentRecord> recs{{60, 1 - base - 0.1, 0, base + 0.1, 0}};
  EXPECT_THROW(estimate_alpha_low_fill(recs, 0.02, 0.25, kPi / 2), EstimationError);
}

TEST(LowFill, FillPrecondition) {
  const auto recs = exact_records(0.025, 0.03, 0.25, {80});
  EXPECT_THROW(estimate_alpha_low_fill(recs, 0.025, 0.6, kPi / 2), std::invalid_argument);
}

// ---- alpha, high fill ----------------------------------------------------------

TEST(HighFill, SmallEpsilonClosedForm) {
  const double p1 = std::pow(std::sin(100 * 0.02 / 4), 2);
  const std::vector<ExperimentRecord> recs{{100, 1 - p1, p1, 0, 0}};
  const ErrorEstimate e = estimate_alpha_high_fill(recs, 0.0, 1.0, kPi / 2);
  EXPECT_NEAR(e.delta_hat, 0.02, 1e-14);
  EXPECT_EQ(e.method, EstimationMethod::SmallEpsClosedForm);
}

TEST(HighFill, NoDetuningGivesZero) {
  std::vector<ExperimentRecord> recs;
  for (std::uint64_t n = 20; n <= 100; n += 10) recs.push_back(exact_record(0.02, 0.0, 0.754, n));
  EXPECT_NEAR(estimate_alpha_high_fill(recs, 0.02, 0.754, kPi / 2).delta_hat, 0.0, 1e-6);
}

TEST(HighFill, SmallEpsilonClosedFormBias) {
  // The closed form ignores epsilon, so a residual pulse area error leaves a
  // small positive bias at zero detuning.
  std::vector<ExperimentRecord> recs;
  for (std::uint64_t n = 20; n <= 100; n += 10) recs.push_back(exact_record(0.001, 0.0, 0.754, n));
  const ErrorEstimate e = estimate_alpha_high_fill(recs, 0.001, 0.754, kPi / 2);
  EXPECT_EQ(e.method, EstimationMethod::SmallEpsClosedForm);
  EXPECT_LT(e.delta_hat, 2e-4);
}

TEST(HighFill, ExactRabiRecords) {
  std::vector<ExperimentRecord> recs;
  for (std::uint64_t n = 20; n <= 100; n += 10) recs.push_back(exact_record(0.02, 0.03, 0.754, n));
  const ErrorEstimate e = estimate_alpha_high_fill(recs, 0.02, 0.754, kPi / 2);
  EXPECT_EQ(e.method, EstimationMethod::RootfindHighFill);
  EXPECT_NEAR(e.delta_hat, 0.03, 2e-3);
  EXPECT_NEAR(e.alpha_hat, 0.754 * e.delta_hat / 2, 1e-15);
}

TEST(HighFill, OddPassesAreRejected) {
  const auto recs = exact_records(0.02, 0.03, 1.0, {21});
  EXPECT_THROW(estimate_alpha_high_fill(recs, 0.02, 1.0, kPi / 2), std::invalid_argument);
}

TEST(HighFill, UnfittableRecordsFailWithTrace) {
  const std::vector<ExperimentRecord> recs{{20, 0.0, 0.9, 0.1, 0}, {40, 0.9, 0.0, 0.1, 0}};
  try {
    estimate_alpha_high_fill(recs, 0.02, 1.0, kPi / 2);
    FAIL() << "expected an estimation failure";
  } catch (const EstimationError& e) {
    EXPECT_NE(std::string(e.what()).find("residual trace"), std::string::npos);
  }
}

// ---- sampler -------------------------------------------------------------------

TEST(Sampler, NoiselessCopy) {
  const ExperimentRecord r = simulate_measurement({0.2, 0.3, 0.5}, 7, 0, 99);
  EXPECT_EQ(r.n, 7u);
  EXPECT_EQ(r.p0, 0.2);
  EXPECT_EQ(r.p1, 0.3);
  EXPECT_EQ(r.pa, 0.5);
}

TEST(Sampler, DegenerateDistribution) {
  const ExperimentRecord r = simulate_measurement({1, 0, 0}, 1, 1000, 3);
  EXPECT_EQ(r.p0, 1.0);
  EXPECT_EQ(r.p1, 0.0);
  EXPECT_EQ(r.pa, 0.0);
}

TEST(Sampler, SeededAndReproducible) {
  const ExperimentRecord a = simulate_measurement({0.5, 0.5, 0}, 1, 10000, 42);
  const ExperimentRecord b = simulate_measurement({0.5, 0.5, 0}, 1, 10000, 42);
  EXPECT_NEAR(a.p0, 0.5, 0.02);
  EXPECT_EQ(a.p0, b.p0);
  EXPECT_EQ(a.p1, b.p1);
  EXPECT_EQ(a.pa, 0.0);
  EXPECT_DOUBLE_EQ(a.p0 + a.p1 + a.pa, 1.0);
}

TEST(Sampler, RejectsUnnormalizedInput) {
  EXPECT_THROW(simulate_measurement({0.5, 0.6, 0}, 1, 10, 0), std::invalid_argument);
}

// ---- full pipeline -------------------------------------------------------------

TEST(Pipeline, BranchSelection) {
  const RamanDrive d = x_drive();
  for (double r : {0.1, 0.25}) {
    const auto data = simulate_experiment(PulseModel::rabi(r), d, 0.02, 0.03, ExperimentPlan::defaults(r), 0, 0);
    EXPECT_EQ(estimate_errors(data, r).method, EstimationMethod::TaylorLowFill);
  }
  for (double r : {0.5, 1.0}) {
    const auto data = simulate_experiment(PulseModel::rabi(r), d, 0.02, 0.03, ExperimentPlan::defaults(r), 0, 0);
    EXPECT_EQ(estimate_errors(data, r).method, EstimationMethod::RootfindHighFill);
  }
}

TEST(Pipeline, RoundTripCorners) {
  const RamanDrive d = x_drive();
  for (double r : {0.1, 0.25, 0.754, 1.0}) {
    for (double e : {0.005, 0.04}) {
      for (double dl : {0.005, 0.04}) {
        const auto data = simulate_experiment(PulseModel::rabi(r), d, e, dl, ExperimentPlan::defaults(r), 0, 0);
        const ErrorEstimate est = estimate_errors(data, r);
        EXPECT_NEAR(est.gamma_hat, e, 1e-3) << r << ' ' << e << ' ' << dl;
        EXPECT_NEAR(est.delta_hat, dl, 3e-3) << r << ' ' << e << ' ' << dl;
      }
    }
  }
}

TEST(Pipeline, HadamardDrive) {
  const RamanDrive h = drive_for_gate(Gate::Hadamard, 1, 0);
  for (double r : {0.25, 1.0}) {
    const auto data = simulate_experiment(PulseModel::rabi(r), h, 0.02, 0.03, ExperimentPlan::defaults(r), 0, 0);
    const ErrorEstimate est = estimate_errors(data, r);
    EXPECT_NEAR(est.zeta_hat, kPi / 4, 1e-3);
    EXPECT_NEAR(est.gamma_hat, 0.02, 1e-3);
    EXPECT_NEAR(est.delta_hat, 0.03, 3e-3);
  }
}

// Near-resonance records are even in both errors, so the estimates are too.
// Exact Rabi records are even in delta only: the area 2(pi - eps) is not
// symmetric under eps -> -eps.
TEST(Pipeline, MagnitudeOnly) {
  const RamanDrive d = x_drive();
  for (double r : {0.25, 0.754}) {
    const auto plan = ExperimentPlan::defaults(r);
    auto nr_data = [&](double e, double dl) {
      const NRParams nr = nr_ck(HamiltonianErrors::make(e, dl, r));
      const CKPair ck{nr.a, nr.b, dl};
      auto rec = [&](std::uint64_t n) {
        const Populations p = multipass_populations(d, ck, n);
        return ExperimentRecord{n, p.p0, p.p1, p.pa, 0};
      };
      ExperimentData data;
      data.zeta_record = rec(plan.zeta_n);
      for (auto n : plan.gamma_ns) data.gamma_records.push_back(rec(n));
      for (auto n : plan.delta_ns) data.delta_records.push_back(rec(n));
      return data;
    };
    const ErrorEstimate ref = estimate_errors(nr_data(0.02, 0.03), r);
    const ErrorEstimate rabi_ref =
        estimate_errors(simulate_experiment(PulseModel::rabi(r), d, 0.02, 0.03, plan, 0, 0), r);
    for (auto [e, dl] : {std::pair{-0.02, 0.03}, std::pair{0.02, -0.03}, std::pair{-0.02, -0.03}}) {
      const ErrorEstimate est = estimate_errors(nr_data(e, dl), r);
      EXPECT_NEAR(est.gamma_hat, ref.gamma_hat, 1e-12);
      EXPECT_NEAR(est.delta_hat, ref.delta_hat, 1e-9);
      const ErrorEstimate rabi =
          estimate_errors(simulate_experiment(PulseModel::rabi(r), d, e, dl, plan, 0, 0), r);
      const bool eps_flipped = e < 0;
      EXPECT_NEAR(rabi.gamma_hat, rabi_ref.gamma_hat, eps_flipped ? 5e-5 : 1e-12);
      EXPECT_NEAR(rabi.delta_hat, rabi_ref.delta_hat, eps_flipped ? 3e-4 : 1e-9);
    }
  }
}

TEST(Pipeline, NoisyRecordsStillConverge) {
  const auto plan = ExperimentPlan::defaults(1.0);
  const auto data = simulate_experiment(PulseModel::rabi(1.0), x_drive(), 0.02, 0.03, plan, 100000, 11);
  const ErrorEstimate est = estimate_errors(data, 1.0);
  EXPECT_NEAR(est.gamma_hat, 0.02, 1e-3);
  EXPECT_NEAR(est.delta_hat, 0.03, 3e-3);
}

TEST(Pipeline, ShotNoiseShrinksWithShots) {
  auto spread = [](std::uint64_t shots) {
    std::vector<double> g;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      ExperimentPlan plan;
      plan.gamma_ns = {5, 10, 15, 20};
      const auto data = simulate_experiment(PulseModel::rabi(1.0), x_drive(), 0.02, 0.0, plan, shots, seed);
      g.push_back(estimate_gamma(data.gamma_records, kPi / 2).gamma_hat);
    }
    const double mean = std::accumulate(g.begin(), g.end(), 0.0) / g.size();
    double var = 0.0;
    for (double x : g) var += (x - mean) * (x - mean);
    return std::sqrt(var / (g.size() - 1));
  };
  const double ratio = spread(10000) / spread(1000000);
  EXPECT_GT(ratio, 10.0 / 2);
  EXPECT_LT(ratio, 10.0 * 2);
}
