#pragma once

// Estimation of the coherent gate errors from multi-pass population records.
// All estimators are even in epsilon and delta, so they return magnitudes.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "raman/drive.hpp"
#include "raman/models.hpp"
#include "raman/single_pass.hpp"

namespace raman {

struct ExperimentRecord {
  std::uint64_t n = 1;
  double p0 = 0.0;
  double p1 = 0.0;
  double pa = 0.0;
  std::uint64_t shots = 0;  // 0 means noiseless
};

enum class EstimationMethod { ResonantArcsin, TaylorLowFill, RootfindHighFill, SmallEpsClosedForm };

/// "resonant-arcsin", "taylor-low-fill", "rootfind-high-fill", "small-eps-closed-form".
std::string_view method_name(EstimationMethod method);

struct ZetaEstimate {
  double zeta = 0.0;
  double omega0_ratio = 0.0;  // |Omega_0| / Omega = sin(zeta/2)
  double omega1_ratio = 0.0;  // |Omega_1| / Omega = cos(zeta/2)
};

struct ErrorEstimate {
  double gamma_hat = 0.0;
  double alpha_hat = 0.0;
  double beta_hat = 0.0;
  double zeta_hat = 0.0;
  double delta_hat = 0.0;
  EstimationMethod method = EstimationMethod::ResonantArcsin;
  double residual = 0.0;
  std::size_t records_used = 0;
  std::optional<double> taylor_delta;  // closed-form Taylor seed of the low-fill branch
  std::vector<std::string> warnings;
};

/// Throws std::invalid_argument if a population lies outside [0, 1] or a
/// noiseless record is not normalized to 1e-6.
void validate_record(const ExperimentRecord& record);

/// zeta = arcsin(sqrt(p1)) from a single-pass record.
ZetaEstimate estimate_zeta(const ExperimentRecord& record);

/// Refits zeta to a single-pass record with the near-resonance populations at
/// the given error magnitudes. Removes the O(epsilon) bias of the plain
/// arcsin near zeta = pi/2. Result lies in [0, pi/2].
double refine_zeta(const ExperimentRecord& record, double gamma, double delta, double fill);

/// gamma from the upper-state population of short sequences. Records with
/// n gamma beyond 0.8 pi/2 or a saturated arcsin are dropped with a warning.
/// Throws EstimationError if nothing is left.
ErrorEstimate estimate_gamma(std::span<const ExperimentRecord> records, double zeta);

/// Taylor inversion for delta^2 at one record. Throws std::domain_error at
/// the cot singularity or for gamma = 0.
double taylor_delta_squared(const ExperimentRecord& record, double gamma, double fill, double zeta);

/// fill < 0.5: Taylor seed refined by least squares on the near-resonance
/// upper-state population.
ErrorEstimate estimate_alpha_low_fill(std::span<const ExperimentRecord> records, double gamma, double fill,
                                      double zeta);

/// fill >= 0.5, even n: closed form for gamma < 0.005, otherwise least squares
/// on the near-resonance |psi_1> population with delta in [0, pi / n_min].
ErrorEstimate estimate_alpha_high_fill(std::span<const ExperimentRecord> records, double gamma, double fill,
                                       double zeta);

/// Multinomial sample of `shots` measurements; shots = 0 copies the populations.
ExperimentRecord simulate_measurement(const Populations& pops, std::uint64_t n, std::uint64_t shots,
                                      std::uint64_t seed);
ExperimentRecord simulate_measurement(const Populations& pops, std::uint64_t n, std::uint64_t shots,
                                      std::mt19937_64& rng);

/// Pass counts used by the full pipeline.
struct ExperimentPlan {
  std::uint64_t zeta_n = 1;
  std::vector<std::uint64_t> gamma_ns;
  std::vector<std::uint64_t> delta_ns;

  /// gamma from n = 5..20; delta from n = 2..60 (fill < 0.5) or even n = 20..100.
  static ExperimentPlan defaults(double fill);
};

struct ExperimentData {
  ExperimentRecord zeta_record;
  std::vector<ExperimentRecord> gamma_records;
  std::vector<ExperimentRecord> delta_records;
};

/// Records of a simulated experiment on `model` with the given true errors.
ExperimentData simulate_experiment(const PulseModel& model, const RamanDrive& drive, double epsilon, double delta,
                                   const ExperimentPlan& plan, std::uint64_t shots, std::uint64_t seed);

/// zeta, then gamma, then delta through the branch selected by the fill,
/// followed by a few rounds of zeta refinement and re-estimation.
ErrorEstimate estimate_errors(const ExperimentData& data, double fill);

}  // namespace raman
