#include "raman/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>

#include "raman/errors.hpp"
#include "raman/multi_pass.hpp"
#include "raman/nr_approx.hpp"

namespace raman {

namespace {

constexpr double kPi = std::numbers::pi;
// Records beyond this fraction of the first arcsin branch are not trusted for gamma.
constexpr double kWindowFraction = 0.8;
// Below this gamma the high-fill branch uses the small-epsilon closed form.
constexpr double kSmallGamma = 0.005;
// A weighted RMS residual above this means no delta explains the records.
constexpr double kMaxResidual = 0.1;
constexpr int kGridPoints = 2001;
// Rounds of zeta refinement in the full pipeline.
constexpr int kZetaRounds = 3;

bool all_noiseless(std::span<const ExperimentRecord> records) {
  return std::all_of(records.begin(), records.end(), [](const ExperimentRecord& r) { return r.shots == 0; });
}

// Multinomial variance of a measured frequency, floored so that p = 0 or 1
// does not produce infinite weight.
double frequency_variance(double p, std::uint64_t shots) {
  const double s = static_cast<double>(shots);
  const double floor = 0.5 / s;
  const double q = std::clamp(p, floor, 1.0 - floor);
  return q * (1.0 - q) / s;
}

RamanDrive unit_drive(double zeta) {
  return drive_for_mixing_angle(zeta, 1.0, 0.0);
}

struct Minimum {
  double x = 0.0;
  double value = 0.0;
};

// Global minimization on [lo, hi]: dense grid, then Brent refinement around
// every local grid minimum. Candidates within `tie` of the best value are
// resolved by `prefer` (smaller key wins).
Minimum minimize_on_interval(const std::function<double(double)>& f, double lo, double hi,
                             const std::function<double(double)>& prefer, std::vector<double>* trace = nullptr) {
  std::vector<double> xs(kGridPoints);
  std::vector<double> fs(kGridPoints);
  const double step = (hi - lo) / (kGridPoints - 1);
  for (int i = 0; i < kGridPoints; ++i) {
    xs[i] = lo + step * i;
    fs[i] = f(xs[i]);
  }
  if (trace) {
    for (int i = 0; i < kGridPoints; i += (kGridPoints - 1) / 10) trace->push_back(fs[i]);
  }

  std::vector<Minimum> candidates;
  for (int i = 0; i < kGridPoints; ++i) {
    const bool left_ok = i == 0 || fs[i] <= fs[i - 1];
    const bool right_ok = i == kGridPoints - 1 || fs[i] <= fs[i + 1];
    if (!(left_ok && right_ok)) continue;
    const double a = xs[std::max(i - 1, 0)];
    const double b = xs[std::min(i + 1, kGridPoints - 1)];
    const auto [x, v] = boost::math::tools::brent_find_minima(f, a, b, std::numeric_limits<double>::digits / 2);
    candidates.push_back(v <= fs[i] ? Minimum{x, v} : Minimum{xs[i], fs[i]});
  }

  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) best = std::min(best, c.value);
  const double tie = 1e-14 + 1e-6 * best;
  const Minimum* chosen = nullptr;
  for (const auto& c : candidates) {
    if (c.value > best + tie) continue;
    if (!chosen || prefer(c.x) < prefer(chosen->x)) chosen = &c;
  }
  return *chosen;
}

std::vector<double> fit_weights(std::span<const ExperimentRecord> records,
                                const std::function<double(const ExperimentRecord&)>& observable) {
  std::vector<double> w(records.size(), 1.0);
  if (all_noiseless(records)) return w;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    w[i] = r.shots == 0 ? 1e12 : 1.0 / frequency_variance(observable(r), r.shots);
  }
  return w;
}

double weighted_rms(const std::vector<double>& residuals, const std::vector<double>& weights) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    num += weights[i] * residuals[i] * residuals[i];
    den += weights[i];
  }
  return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

void require_records(std::span<const ExperimentRecord> records, const char* who) {
  if (records.empty()) throw EstimationError(std::string(who) + ": no records");
  for (const auto& r : records) validate_record(r);
}

std::string describe_trace(const std::vector<double>& trace) {
  std::ostringstream os;
  os << "residual trace over the bracket:";
  for (double v : trace) os << ' ' << std::sqrt(v);
  return os.str();
}

void finish_delta(ErrorEstimate& est, double delta_hat, double fill) {
  est.delta_hat = delta_hat;
  est.alpha_hat = fill * delta_hat / 2.0;
  est.beta_hat = delta_hat / 2.0;
}

}  // namespace

std::string_view method_name(EstimationMethod method) {
  switch (method) {
    case EstimationMethod::ResonantArcsin:
      return "resonant-arcsin";
    case EstimationMethod::TaylorLowFill:
      return "taylor-low-fill";
    case EstimationMethod::RootfindHighFill:
      return "rootfind-high-fill";
    case EstimationMethod::SmallEpsClosedForm:
      return "small-eps-closed-form";
  }
  return "unknown";
}

void validate_record(const ExperimentRecord& record) {
  for (double p : {record.p0, record.p1, record.pa}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      std::ostringstream os;
      os << "record n=" << record.n << ": population " << p << " outside [0, 1]";
      throw std::invalid_argument(os.str());
    }
  }
  const double sum = record.p0 + record.p1 + record.pa;
  const double tol = record.shots == 0 ? 1e-6 : 1e-6 + 1.0 / static_cast<double>(record.shots);
  if (std::abs(sum - 1.0) > tol) {
    std::ostringstream os;
    os << "record n=" << record.n << ": populations sum to " << sum;
    throw std::invalid_argument(os.str());
  }
}

ZetaEstimate estimate_zeta(const ExperimentRecord& record) {
  if (record.p1 > 1.0) throw std::invalid_argument("estimate_zeta: p1 > 1");
  if (record.p1 < 0.0) throw std::invalid_argument("estimate_zeta: p1 < 0");
  ZetaEstimate z;
  z.zeta = std::asin(std::sqrt(record.p1));
  z.omega0_ratio = std::sin(z.zeta / 2.0);
  z.omega1_ratio = std::cos(z.zeta / 2.0);
  return z;
}

double refine_zeta(const ExperimentRecord& record, double gamma, double delta, double fill) {
  validate_record(record);
  const HamiltonianErrors err{gamma, delta, fill};
  const NRParams nr = nr_ck(err);
  const CKPair ck{nr.a, nr.b, delta};
  auto objective = [&](double zeta) {
    const RamanDrive drive = unit_drive(zeta);
    const MultiPassCK m = multipass_ck(ck, record.n);
    const Populations p = single_pass_populations(drive, CKPair{m.a_n, m.b_n, static_cast<double>(record.n) * delta});
    return std::pow(p.p0 - record.p0, 2) + std::pow(p.p1 - record.p1, 2);
  };
  return minimize_on_interval(objective, 0.0, kPi / 2.0, [](double z) { return z; }).x;
}

ErrorEstimate estimate_gamma(std::span<const ExperimentRecord> records, double zeta) {
  require_records(records, "estimate_gamma");
  const double k0 = std::pow(std::sin(zeta / 2.0), 2);
  if (k0 < 1e-12) throw EstimationError("estimate_gamma: |Omega_0| = 0, the upper state is not driven");

  ErrorEstimate est;
  est.zeta_hat = zeta;
  est.method = EstimationMethod::ResonantArcsin;

  struct PerRecord {
    double n;
    double gamma;
    double weight;
  };
  const bool noiseless = all_noiseless(records);
  std::vector<PerRecord> kept;
  for (const auto& r : records) {
    if (r.n == 0) {
      est.warnings.push_back("record n=0 carries no information, skipped");
      continue;
    }
    const double n = static_cast<double>(r.n);
    const double x = std::min(std::sqrt(r.pa / k0), 1.0);
    const double g = std::asin(x) / n;
    if (n * g >= kPi / 2.0 - 1e-12) {
      std::ostringstream os;
      os << "record n=" << r.n << " saturates the arcsin (n*gamma >= pi/2), discarded";
      est.warnings.push_back(os.str());
      continue;
    }
    double w = 1.0;
    if (!noiseless) {
      if (r.shots == 0) {
        w = 1e12;
      } else {
        const double s = static_cast<double>(r.shots);
        const double p = std::clamp(r.pa, 0.5 / s, k0 - 0.5 / s);
        const double dg = 1.0 / (2.0 * n * std::sqrt(std::max(p * (k0 - p), 1e-300)));
        w = 1.0 / (frequency_variance(r.pa, r.shots) * dg * dg);
      }
    }
    kept.push_back({n, g, w});
  }

  auto mean = [](const std::vector<PerRecord>& v) {
    double num = 0.0;
    double den = 0.0;
    for (const auto& p : v) {
      num += p.weight * p.gamma;
      den += p.weight;
    }
    return num / den;
  };

  if (kept.empty()) throw EstimationError("estimate_gamma: every record was discarded");
  double g_hat = mean(kept);
  // Window n <= 0.8 (pi/2) / gamma, applied with the running estimate and iterated once.
  for (int pass = 0; pass < 2 && g_hat > 0.0; ++pass) {
    const double n_max = kWindowFraction * (kPi / 2.0) / g_hat;
    std::vector<PerRecord> inside;
    for (const auto& p : kept) {
      if (p.n <= n_max) {
        inside.push_back(p);
      } else {
        std::ostringstream os;
        os << "record n=" << p.n << " beyond the amplification window n <= " << n_max << ", discarded";
        est.warnings.push_back(os.str());
      }
    }
    if (inside.empty()) {
      throw EstimationError("estimate_gamma: no record inside the amplification window n <= " +
                            std::to_string(n_max));
    }
    kept = std::move(inside);
    g_hat = mean(kept);
  }

  std::vector<double> res;
  std::vector<double> w;
  for (const auto& p : kept) {
    res.push_back(p.gamma - g_hat);
    w.push_back(p.weight);
  }
  est.gamma_hat = g_hat;
  est.residual = weighted_rms(res, w);
  est.records_used = kept.size();
  return est;
}

double taylor_delta_squared(const ExperimentRecord& record, double gamma, double fill, double zeta) {
  const double ne = static_cast<double>(record.n) * gamma;
  const double s = std::sin(ne);
  if (gamma <= 0.0 || std::abs(s) < 1e-12) {
    throw std::domain_error("taylor inversion undefined: n*gamma is a multiple of pi");
  }
  const double denom = 1.0 - ne * std::cos(ne) / s;
  if (std::abs(denom) < 1e-12 || fill >= 1.0) {
    throw std::domain_error("taylor inversion undefined: vanishing delta sensitivity");
  }
  const double k0 = std::pow(std::sin(zeta / 2.0), 2);
  const double one_minus_r = 1.0 - fill;
  return 4.0 * gamma * gamma * (1.0 - record.pa / (k0 * s * s)) / (one_minus_r * one_minus_r * denom);
}

ErrorEstimate estimate_alpha_low_fill(std::span<const ExperimentRecord> records, double gamma, double fill,
                                      double zeta) {
  if (!(fill > 0.0 && fill < 0.5)) throw std::invalid_argument("estimate_alpha_low_fill: requires 0 < fill < 0.5");
  require_records(records, "estimate_alpha_low_fill");

  ErrorEstimate est;
  est.method = EstimationMethod::TaylorLowFill;
  est.gamma_hat = gamma;
  est.zeta_hat = zeta;
  est.records_used = records.size();

  // Taylor seed. The expansion is linear in delta^2, pa = B (1 - c delta^2),
  // so delta^2 follows from a linear least-squares fit over the records. This
  // weights each record by its sensitivity B c, which vanishes at small n.
  const double k0 = std::pow(std::sin(zeta / 2.0), 2);
  double num = 0.0;
  double den = 0.0;
  for (const auto& r : records) {
    const double ne = static_cast<double>(r.n) * gamma;
    const double s = std::sin(ne);
    if (gamma <= 0.0 || std::abs(s) < 1e-12) {
      est.warnings.push_back("taylor seed undefined at n=" + std::to_string(r.n));
      continue;
    }
    const double base = k0 * s * s;
    const double slope = base * std::pow(1.0 - fill, 2) * (1.0 - ne * std::cos(ne) / s) / (4.0 * gamma * gamma);
    num += slope * (base - r.pa);
    den += slope * slope;
  }
  if (den > 0.0) {
    const double d2 = num / den;
    if (d2 < -1e-6 && all_noiseless(records)) {
      std::ostringstream os;
      os << "inconsistent records: Taylor inversion gives delta^2 = " << d2;
      throw EstimationError(os.str());
    }
    est.taylor_delta = std::sqrt(std::max(d2, 0.0));
  }

  const RamanDrive drive = unit_drive(zeta);
  const std::vector<double> w = fit_weights(records, [](const ExperimentRecord& r) { return r.pa; });
  auto objective = [&](double d) {
    const HamiltonianErrors err{gamma, d, fill};
    double acc = 0.0;
    for (std::size_t i = 0; i < records.size(); ++i) {
      const double diff = records[i].pa - pa_nr(err, records[i].n, drive).raw;
      acc += w[i] * diff * diff;
    }
    return acc;
  };
  const double seed = est.taylor_delta.value_or(0.0);
  std::vector<double> trace;
  const Minimum m = minimize_on_interval(
      objective, 0.0, kNrMaxRange, [seed](double d) { return std::abs(d - seed); }, &trace);

  double wsum = 0.0;
  for (double x : w) wsum += x;
  est.residual = std::sqrt(m.value / wsum);
  if (est.residual > kMaxResidual) {
    throw EstimationError("estimate_alpha_low_fill: no delta in [0, 0.2] fits the records; " + describe_trace(trace));
  }
  if (gamma == 0.0) est.warnings.push_back("gamma = 0: the upper-state population carries no delta information");
  finish_delta(est, m.x, fill);
  return est;
}

ErrorEstimate estimate_alpha_high_fill(std::span<const ExperimentRecord> records, double gamma, double fill,
                                       double zeta) {
  if (!(fill >= 0.5 && fill <= 1.0)) throw std::invalid_argument("estimate_alpha_high_fill: requires 0.5 <= fill <= 1");
  require_records(records, "estimate_alpha_high_fill");
  std::uint64_t n_min = std::numeric_limits<std::uint64_t>::max();
  for (const auto& r : records) {
    if (r.n == 0 || r.n % 2 != 0) {
      throw std::invalid_argument("estimate_alpha_high_fill: record n=" + std::to_string(r.n) + " is not a positive even count");
    }
    n_min = std::min(n_min, r.n);
  }

  ErrorEstimate est;
  est.gamma_hat = gamma;
  est.zeta_hat = zeta;
  est.records_used = records.size();
  const RamanDrive drive = unit_drive(zeta);
  const std::vector<double> w = fit_weights(records, [](const ExperimentRecord& r) { return r.p1; });
  double wsum = 0.0;
  for (double x : w) wsum += x;

  if (gamma < kSmallGamma) {
    est.method = EstimationMethod::SmallEpsClosedForm;
    const double sz = std::sin(zeta);
    if (sz < 1e-12) throw EstimationError("estimate_alpha_high_fill: sin(zeta) = 0, |psi_1> is never populated");
    double num = 0.0;
    for (std::size_t i = 0; i < records.size(); ++i) {
      const double x = std::min(std::sqrt(records[i].p1) / sz, 1.0);
      num += w[i] * 4.0 * std::asin(x) / (static_cast<double>(records[i].n) * fill);
    }
    const double d = num / wsum;
    std::vector<double> res;
    for (const auto& r : records) res.push_back(r.p1 - p1_small_eps(d, fill, r.n, drive).raw);
    est.residual = weighted_rms(res, w);
    finish_delta(est, d, fill);
    return est;
  }

  est.method = EstimationMethod::RootfindHighFill;
  const double hi = std::min(kNrMaxRange, kPi / static_cast<double>(n_min));
  auto objective = [&](double d) {
    const HamiltonianErrors err{gamma, d, fill};
    double acc = 0.0;
    for (std::size_t i = 0; i < records.size(); ++i) {
      const double diff = records[i].p1 - p1_even_nr(err, records[i].n, drive).raw;
      acc += w[i] * diff * diff;
    }
    return acc;
  };
  std::vector<double> trace;
  const Minimum m = minimize_on_interval(objective, 0.0, hi, [](double d) { return d; }, &trace);
  est.residual = std::sqrt(m.value / wsum);
  if (est.residual > kMaxResidual) {
    std::ostringstream os;
    os << "estimate_alpha_high_fill: no delta in [0, " << hi << "] fits the records; " << describe_trace(trace);
    throw EstimationError(os.str());
  }
  finish_delta(est, m.x, fill);
  return est;
}

ExperimentRecord simulate_measurement(const Populations& pops, std::uint64_t n, std::uint64_t shots,
                                      std::mt19937_64& rng) {
  if (!(pops.p0 >= -1e-9 && pops.p1 >= -1e-9 && pops.pa >= -1e-9) || std::abs(pops.sum() - 1.0) > 1e-6) {
    throw std::invalid_argument("simulate_measurement: populations are not normalized");
  }
  ExperimentRecord rec{n, pops.p0, pops.p1, pops.pa, shots};
  if (shots == 0) return rec;

  const double p0 = std::max(pops.p0, 0.0);
  const double p1 = std::max(pops.p1, 0.0);
  const double pa = std::max(pops.pa, 0.0);
  const double total = p0 + p1 + pa;
  using Count = long long;
  const Count s = static_cast<Count>(shots);
  std::binomial_distribution<Count> first(s, std::min(p0 / total, 1.0));
  const Count c0 = first(rng);
  const double rest = p1 + pa;
  Count c1 = 0;
  if (rest > 0.0 && s > c0) {
    std::binomial_distribution<Count> second(s - c0, std::min(p1 / rest, 1.0));
    c1 = second(rng);
  }
  const Count ca = s - c0 - c1;
  const double sd = static_cast<double>(s);
  rec.p0 = static_cast<double>(c0) / sd;
  rec.p1 = static_cast<double>(c1) / sd;
  rec.pa = static_cast<double>(ca) / sd;
  return rec;
}

ExperimentRecord simulate_measurement(const Populations& pops, std::uint64_t n, std::uint64_t shots,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return simulate_measurement(pops, n, shots, rng);
}

ExperimentPlan ExperimentPlan::defaults(double fill) {
  ExperimentPlan plan;
  plan.gamma_ns = {5, 10, 15, 20};
  if (fill < 0.5) {
    for (std::uint64_t n = 2; n <= 60; n += 2) plan.delta_ns.push_back(n);
  } else {
    for (std::uint64_t n = 20; n <= 100; n += 10) plan.delta_ns.push_back(n);
  }
  return plan;
}

ExperimentData simulate_experiment(const PulseModel& model, const RamanDrive& drive, double epsilon, double delta,
                                   const ExperimentPlan& plan, std::uint64_t shots, std::uint64_t seed) {
  const CKPair ck = model.ck(epsilon, delta);
  std::mt19937_64 rng(seed);
  auto record = [&](std::uint64_t n) {
    return simulate_measurement(multipass_populations(drive, ck, n), n, shots, rng);
  };
  ExperimentData data;
  data.zeta_record = record(plan.zeta_n);
  for (auto n : plan.gamma_ns) data.gamma_records.push_back(record(n));
  for (auto n : plan.delta_ns) data.delta_records.push_back(record(n));
  return data;
}

ErrorEstimate estimate_errors(const ExperimentData& data, double fill) {
  if (data.zeta_record.n != 1) throw std::invalid_argument("the mixing-angle record must be a single pass");
  validate_record(data.zeta_record);
  double zeta = estimate_zeta(data.zeta_record).zeta;
  // The plain arcsin is biased by the upper-state leakage; a first refit at
  // delta = 0 keeps the delta inversion away from that bias.
  zeta = refine_zeta(data.zeta_record, estimate_gamma(data.gamma_records, zeta).gamma_hat, 0.0, fill);
  ErrorEstimate est;
  for (int round = 0; round < kZetaRounds; ++round) {
    if (round > 0) zeta = refine_zeta(data.zeta_record, est.gamma_hat, est.delta_hat, fill);
    const ErrorEstimate g = estimate_gamma(data.gamma_records, zeta);
    est = fill < 0.5 ? estimate_alpha_low_fill(data.delta_records, g.gamma_hat, fill, zeta)
                     : estimate_alpha_high_fill(data.delta_records, g.gamma_hat, fill, zeta);
    est.warnings.insert(est.warnings.begin(), g.warnings.begin(), g.warnings.end());
  }
  return est;
}

}  // namespace raman
