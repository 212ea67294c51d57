#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "raman/drive.hpp"
#include "raman/models.hpp"
#include "raman/tomography.hpp"

namespace raman::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kIoError = 3, kEstimationError = 4 };

/// Invalid configuration; `field` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear grid min..max with `steps` points (steps = 1 gives {min}).
struct Range {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  std::vector<double> values() const;
};

/// Pass counts min, min + step, ..., <= max.
struct PassRange {
  std::uint64_t min = 1;
  std::uint64_t max = 20;
  std::uint64_t step = 1;

  std::vector<std::uint64_t> values() const;
};

struct GateSpec {
  std::string token = "x";
  double zeta = 0.0;
  double phi = 0.0;

  /// "x", "hadamard" or "custom:<zeta>,<phi>".
  static GateSpec parse(const std::string& token);
  RamanDrive drive() const;
};

struct Config {
  std::string model = "rabi";
  std::string gate = "x";
  double fill = 1.0;
  double epsilon = 0.0;
  double delta = 0.0;
  Range eps_range;
  Range delta_range;
  PassRange n_range;
  std::string method = "exact";  // exact | nr
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string output;  // empty: stdout
  std::string format = "csv";
  std::string records;  // estimate: records CSV instead of self-test
  std::string shape = "sin2";
  std::uint64_t passes = 1;
  int samples = 200;

  PulseModel pulse_model() const;
  GateSpec gate_spec() const;
};

/// One probability row of a scan or simulation.
struct Row {
  std::string model;
  std::string gate;
  double r = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  std::uint64_t n = 0;
  Populations pops;
  std::string method;
};

/// Rows for every (epsilon, delta, n) of the grid, sorted in that order.
std::vector<Row> scan_rows(const Config& config);

/// `%.12g` formatting used for every float in CSV output.
std::string format_number(double x);

void write_rows_csv(const std::vector<Row>& rows, std::ostream& out);
void write_rows_json(const std::vector<Row>& rows, std::ostream& out);

/// Records CSV: header `role,N,P0,P1,Pa,shots`, role in {zeta, gamma, delta}.
/// Throws EstimationError citing the 1-based line number of a bad row.
ExperimentData read_records(std::istream& in);
void write_records(const ExperimentData& data, std::ostream& out);

/// Entry point of the `raman` tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace raman::cli
