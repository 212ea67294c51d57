#include "raman/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "raman/errors.hpp"
#include "raman/multi_pass.hpp"
#include "raman/nr_approx.hpp"

namespace raman::cli {

using json = nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

// Conversions accept both JSON numbers (config file) and strings (flags).

double to_double(const json& j, const std::string& key) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t used = 0;
    try {
      const double v = std::stod(s, &used);
      if (used == s.size() && std::isfinite(v)) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError(key, "'" + s + "' is not a number");
  }
  throw ConfigError(key, "expected a number");
}

std::uint64_t to_count(const json& j, const std::string& key) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    if (j.get<std::int64_t>() < 0) throw ConfigError(key, "must be non-negative");
    return j.get<std::uint64_t>();
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (!s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      try {
        return std::stoull(s);
      } catch (const std::exception&) {
      }
    }
    throw ConfigError(key, "'" + s + "' is not a non-negative integer");
  }
  throw ConfigError(key, "expected a non-negative integer");
}

std::string to_string(const json& j, const std::string& key) {
  if (j.is_string()) return j.get<std::string>();
  throw ConfigError(key, "expected a string");
}

// "a,b,c" or [a, b, c].
std::vector<json> triple(const json& j, const std::string& key) {
  std::vector<json> parts;
  if (j.is_array()) {
    for (const auto& v : j) parts.push_back(v);
  } else if (j.is_string()) {
    std::stringstream ss(j.get<std::string>());
    std::string item;
    while (std::getline(ss, item, ',')) parts.emplace_back(item);
  }
  if (parts.size() != 3) throw ConfigError(key, "expected three values min,max,steps");
  return parts;
}

Range to_range(const json& j, const std::string& key) {
  const auto p = triple(j, key);
  Range r{to_double(p[0], key), to_double(p[1], key), 0};
  const std::uint64_t steps = to_count(p[2], key);
  if (steps < 1) throw ConfigError(key, "grid must have at least one point");
  if (steps > 100000) throw ConfigError(key, "too many grid points");
  r.steps = static_cast<int>(steps);
  if (r.steps > 1 && r.max < r.min) throw ConfigError(key, "max < min");
  return r;
}

PassRange to_pass_range(const json& j, const std::string& key) {
  const auto p = triple(j, key);
  PassRange r{to_count(p[0], key), to_count(p[1], key), to_count(p[2], key)};
  if (r.step < 1) throw ConfigError(key, "step must be at least 1");
  if (r.max < r.min) throw ConfigError(key, "empty pass range (max < min)");
  if (r.max > kMaxPasses) throw ConfigError(key, "pass count above " + std::to_string(kMaxPasses));
  return r;
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "model", "gate", "fill", "epsilon", "delta", "eps_range", "delta_range", "n_range", "method",
      "shots", "seed", "output", "format", "records", "shape", "passes", "samples"};
  return keys;
}

Config parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end()) {
      throw ConfigError(key, "unknown configuration key");
    }
  }
  Config c;
  if (j.contains("model")) c.model = to_string(j["model"], "model");
  if (j.contains("gate")) c.gate = to_string(j["gate"], "gate");
  if (j.contains("fill")) c.fill = to_double(j["fill"], "fill");
  if (j.contains("epsilon")) c.epsilon = to_double(j["epsilon"], "epsilon");
  if (j.contains("delta")) c.delta = to_double(j["delta"], "delta");
  if (j.contains("eps_range")) c.eps_range = to_range(j["eps_range"], "eps_range");
  if (j.contains("delta_range")) c.delta_range = to_range(j["delta_range"], "delta_range");
  if (j.contains("n_range")) c.n_range = to_pass_range(j["n_range"], "n_range");
  if (j.contains("method")) c.method = to_string(j["method"], "method");
  if (j.contains("shots")) c.shots = to_count(j["shots"], "shots");
  if (j.contains("seed")) c.seed = to_count(j["seed"], "seed");
  if (j.contains("output")) c.output = to_string(j["output"], "output");
  if (j.contains("format")) c.format = to_string(j["format"], "format");
  if (j.contains("records")) c.records = to_string(j["records"], "records");
  if (j.contains("shape")) c.shape = to_string(j["shape"], "shape");
  if (j.contains("passes")) c.passes = to_count(j["passes"], "passes");
  if (j.contains("samples")) c.samples = static_cast<int>(std::min<std::uint64_t>(to_count(j["samples"], "samples"), 1000000));

  if (!(c.fill > 0.0 && c.fill <= 1.0)) throw ConfigError("fill", "must lie in (0, 1]");
  if (c.method != "exact" && c.method != "nr") throw ConfigError("method", "expected exact or nr");
  if (c.format != "csv" && c.format != "json") throw ConfigError("format", "expected csv or json");
  if (c.passes < 1) throw ConfigError("passes", "must be at least 1");
  if (c.samples < 2) throw ConfigError("samples", "must be at least 2");
  for (const auto& [name, v] : {std::pair{"epsilon", c.epsilon}, std::pair{"delta", c.delta}}) {
    if (std::abs(v) > kPi) throw ConfigError(name, "magnitude must not exceed pi");
  }
  return c;
}

void write_output(const Config& config, const std::string& text, std::ostream& out) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw IoError("cannot open output file '" + config.output + "'");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing output file '" + config.output + "'");
}

CKPair single_pass_ck(const Config& config, const PulseModel& model, double epsilon, double delta) {
  if (config.method == "nr") {
    const NRParams nr = nr_ck(HamiltonianErrors::make(epsilon, delta, model.fill()));
    return CKPair{nr.a, nr.b, delta};
  }
  return model.ck(epsilon, delta);
}

std::string row_method(const Config& config, const PulseModel& model) {
  return config.method == "nr" ? "nr" : model.method_tag();
}

std::string render_rows(const Config& config, const std::vector<Row>& rows) {
  std::ostringstream os;
  if (config.format == "json") {
    write_rows_json(rows, os);
  } else {
    write_rows_csv(rows, os);
  }
  return os.str();
}

void print_kv(std::ostream& os, const std::string& key, double value) {
  os << key << ": " << format_number(value) << '\n';
}

// ---- subcommands ----------------------------------------------------------

int cmd_simulate(const Config& config, std::ostream& out) {
  const PulseModel model = config.pulse_model();
  const GateSpec gate = config.gate_spec();
  const RamanDrive drive = gate.drive();
  const CKPair ck = single_pass_ck(config, model, config.epsilon, config.delta);

  std::ostringstream os;
  os << "model: " << model.name() << '\n' << "gate: " << gate.token << '\n';
  print_kv(os, "zeta", gate.zeta);
  print_kv(os, "phi", gate.phi);
  print_kv(os, "r", model.fill());
  print_kv(os, "epsilon", config.epsilon);
  print_kv(os, "delta", config.delta);
  os << "a: " << format_number(ck.a.real()) << ' ' << format_number(ck.a.imag()) << '\n';
  os << "b: " << format_number(ck.b.real()) << ' ' << format_number(ck.b.imag()) << '\n';
  const GateErrors ge = gate_errors_from_ck(ck);
  print_kv(os, "alpha", ge.alpha);
  if (ge.beta) {
    print_kv(os, "beta", *ge.beta);
  } else {
    os << "beta: undefined (b = 0)\n";
  }
  print_kv(os, "gamma", ge.gamma);
  print_kv(os, "fidelity", fidelity(assemble_propagator(drive, ck), ideal_gate(drive)));
  if (std::abs(config.epsilon) <= kNrMaxRange && std::abs(config.delta) <= kNrMaxRange) {
    print_kv(os, "fidelity_nr", fidelity_hamiltonian(model.errors(config.epsilon, config.delta)));
  }
  if (model.fill() == 1.0) print_kv(os, "fidelity_r1", fidelity_closed_r1(ge.alpha, ge.gamma, 0.0));

  std::vector<Row> rows;
  for (const auto n : config.n_range.values()) {
    rows.push_back(Row{model.name(), gate.token, model.fill(), config.epsilon, config.delta, n,
                       multipass_populations(drive, ck, n), row_method(config, model)});
  }
  if (config.output.empty()) {
    os << "populations:\n";
    write_rows_csv(rows, os);
    out << os.str();
  } else {
    out << os.str();
    write_output(config, render_rows(config, rows), out);
  }
  return kOk;
}

int cmd_scan(const Config& config, std::ostream& out) {
  const std::vector<Row> rows = scan_rows(config);
  write_output(config, render_rows(config, rows), out);
  return kOk;
}

void print_estimate(std::ostream& os, const ErrorEstimate& est) {
  print_kv(os, "zeta_hat", est.zeta_hat);
  print_kv(os, "gamma_hat", est.gamma_hat);
  print_kv(os, "alpha_hat", est.alpha_hat);
  print_kv(os, "beta_hat", est.beta_hat);
  print_kv(os, "delta_hat", est.delta_hat);
  os << "method: " << method_name(est.method) << '\n';
  print_kv(os, "residual", est.residual);
  for (const auto& w : est.warnings) os << "warning: " << w << '\n';
}

int cmd_estimate(const Config& config, std::ostream& out) {
  const PulseModel model = config.pulse_model();
  ExperimentData data;
  const bool self_test = config.records.empty();
  if (self_test) {
    data = simulate_experiment(model, config.gate_spec().drive(), config.epsilon, config.delta,
                               ExperimentPlan::defaults(model.fill()), config.shots, config.seed);
    if (!config.output.empty()) {
      std::ostringstream rec;
      write_records(data, rec);
      write_output(config, rec.str(), out);
    }
  } else {
    std::ifstream in(config.records);
    if (!in) throw IoError("cannot open records file '" + config.records + "'");
    data = read_records(in);
  }

  const ErrorEstimate est = estimate_errors(data, model.fill());
  std::ostringstream os;
  os << "model: " << model.name() << '\n';
  print_kv(os, "r", model.fill());
  print_estimate(os, est);
  if (self_test) {
    const double gamma_true = std::abs(config.epsilon);
    const double delta_true = std::abs(config.delta);
    const double alpha_true = model.fill() * delta_true / 2.0;
    const double beta_true = delta_true / 2.0;
    print_kv(os, "gamma_true", gamma_true);
    print_kv(os, "alpha_true", alpha_true);
    print_kv(os, "beta_true", beta_true);
    print_kv(os, "delta_true", delta_true);
    print_kv(os, "gamma_abs_error", std::abs(est.gamma_hat - gamma_true));
    print_kv(os, "alpha_abs_error", std::abs(est.alpha_hat - alpha_true));
    print_kv(os, "beta_abs_error", std::abs(est.beta_hat - beta_true));
    print_kv(os, "delta_abs_error", std::abs(est.delta_hat - delta_true));
  }
  out << os.str();
  return kOk;
}

int cmd_shapes(const Config& config, std::ostream& out) {
  std::optional<PulseShape> shape;
  try {
    shape = PulseShape::parse(config.shape);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("shape", e.what());
  }
  const double duration = shape->duration();
  std::ostringstream os;
  char header[64];
  std::snprintf(header, sizeof header, "# r=%.6f\n", filling_ratio(*shape));
  os << header << "t,f\n";
  const std::uint64_t total = config.passes * static_cast<std::uint64_t>(config.samples);
  for (std::uint64_t i = 0; i <= total; ++i) {
    const double t = static_cast<double>(i) / config.samples;  // in units of T
    const std::uint64_t k = i / static_cast<std::uint64_t>(config.samples);
    double local = t - static_cast<double>(k);
    if (i == total) local = 1.0;  // last point closes the final pass
    os << format_number(t) << ',' << format_number(shape_value(*shape, local * duration)) << '\n';
  }
  write_output(config, os.str(), out);
  return kOk;
}

}  // namespace

// ---- public helpers ---------------------------------------------------------

std::vector<double> Range::values() const {
  std::vector<double> v;
  if (steps == 1) return {min};
  for (int i = 0; i < steps; ++i) v.push_back(min + (max - min) * i / (steps - 1));
  return v;
}

std::vector<std::uint64_t> PassRange::values() const {
  std::vector<std::uint64_t> v;
  for (std::uint64_t n = min; n <= max; n += step) v.push_back(n);
  return v;
}

GateSpec GateSpec::parse(const std::string& token) {
  GateSpec g;
  g.token = token;
  if (token == "x") {
    g.zeta = gate_mixing_angle(Gate::X);
  } else if (token == "hadamard") {
    g.zeta = gate_mixing_angle(Gate::Hadamard);
  } else if (token.rfind("custom:", 0) == 0) {
    const std::string body = token.substr(7);
    const auto comma = body.find(',');
    if (comma == std::string::npos) throw ConfigError("gate", "custom gate needs custom:<zeta>,<phi>");
    g.zeta = to_double(json(body.substr(0, comma)), "gate");
    g.phi = to_double(json(body.substr(comma + 1)), "gate");
    if (g.zeta < 0.0 || g.zeta > kPi) throw ConfigError("gate", "zeta must lie in [0, pi]");
  } else {
    throw ConfigError("gate", "unknown gate '" + token + "' (expected x, hadamard, custom:<zeta>,<phi>)");
  }
  return g;
}

RamanDrive GateSpec::drive() const {
  return drive_for_mixing_angle(zeta, 1.0, phi);
}

PulseModel Config::pulse_model() const {
  try {
    return PulseModel::parse(model, fill);
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    throw ConfigError(what.find("fill") != std::string::npos ? "fill" : "model", what);
  } catch (const std::domain_error& e) {
    throw ConfigError("model", e.what());
  }
}

GateSpec Config::gate_spec() const {
  return GateSpec::parse(gate);
}

std::vector<Row> scan_rows(const Config& config) {
  const PulseModel model = config.pulse_model();
  const GateSpec gate = config.gate_spec();
  const RamanDrive drive = gate.drive();
  std::vector<double> eps = config.eps_range.values();
  std::vector<double> dels = config.delta_range.values();
  const std::vector<std::uint64_t> ns = config.n_range.values();
  std::sort(eps.begin(), eps.end());
  std::sort(dels.begin(), dels.end());
  if (eps.empty() || dels.empty() || ns.empty()) throw ConfigError("grid", "empty scan grid");

  std::mt19937_64 rng(config.seed);
  std::vector<Row> rows;
  rows.reserve(eps.size() * dels.size() * ns.size());
  for (const double e : eps) {
    for (const double d : dels) {
      CKPair ck;
      try {
        ck = single_pass_ck(config, model, e, d);
      } catch (const std::domain_error& ex) {
        throw ConfigError("eps_range", ex.what());
      } catch (const std::invalid_argument& ex) {
        throw ConfigError("eps_range", ex.what());
      }
      for (const auto n : ns) {
        Populations p = multipass_populations(drive, ck, n);
        if (config.shots > 0) {
          const ExperimentRecord rec = simulate_measurement(p, n, config.shots, rng);
          p = Populations{rec.p0, rec.p1, rec.pa};
        }
        rows.push_back(Row{model.name(), gate.token, model.fill(), e, d, n, p, row_method(config, model)});
      }
    }
  }
  return rows;
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_rows_csv(const std::vector<Row>& rows, std::ostream& out) {
  out << "model,gate,r,epsilon,delta,N,P0,P1,Pa,method\n";
  for (const auto& r : rows) {
    out << r.model << ',' << r.gate << ',' << format_number(r.r) << ',' << format_number(r.epsilon) << ','
        << format_number(r.delta) << ',' << r.n << ',' << format_number(r.pops.p0) << ','
        << format_number(r.pops.p1) << ',' << format_number(r.pops.pa) << ',' << r.method << '\n';
  }
}

void write_rows_json(const std::vector<Row>& rows, std::ostream& out) {
  // Numbers go through the CSV formatting so both outputs carry the same values.
  auto num = [](double x) { return std::stod(format_number(x)); };
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back(json{{"model", r.model},
                       {"gate", r.gate},
                       {"r", num(r.r)},
                       {"epsilon", num(r.epsilon)},
                       {"delta", num(r.delta)},
                       {"N", r.n},
                       {"P0", num(r.pops.p0)},
                       {"P1", num(r.pops.p1)},
                       {"Pa", num(r.pops.pa)},
                       {"method", r.method}});
  }
  out << arr.dump(2) << '\n';
}

ExperimentData read_records(std::istream& in) {
  ExperimentData data;
  bool have_zeta = false;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      if (line.rfind("role", 0) == 0) continue;
    }
    auto fail = [&](const std::string& msg) {
      throw EstimationError("records row " + std::to_string(line_no) + ": " + msg);
    };
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 6) fail("expected 6 columns role,N,P0,P1,Pa,shots");
    ExperimentRecord rec;
    try {
      rec.n = to_count(json(cells[1]), "N");
      rec.p0 = to_double(json(cells[2]), "P0");
      rec.p1 = to_double(json(cells[3]), "P1");
      rec.pa = to_double(json(cells[4]), "Pa");
      rec.shots = to_count(json(cells[5]), "shots");
      validate_record(rec);
    } catch (const std::exception& e) {
      fail(e.what());
    }
    const std::string& role = cells[0];
    if (role == "zeta") {
      if (have_zeta) fail("more than one zeta record");
      if (rec.n != 1) fail("the zeta record must have N = 1");
      data.zeta_record = rec;
      have_zeta = true;
    } else if (role == "gamma") {
      data.gamma_records.push_back(rec);
    } else if (role == "delta") {
      data.delta_records.push_back(rec);
    } else {
      fail("unknown role '" + role + "' (expected zeta, gamma, delta)");
    }
  }
  if (!have_zeta) throw EstimationError("records: no zeta record");
  if (data.gamma_records.empty()) throw EstimationError("records: no gamma records");
  if (data.delta_records.empty()) throw EstimationError("records: no delta records");
  return data;
}

void write_records(const ExperimentData& data, std::ostream& out) {
  out << "role,N,P0,P1,Pa,shots\n";
  auto emit = [&](const char* role, const ExperimentRecord& r) {
    out << role << ',' << r.n << ',' << format_number(r.p0) << ',' << format_number(r.p1) << ','
        << format_number(r.pa) << ',' << r.shots << '\n';
  };
  emit("zeta", data.zeta_record);
  for (const auto& r : data.gamma_records) emit("gamma", r);
  for (const auto& r : data.delta_records) emit("delta", r);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Error amplification and tomography for Raman qubit gates", "raman"};
  app.require_subcommand(1);

  struct Flag {
    const char* name;
    const char* key;
    const char* help;
  };
  const std::vector<Flag> common = {
      {"--model", "model", "rabi, rosen-zener or numeric:<shape>"},
      {"--gate", "gate", "x, hadamard or custom:<zeta>,<phi>"},
      {"--fill", "fill", "filling ratio r of the analytic models"},
      {"--method", "method", "exact or nr"},
      {"--shots", "shots", "shots per record (0 = noiseless)"},
      {"--seed", "seed", "sampler seed"},
      {"--output,-o", "output", "output file (default stdout)"},
      {"--format", "format", "csv or json"},
  };
  const std::map<std::string, std::vector<Flag>> specific = {
      {"simulate",
       {{"--epsilon", "epsilon", "pulse area error"},
        {"--delta", "delta", "detuning error"},
        {"--n-range", "n_range", "min,max,step"}}},
      {"scan",
       {{"--eps-range", "eps_range", "min,max,steps"},
        {"--delta-range", "delta_range", "min,max,steps"},
        {"--n-range", "n_range", "min,max,step"}}},
      {"estimate",
       {{"--epsilon", "epsilon", "true pulse area error (self-test)"},
        {"--delta", "delta", "true detuning error (self-test)"},
        {"--records", "records", "records CSV role,N,P0,P1,Pa,shots"}}},
      {"shapes",
       {{"--shape", "shape", "rect:<r>, sech:<r>, sin2, cos10, file:<path>"},
        {"--passes", "passes", "number of pulses"},
        {"--samples", "samples", "samples per pulse"}}},
  };
  const std::map<std::string, std::string> descriptions = {
      {"simulate", "single point: CK parameters, gate errors, fidelity, population series"},
      {"scan", "probability grid over (epsilon, delta, N)"},
      {"estimate", "estimate zeta, gamma, alpha, beta from records or a simulated experiment"},
      {"shapes", "sample a pulse envelope and report its filling ratio"},
  };

  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::map<std::string, std::string> config_paths;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, flags] : specific) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    subs[name] = sub;
    sub->add_option("--config", config_paths[name], "JSON config file; flags override its values");
    auto add = [&](const Flag& f) {
      options[name + "/" + f.key] = sub->add_option(f.name, values[name + "/" + f.key], f.help);
    };
    for (const auto& f : flags) add(f);
    if (name != "shapes") {
      for (const auto& f : common) add(f);
    } else {
      add(common[6]);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << "config error: " << msg.str();
    return e.get_exit_code() == 0 ? kOk : kConfigError;
  }

  std::string command;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) command = name;
  }

  try {
    json merged = json::object();
    if (!config_paths[command].empty()) {
      std::ifstream in(config_paths[command]);
      if (!in) throw IoError("cannot open config file '" + config_paths[command] + "'");
      try {
        merged = json::parse(in);
      } catch (const json::parse_error& e) {
        throw ConfigError("config", std::string("invalid JSON: ") + e.what());
      }
      if (!merged.is_object()) throw ConfigError("config", "expected a JSON object");
    }
    for (const auto& [id, opt] : options) {
      if (id.rfind(command + "/", 0) != 0 || opt->count() == 0) continue;
      merged[id.substr(command.size() + 1)] = values[id];
    }
    const Config config = parse_config(merged);

    if (command == "simulate") return cmd_simulate(config, out);
    if (command == "scan") return cmd_scan(config, out);
    if (command == "estimate") return cmd_estimate(config, out);
    return cmd_shapes(config, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const EstimationError& e) {
    err << "estimation failure: " << e.what() << '\n';
    return kEstimationError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::domain_error& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace raman::cli
