#include "raman/drive.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace raman {

namespace {

constexpr double kPi = std::numbers::pi;

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument(std::string(what) + ": cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

void check_fill(double fill, const char* kind) {
  if (!(fill > 0.0 && fill <= 1.0)) {
    throw std::invalid_argument(std::string(kind) + " pulse: fill must lie in (0, 1]");
  }
}

PulseShape read_sampled_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pulse file '" + path + "'");
  std::vector<double> times;
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto comma = t.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": expected 'time,value'");
    }
    const std::string lhs = trim(std::string_view(t).substr(0, comma));
    const std::string rhs = trim(std::string_view(t).substr(comma + 1));
    // Tolerate a single textual header row.
    if (times.empty() && !lhs.empty() && !(std::isdigit(static_cast<unsigned char>(lhs.front())) ||
                                            lhs.front() == '-' || lhs.front() == '+' || lhs.front() == '.')) {
      continue;
    }
    times.push_back(parse_double(lhs, "pulse file time"));
    values.push_back(parse_double(rhs, "pulse file value"));
  }
  return PulseShape::sampled(std::move(times), std::move(values));
}

}  // namespace

RamanDrive::RamanDrive(Complex omega0, Complex omega1) : omega0_(omega0), omega1_(omega1) {
  rms_ = std::sqrt(std::norm(omega0) + std::norm(omega1));
  if (!std::isfinite(rms_) || !(rms_ > 0.0)) {
    throw std::invalid_argument("RamanDrive: RMS coupling must be positive and finite");
  }
}

double RamanDrive::mixing_angle() const {
  // atan2 keeps full precision near zeta = 0 and zeta = pi.
  return 2.0 * std::atan2(std::abs(omega0_), std::abs(omega1_));
}

double RamanDrive::relative_phase() const {
  return std::arg(omega0_) - std::arg(omega1_);
}

double gate_mixing_angle(Gate gate) {
  return gate == Gate::X ? kPi / 2.0 : kPi / 4.0;
}

RamanDrive drive_for_mixing_angle(double zeta, double rms, double phi) {
  if (!(rms > 0.0)) throw std::invalid_argument("drive: rms must be positive");
  if (!(zeta >= 0.0 && zeta <= kPi)) throw std::invalid_argument("drive: mixing angle must lie in [0, pi]");
  const Complex omega0 = rms * std::sin(zeta / 2.0) * std::polar(1.0, phi);
  const Complex omega1 = rms * std::cos(zeta / 2.0);
  return RamanDrive(omega0, omega1);
}

RamanDrive drive_for_gate(Gate gate, double rms, double phi) {
  return drive_for_mixing_angle(gate_mixing_angle(gate), rms, phi);
}

Mat3 raman_hamiltonian(const RamanDrive& drive, double envelope, double detuning) {
  return raman_hamiltonian(drive, envelope, envelope, detuning);
}

Mat3 raman_hamiltonian(const RamanDrive& drive, double envelope0, double envelope1, double detuning) {
  Mat3 h;
  h(0, 2) = 0.5 * drive.omega0() * envelope0;
  h(1, 2) = 0.5 * drive.omega1() * envelope1;
  h(2, 0) = std::conj(h(0, 2));
  h(2, 1) = std::conj(h(1, 2));
  h(2, 2) = detuning;
  return h;
}

// ---------------------------------------------------------------------------

PulseShape::PulseShape(Kind kind, double duration, std::string source)
    : kind_(std::move(kind)), duration_(duration), source_(std::move(source)) {
  if (!(duration_ > 0.0) || !std::isfinite(duration_)) {
    throw std::invalid_argument("pulse: duration must be positive");
  }
}

PulseShape PulseShape::rectangular(double fill, double duration) {
  check_fill(fill, "rectangular");
  return PulseShape(RectangularPulse{fill}, duration);
}

PulseShape PulseShape::sech(double fill, double duration) {
  check_fill(fill, "sech");
  if (fill > 0.1) {
    throw std::invalid_argument("sech pulse: fill must be <= 0.1 so that truncation to one pass is negligible");
  }
  return PulseShape(SechPulse{fill}, duration);
}

PulseShape PulseShape::sin_squared(double duration) {
  return PulseShape(SinSquaredPulse{}, duration);
}

PulseShape PulseShape::one_minus_cos_ten(double duration) {
  return PulseShape(OneMinusCosTenPulse{}, duration);
}

PulseShape PulseShape::sampled(std::vector<double> times, std::vector<double> values) {
  if (times.size() != values.size()) throw std::invalid_argument("sampled pulse: column length mismatch");
  if (times.size() < 2) throw std::invalid_argument("sampled pulse: need at least two samples");
  if (times.front() != 0.0) throw std::invalid_argument("sampled pulse: first time must be 0");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw std::invalid_argument("sampled pulse: times must be strictly increasing");
  }
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("sampled pulse: values must be finite and >= 0");
  }
  const double duration = times.back();
  return PulseShape(SampledPulse{std::move(times), std::move(values)}, duration);
}

PulseShape PulseShape::parse(std::string_view token) {
  const std::string tok = trim(token);
  const auto colon = tok.find(':');
  const std::string head = tok.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string{} : tok.substr(colon + 1);
  if (head == "rect" && !arg.empty()) return rectangular(parse_double(arg, "rect fill"));
  if (head == "sech" && !arg.empty()) return sech(parse_double(arg, "sech fill"));
  if (tok == "sin2") return sin_squared();
  if (tok == "cos10") return one_minus_cos_ten();
  if (head == "file" && !arg.empty()) {
    PulseShape shape = read_sampled_file(arg);
    shape.source_ = arg;
    return shape;
  }
  throw std::invalid_argument("unknown pulse shape '" + tok + "' (expected rect:<r>, sech:<r>, sin2, cos10, file:<path>)");
}

std::string PulseShape::token() const {
  struct Visitor {
    const PulseShape& self;
    std::string operator()(const RectangularPulse& p) const {
      std::ostringstream os;
      os << "rect:" << p.fill;
      return os.str();
    }
    std::string operator()(const SechPulse& p) const {
      std::ostringstream os;
      os << "sech:" << p.fill;
      return os.str();
    }
    std::string operator()(const SinSquaredPulse&) const { return "sin2"; }
    std::string operator()(const OneMinusCosTenPulse&) const { return "cos10"; }
    std::string operator()(const SampledPulse&) const {
      return "file:" + (self.source_.empty() ? std::string("<memory>") : self.source_);
    }
  };
  return std::visit(Visitor{*this}, kind_);
}

std::vector<double> PulseShape::breakpoints() const {
  const double t_end = duration_;
  if (const auto* rect = std::get_if<RectangularPulse>(&kind_)) {
    const double half = 0.5 * rect->fill * t_end;
    std::vector<double> pts{0.0, 0.5 * t_end - half, 0.5 * t_end + half, t_end};
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
  }
  if (const auto* s = std::get_if<SampledPulse>(&kind_)) return s->times;
  return {0.0, t_end};
}

double shape_value(const PulseShape& shape, double t) {
  const double t_end = shape.duration();
  if (!(t >= 0.0 && t <= t_end)) throw std::domain_error("shape_value: t outside [0, T]");
  const double x = t / t_end;
  struct Visitor {
    double x;
    double t;
    double operator()(const RectangularPulse& p) const {
      return std::abs(x - 0.5) <= 0.5 * p.fill ? 1.0 : 0.0;
    }
    double operator()(const SechPulse& p) const {
      return 1.0 / std::cosh((kPi / p.fill) * (x - 0.5));
    }
    double operator()(const SinSquaredPulse&) const {
      const double s = std::sin(kPi * x);
      return s * s;
    }
    double operator()(const OneMinusCosTenPulse&) const {
      const double c2 = std::cos(kPi * x) * std::cos(kPi * x);
      return 1.0 - c2 * c2 * c2 * c2 * c2;
    }
    double operator()(const SampledPulse& p) const {
      const auto it = std::upper_bound(p.times.begin(), p.times.end(), t);
      if (it == p.times.end()) return p.values.back();
      const auto i = static_cast<std::size_t>(it - p.times.begin());
      const double w = (t - p.times[i - 1]) / (p.times[i] - p.times[i - 1]);
      return (1.0 - w) * p.values[i - 1] + w * p.values[i];
    }
  };
  return std::visit(Visitor{x, t}, shape.kind());
}

double filling_ratio(const PulseShape& shape) {
  struct Visitor {
    double t_end;
    double operator()(const RectangularPulse& p) const { return p.fill; }
    double operator()(const SechPulse& p) const {
      // (r/pi) * int_{-pi/2r}^{pi/2r} sech(u) du, truncated to one pass.
      return (2.0 * p.fill / kPi) * std::atan(std::sinh(kPi / (2.0 * p.fill)));
    }
    double operator()(const SinSquaredPulse&) const { return 0.5; }
    // 1 - (1/pi) int_0^pi cos^10 = 1 - C(10,5)/2^10 (Wallis).
    double operator()(const OneMinusCosTenPulse&) const { return 1.0 - 252.0 / 1024.0; }
    double operator()(const SampledPulse& p) const {
      double sum = 0.0;
      for (std::size_t i = 1; i < p.times.size(); ++i) {
        sum += 0.5 * (p.values[i] + p.values[i - 1]) * (p.times[i] - p.times[i - 1]);
      }
      return sum / t_end;
    }
  };
  return std::visit(Visitor{shape.duration()}, shape.kind());
}

double filling_ratio_quadrature(const PulseShape& shape) {
  using boost::math::quadrature::gauss_kronrod;
  const auto f = [&shape](double t) { return shape_value(shape, t); };
  const auto pts = shape.breakpoints();
  double total = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    double err = 0.0;
    total += gauss_kronrod<double, 31>::integrate(f, pts[i - 1], pts[i], 15, 1e-14, &err);
  }
  return total / shape.duration();
}

double pulse_area(const PulseShape& shape, double rms) {
  return rms * filling_ratio(shape) * shape.duration();
}

double rms_for_area_error(const PulseShape& shape, double epsilon) {
  return 2.0 * (kPi - epsilon) / (filling_ratio(shape) * shape.duration());
}

HamiltonianErrors HamiltonianErrors::make(double epsilon, double delta, double fill) {
  if (!std::isfinite(epsilon) || std::abs(epsilon) > kPi) {
    throw std::invalid_argument("pulse area error epsilon must satisfy |epsilon| <= pi");
  }
  if (!std::isfinite(delta) || std::abs(delta) > kPi) {
    throw std::invalid_argument("detuning error delta must satisfy |delta| <= pi");
  }
  if (!(fill > 0.0 && fill <= 1.0)) throw std::invalid_argument("filling ratio must lie in (0, 1]");
  return HamiltonianErrors{epsilon, delta, fill};
}

double HamiltonianErrors::area() const {
  return 2.0 * (kPi - epsilon);
}

}  // namespace raman
