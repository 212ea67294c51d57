#include "raman/multi_pass.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "raman/linalg.hpp"

namespace raman {

namespace {

void check_passes(std::uint64_t n) {
  if (n > kMaxPasses) throw std::invalid_argument("pass count exceeds " + std::to_string(kMaxPasses));
}

double parity_sign(std::uint64_t n) {
  return (n % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

double dirichlet_ratio(std::uint64_t n, double distance, bool near_pi) {
  const double nd = static_cast<double>(n);
  const double s = std::sin(distance);
  double ratio = 0.0;
  if (std::abs(s) < 1e-8) {
    // sin(n y)/sin(y) = n (1 - (n^2 - 1) y^2 / 6) + O(y^4)
    ratio = nd * (1.0 - (nd * nd - 1.0) * distance * distance / 6.0);
  } else {
    ratio = std::sin(nd * distance) / s;
  }
  // theta = pi - y: sin(n theta)/sin(theta) = (-1)^{n+1} sin(n y)/sin(y)
  return near_pi ? -parity_sign(n) * ratio : ratio;
}

MultiPassCK multipass_ck(const CKPair& ck, std::uint64_t n) {
  check_passes(n);
  const Complex half_phase = std::polar(1.0, 0.5 * ck.delta);
  const Complex a_delta = ck.a * half_phase;
  const Complex b_delta = ck.b * half_phase;

  // sin(theta) from the CK constraint keeps precision when Re a_delta ~ -1.
  const double sin_theta = std::sqrt(a_delta.imag() * a_delta.imag() + std::norm(b_delta));
  const double cos_theta = std::clamp(a_delta.real(), -1.0 - 1e-12, 1.0 + 1e-12);
  const bool near_pi = cos_theta < 0.0;
  const double distance = std::atan2(sin_theta, std::abs(cos_theta));  // angle to 0 or pi
  const double theta = near_pi ? std::numbers::pi - distance : distance;

  const double nd = static_cast<double>(n);
  // cos(n theta), with theta = pi - y handled as (-1)^n cos(n y).
  const double cos_n = near_pi ? parity_sign(n) * std::cos(nd * distance) : std::cos(nd * distance);
  const double ratio = dirichlet_ratio(n, distance, near_pi);

  const Complex back = std::polar(1.0, -0.5 * nd * ck.delta);
  MultiPassCK out;
  out.a_n = Complex(cos_n, a_delta.imag() * ratio) * back;
  out.b_n = b_delta * ratio * back;
  out.n = n;
  out.theta = theta;
  return out;
}

Populations multipass_populations(const RamanDrive& drive, const CKPair& ck, std::uint64_t n) {
  const MultiPassCK m = multipass_ck(ck, n);
  return single_pass_populations(drive, CKPair{m.a_n, m.b_n, static_cast<double>(n) * ck.delta});
}

Populations populations_from_column(const Mat3& u) {
  return Populations{std::norm(u(0, 0)), std::norm(u(1, 0)), std::norm(u(2, 0))};
}

Populations multipass_oracle(const RamanDrive& drive, const CKPair& ck, std::uint64_t n) {
  check_passes(n);
  return populations_from_column(mat_power(assemble_propagator(drive, ck), n));
}

}  // namespace raman
