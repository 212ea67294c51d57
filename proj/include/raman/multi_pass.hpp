#pragma once

#include <cstdint>

#include "raman/single_pass.hpp"

namespace raman {

/// Largest repetition count accepted by the public multi-pass API.
inline constexpr std::uint64_t kMaxPasses = 1'000'000;

/// CK parameters after n identical passes.
struct MultiPassCK {
  Complex a_n;
  Complex b_n;
  std::uint64_t n = 0;
  double theta = 0.0;  // arccos(Re(a e^{i delta/2}))
};

/// sin(n theta) / sin(theta), continued analytically through theta = 0 and
/// theta = pi. `distance` is the angle to the nearer of 0 and pi, passed
/// separately so it keeps full precision near pi.
double dirichlet_ratio(std::uint64_t n, double distance, bool near_pi);

/// Closed-form amplification of a single-pass CK pair (n = 0 gives identity).
MultiPassCK multipass_ck(const CKPair& ck, std::uint64_t n);

/// Populations after n passes from |psi_0>, with the drive weights of one pass.
Populations multipass_populations(const RamanDrive& drive, const CKPair& ck, std::uint64_t n);

/// Same populations from the n-th matrix power of the assembled propagator.
Populations multipass_oracle(const RamanDrive& drive, const CKPair& ck, std::uint64_t n);

/// Populations of |psi_k> for a state vector evolved from |psi_0>.
Populations populations_from_column(const Mat3& u);

}  // namespace raman
