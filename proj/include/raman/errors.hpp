#pragma once

#include <stdexcept>
#include <string>

namespace raman {

// The 3x3 Hamiltonian does not decouple into dark state + driven pair.
class SymmetryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Time stepping failed to converge.
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An analytic identity (e.g. |a|^2 + |b|^2 = 1) failed beyond tolerance.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tomographic inversion could not produce an estimate.
class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace raman
