#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "raman/drive.hpp"
#include "raman/single_pass.hpp"

namespace raman {

enum class ModelKind { Rabi, RosenZener, Numeric };

/// A single-pass CK generator: exact rectangular, exact sech, or numeric
/// integration of an arbitrary envelope.
class PulseModel {
 public:
  static PulseModel rabi(double fill);
  static PulseModel rosen_zener(double fill);
  static PulseModel numeric(PulseShape shape, NumericOptions options = {});

  /// Parses "rabi", "rosen-zener" or "numeric:<shape token>". The fill is
  /// used by the analytic models; numeric models take it from the shape.
  static PulseModel parse(std::string_view token, double fill);

  ModelKind kind() const { return kind_; }
  double fill() const { return fill_; }
  const std::optional<PulseShape>& shape() const { return shape_; }

  /// "rabi", "rosen-zener", "numeric:sin2", ...
  std::string name() const;
  /// "exact" for analytic models, "numeric" otherwise.
  std::string method_tag() const;

  HamiltonianErrors errors(double epsilon, double delta) const;
  CKPair ck(double epsilon, double delta) const;

 private:
  PulseModel(ModelKind kind, double fill, std::optional<PulseShape> shape, NumericOptions options);

  ModelKind kind_;
  double fill_;
  std::optional<PulseShape> shape_;
  NumericOptions options_;
};

}  // namespace raman
