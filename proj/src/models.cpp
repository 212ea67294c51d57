#include "raman/models.hpp"

#include <stdexcept>

namespace raman {

PulseModel::PulseModel(ModelKind kind, double fill, std::optional<PulseShape> shape, NumericOptions options)
    : kind_(kind), fill_(fill), shape_(std::move(shape)), options_(options) {}

PulseModel PulseModel::rabi(double fill) {
  if (!(fill > 0.0 && fill <= 1.0)) throw std::invalid_argument("rabi model: fill must lie in (0, 1]");
  return PulseModel(ModelKind::Rabi, fill, std::nullopt, {});
}

PulseModel PulseModel::rosen_zener(double fill) {
  if (!(fill > 0.0 && fill <= 0.1)) throw std::invalid_argument("rosen-zener model: fill must lie in (0, 0.1]");
  return PulseModel(ModelKind::RosenZener, fill, std::nullopt, {});
}

PulseModel PulseModel::numeric(PulseShape shape, NumericOptions options) {
  const double fill = filling_ratio(shape);
  return PulseModel(ModelKind::Numeric, fill, std::move(shape), options);
}

PulseModel PulseModel::parse(std::string_view token, double fill) {
  if (token == "rabi") return rabi(fill);
  if (token == "rosen-zener") return rosen_zener(fill);
  constexpr std::string_view kNumeric = "numeric:";
  if (token.substr(0, kNumeric.size()) == kNumeric) {
    return numeric(PulseShape::parse(token.substr(kNumeric.size())));
  }
  throw std::invalid_argument("unknown model '" + std::string(token) +
                              "' (expected rabi, rosen-zener, numeric:<shape>)");
}

std::string PulseModel::name() const {
  switch (kind_) {
    case ModelKind::Rabi:
      return "rabi";
    case ModelKind::RosenZener:
      return "rosen-zener";
    case ModelKind::Numeric:
      return "numeric:" + shape_->token();
  }
  return {};
}

std::string PulseModel::method_tag() const {
  return kind_ == ModelKind::Numeric ? "numeric" : "exact";
}

HamiltonianErrors PulseModel::errors(double epsilon, double delta) const {
  return HamiltonianErrors::make(epsilon, delta, fill_);
}

CKPair PulseModel::ck(double epsilon, double delta) const {
  const HamiltonianErrors err = errors(epsilon, delta);
  switch (kind_) {
    case ModelKind::Rabi:
      return ck_rabi(err);
    case ModelKind::RosenZener:
      return ck_rosen_zener(err);
    case ModelKind::Numeric:
      return ck_numeric(*shape_, err, rms_for_area_error(*shape_, epsilon), options_);
  }
  throw std::logic_error("unreachable model kind");
}

}  // namespace raman
