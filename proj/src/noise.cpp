#include "mlsim/noise.hpp"

#include <cmath>
#include <numbers>

namespace mlsim {

std::string_view to_string(NoiseKind kind) noexcept {
  switch (kind) {
    case NoiseKind::None: return "none";
    case NoiseKind::Gaussian: return "gaussian";
    case NoiseKind::Uniform: return "uniform";
  }
  return "?";
}

std::optional<NoiseKind> parse_noise_kind(std::string_view text) noexcept {
  if (text == "none") return NoiseKind::None;
  if (text == "gaussian") return NoiseKind::Gaussian;
  if (text == "uniform") return NoiseKind::Uniform;
  return std::nullopt;
}

double NoiseRng::uniform01() noexcept {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double NoiseRng::standard_normal() noexcept {
  double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
  double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double sample_noise(const NoiseModel& model, NoiseRng& rng) {
  switch (model.kind) {
    case NoiseKind::None: return 0.0;
    case NoiseKind::Gaussian: return model.mean + model.spread * rng.standard_normal();
    case NoiseKind::Uniform: return model.mean + model.spread * (2.0 * rng.uniform01() - 1.0);
  }
  return 0.0;
}

}  // namespace mlsim
