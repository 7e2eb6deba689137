#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace mlsim {

enum class NoiseKind : std::uint8_t { None, Gaussian, Uniform };

std::string_view to_string(NoiseKind kind) noexcept;
std::optional<NoiseKind> parse_noise_kind(std::string_view text) noexcept;

/// Additive afferent noise m(t).
struct NoiseModel {
  NoiseKind kind = NoiseKind::None;
  double mean = 0.0;
  /// Standard deviation (gaussian) or half-width (uniform). Never negative.
  double spread = 0.0;
  std::uint64_t seed = 0;

  bool operator==(const NoiseModel&) const = default;
};

/// Seeded 64-bit Mersenne Twister with fixed, library-independent conversions
/// to real variates, so a seed reproduces the same stream on any platform.
///
///   uniform01: top 53 bits of one draw, scaled by 2^-53, in [0, 1)
///   normal:    Box-Muller, cos branch, two uniform01 draws per variate
class NoiseRng {
 public:
  static constexpr std::string_view kName = "mt19937_64/u53/box-muller";

  explicit NoiseRng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() noexcept;
  double standard_normal() noexcept;

  bool operator==(const NoiseRng&) const = default;

 private:
  std::mt19937_64 engine_;
};

/// One noise sample. kind = None never touches the generator.
double sample_noise(const NoiseModel& model, NoiseRng& rng);

}  // namespace mlsim
