#pragma once

// Somatosensory receptor catalog and stimulus synthesis.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "mlsim/channel.hpp"

namespace mlsim {

enum class Adaptation : std::uint8_t { Rapid, Slow, Mixed, Depends };

std::string_view to_string(Adaptation adaptation) noexcept;

struct Band {
  double low_hz = 0.0;
  double high_hz = 0.0;

  bool contains(double f) const noexcept { return f >= low_hz && f <= high_hz; }
  bool operator==(const Band&) const = default;
};

struct ReceptorSpec {
  std::string id;  // stable lookup key, e.g. "pacinian_corpuscle"
  std::string name;
  std::string structure;
  std::string sensation;
  std::string signals;
  Adaptation adaptation = Adaptation::Slow;
  std::optional<Band> band_hz;
};

/// The twelve catalog rows in table order. The muscle spindle row appears
/// twice, as muscle_spindle_1 and muscle_spindle_2.
std::span<const ReceptorSpec> catalog();

/// Catalog row by id, or nullptr.
const ReceptorSpec* find_receptor(std::string_view id);

inline constexpr double kMixedFloor = 0.2;

struct StimulusParams {
  double amplitude = 1.0;
  /// Only used by receptors with a band; must lie inside it.
  double frequency_hz = 0.0;
  double duration_s = 1.0;
  double adaptation_tau_s = 0.05;
  /// Sustained level of the mixed envelope, in (0, 1].
  double mixed_floor = kMixedFloor;
};

/// slow, depends: 1. rapid: exp(-t/tau). mixed: max(exp(-t/tau), floor).
/// Throws InvalidParams for t < 0, tau <= 0 or floor outside (0, 1].
double adaptation_envelope(Adaptation kind, double t, double tau_s,
                           double mixed_floor = kMixedFloor);

/// Number of samples covering duration_s at step dt: ceil(duration_s / dt),
/// with quotients within 1e-9 of an integer snapped to it.
std::size_t sample_count(double duration_s, double dt);

/// Band receptors: amplitude * sin(2 pi f t) * envelope(t).
/// Others: amplitude * envelope(t). Sample i sits at t = i * dt.
/// Throws FrequencyOutOfBand, InvalidParams.
Series synthesize(const ReceptorSpec& receptor, const StimulusParams& params, double dt);

}  // namespace mlsim
