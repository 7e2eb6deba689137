#include "mlsim/receptor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace mlsim {

std::string_view to_string(Adaptation adaptation) noexcept {
  switch (adaptation) {
    case Adaptation::Rapid: return "rapid";
    case Adaptation::Slow: return "slow";
    case Adaptation::Mixed: return "mixed";
    case Adaptation::Depends: return "depends";
  }
  return "?";
}

namespace {

std::vector<ReceptorSpec> make_catalog() {
  using enum Adaptation;
  constexpr const char* kSpindleStructure = "Encapsulated annulospiral and flower spray endings";
  return {
      {"meissner_corpuscle", "Meissner corpuscle", "Encapsulated, layered",
       "Touch: Flutter, Movement", "Frequency/Velocity, Direction", Rapid, Band{20.0, 50.0}},
      {"pacinian_corpuscle", "Pacinian corpuscle", "Encapsulated, layered", "Touch: Vibration",
       "Frequency: 100-300 Hz", Rapid, Band{100.0, 300.0}},
      {"ruffini_corpuscle", "Ruffini corpuscle", "Encapsulated collagen", "Touch: Skin Stretch",
       "Direction, Force", Slow, std::nullopt},
      {"hair_follicle", "Hair follicle", "Unencapsulated", "Touch: Movement",
       "Direction, Velocity", Rapid, std::nullopt},
      {"merkel_complex", "Merkel complex", "Specialized epithelial cell",
       "Touch, Pressure, Form", "Location, magnitude", Slow, std::nullopt},
      {"free_nerve_ending", "Free Nerve Ending", "Unencapsulated", "Pain, Touch, or Temperature",
       "Tissue damage, Contact, Temperature change", Depends, std::nullopt},
      {"muscle_spindle_1", "Muscle Spindle", kSpindleStructure, "Muscle stretch",
       "Muscle length, velocity", Mixed, std::nullopt},
      {"golgi_tendon_organ", "Muscle: Golgi Tendon Organ", "Encapsulated collagen",
       "Muscle tension", "Muscle contraction", Slow, std::nullopt},
      {"joint_pacinian", "Joint: Pacinian", "Encapsulated, layered", "Joint Movement",
       "Direction, velocity", Rapid, std::nullopt},
      {"joint_ruffini", "Joint: Ruffini", "Encapsulated collagen", "Joint pressure",
       "Pressure, Angle", Slow, std::nullopt},
      {"joint_golgi_organ", "Joint: Golgi Organ", "Encapsulated collagen", "Joint torque",
       "Twisting force", Slow, std::nullopt},
      {"muscle_spindle_2", "Muscle Spindle", kSpindleStructure, "Muscle stretch",
       "Muscle length, velocity", Mixed, std::nullopt},
  };
}

}  // namespace

std::span<const ReceptorSpec> catalog() {
  static const std::vector<ReceptorSpec> rows = make_catalog();
  return rows;
}

const ReceptorSpec* find_receptor(std::string_view id) {
  auto rows = catalog();
  auto it = std::find_if(rows.begin(), rows.end(), [id](const auto& r) { return r.id == id; });
  return it == rows.end() ? nullptr : &*it;
}

double adaptation_envelope(Adaptation kind, double t, double tau_s, double mixed_floor) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidParams("envelope time must be >= 0");
  if (!(tau_s > 0.0) || !std::isfinite(tau_s)) throw InvalidParams("adaptation tau must be > 0");
  if (!(mixed_floor > 0.0 && mixed_floor <= 1.0)) {
    throw InvalidParams("mixed envelope floor must lie in (0, 1]");
  }
  switch (kind) {
    case Adaptation::Slow:
    case Adaptation::Depends: return 1.0;
    case Adaptation::Rapid: return std::exp(-t / tau_s);
    case Adaptation::Mixed: return std::max(std::exp(-t / tau_s), mixed_floor);
  }
  return 1.0;
}

std::size_t sample_count(double duration_s, double dt) {
  if (!(duration_s > 0.0) || !std::isfinite(duration_s)) {
    throw InvalidParams("duration must be a positive finite number");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidParams("dt must be a positive finite number");
  const double q = duration_s / dt;
  const double nearest = std::round(q);
  if (std::abs(q - nearest) <= 1e-9 * std::max(1.0, nearest)) {
    return static_cast<std::size_t>(std::max(1.0, nearest));
  }
  return static_cast<std::size_t>(std::ceil(q));
}

Series synthesize(const ReceptorSpec& receptor, const StimulusParams& params, double dt) {
  if (!(params.amplitude >= 0.0) || !std::isfinite(params.amplitude)) {
    throw InvalidParams("amplitude must be a finite number >= 0");
  }
  const std::size_t n = sample_count(params.duration_s, dt);
  // Validates tau and the floor up front, before any band check passes.
  adaptation_envelope(receptor.adaptation, 0.0, params.adaptation_tau_s, params.mixed_floor);
  if (receptor.band_hz) {
    if (!std::isfinite(params.frequency_hz) || !receptor.band_hz->contains(params.frequency_hz)) {
      throw FrequencyOutOfBand(params.frequency_hz, receptor.band_hz->low_hz,
                               receptor.band_hz->high_hz);
    }
  }

  Series out{dt, {}};
  out.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * dt;
    const double env =
        adaptation_envelope(receptor.adaptation, t, params.adaptation_tau_s, params.mixed_floor);
    double carrier = 1.0;
    if (receptor.band_hz) carrier = std::sin(2.0 * std::numbers::pi * params.frequency_hz * t);
    out.values.push_back(params.amplitude * carrier * env);
  }
  return out;
}

}  // namespace mlsim
