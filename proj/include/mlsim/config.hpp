#pragma once

// Simulation configuration: a strict `key = value` document.
//
//   # comment
//   h_th = 0.5
//   noise = gaussian
//   noise_spread = 0.01
//
// Every key is optional; unknown or repeated keys are rejected.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mlsim/channel.hpp"
#include "mlsim/receptor.hpp"

namespace mlsim {

struct StimulusConfig {
  std::string receptor = "merkel_complex";
  StimulusParams params;
};

struct SimConfig {
  Thresholds thresholds{0.1, 0.1, 0.1};
  /// channel.noise.seed is ignored; the top-level seed drives the noise.
  ChannelConfig channel;
  StimulusConfig stimulus;
  StageDerivation coefficients;
  double dt = 1e-3;
  std::size_t max_ticks = 10'000;
  std::uint64_t seed = 0;
};

/// Every accepted key, in documentation order.
const std::vector<std::string_view>& config_keys();

/// Throws ParseError (syntax, unknown or duplicate key, unparsable value) and
/// ValidationError (a value breaking a documented constraint).
SimConfig parse_config(std::string_view text);

/// Re-checks every constraint. Throws ValidationError naming the key.
void validate_config(const SimConfig& config);

/// A `key = value` document that parses back to `config`.
std::string format_config(const SimConfig& config);

/// Synthesizes the configured stimulus.
Series make_stimulus(const SimConfig& config);

/// Stimulus synthesis plus simulate_end_to_end(), with the stimulus settings
/// appended to the trace header.
SessionTrace run_session(const SimConfig& config);

}  // namespace mlsim
