#pragma once

// Sensing -> sender -> noisy feedback channel -> receiver, as a discrete-time
// transform, coupled to the pathway Moore machine one step per tick.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mlsim/mlp_machine.hpp"
#include "mlsim/noise.hpp"
#include "mlsim/pipeline.hpp"

namespace mlsim {

/// Uniformly sampled signal; values[i] is the sample at time i * dt.
struct Series {
  double dt = 1e-3;
  std::vector<double> values;

  bool operator==(const Series&) const = default;
};

struct ChannelConfig {
  NoiseModel noise;
  /// Single-tap feedback gain g, |g| < 1.
  double feedback_gain = 0.0;

  bool operator==(const ChannelConfig&) const = default;
};

/// Throws InvalidParams on a negative spread, non-finite parameters or |g| >= 1.
void check(const ChannelConfig& config);

/// y(0) = h(0) + m(0); y(i) = h(i) + m(i) + g * y(i-1).
/// The noise stream is seeded from config.noise.seed.
/// Throws EmptySeries, InvalidParams, NonFiniteInput.
Series transmit(const Series& input, const ChannelConfig& config);

/// Linear split of one channel sample into the eleven stage signals.
/// s_gf and s_cf are additionally scaled by s_attenuation.
struct StageDerivation {
  double h_s = 1.0 / 3.0;
  double h_j = 1.0 / 3.0;
  double h_m = 1.0 / 3.0;
  double s_gf = 0.5;
  double s_cf = 0.5;
  double s_attenuation = 1.0;
  double a_bs = 1.0;
  double t_t = 0.0;
  double t_c = 0.0;
  double t_p = 0.0;
  double v_v = 1.0;
  double v_t = 0.0;

  bool operator==(const StageDerivation&) const = default;
};

StageSamples derive_samples(double x, const StageDerivation& coefficients) noexcept;

/// t1..t5 = h, s, m, v, r; thresholds h_th, s_th, 0, v_th, 0.
/// Throws NonFiniteInput.
FactorReading bridge_factors(double h, double s, double m, double v, double r,
                             const Thresholds& thresholds);

struct TraceRow {
  std::size_t tick = 0;
  double h = 0.0;
  double s = 0.0;
  double m = 0.0;
  double v = 0.0;
  double r = 0.0;
  GateRecord gates;
  MlpSymbol symbol = MlpSymbol::d1;
  MlpState state_before = MlpState::S;
  MlpState state_after = MlpState::S;
  MlpOutput emitted = MlpOutput::Epsilon;
  bool wait = false;

  bool operator==(const TraceRow&) const = default;
};

/// The reading the row's symbol was classified from.
FactorReading row_reading(const TraceRow& row, const Thresholds& thresholds);

using HeaderValue = std::variant<std::string, double, std::uint64_t>;

/// Ordered run metadata: version, generator, seed and every config value.
using TraceHeader = std::vector<std::pair<std::string, HeaderValue>>;

struct SessionTrace {
  TraceHeader header;
  std::vector<TraceRow> rows;
  /// Some row ends in the final state.
  bool reached_final = false;
  /// Some row ends in the final state with r != 0.
  bool accepted = false;

  bool operator==(const SessionTrace&) const = default;
};

/// Recomputes reached_final and accepted from the rows.
void summarize(SessionTrace& trace);

/// Transmits the stimulus, then per tick: derive stage samples, aggregate,
/// bridge to a reading, classify against the current state, step the machine
/// and record a row. Runs min(max_ticks, stimulus length) ticks.
/// Throws EmptySeries, InvalidParams, NonFiniteInput.
SessionTrace simulate_end_to_end(const Series& stimulus, const Thresholds& thresholds,
                                 const ChannelConfig& config, std::size_t max_ticks,
                                 const StageDerivation& coefficients = {});

}  // namespace mlsim
