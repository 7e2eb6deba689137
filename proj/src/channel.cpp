#include "mlsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mlsim/version.hpp"

namespace mlsim {

namespace {

void check_series(const Series& series) {
  if (series.values.empty()) throw EmptySeries();
  if (!(series.dt > 0.0) || !std::isfinite(series.dt)) {
    throw InvalidParams("series dt must be a positive finite number");
  }
  for (double x : series.values) {
    if (!std::isfinite(x)) throw NonFiniteInput("non-finite series sample");
  }
}

void check(const Thresholds& th) {
  if (!std::isfinite(th.h_th) || !std::isfinite(th.s_th) || !std::isfinite(th.v_th)) {
    throw NonFiniteInput("non-finite threshold");
  }
}

}  // namespace

void check(const ChannelConfig& config) {
  const auto& n = config.noise;
  if (!std::isfinite(n.mean) || !std::isfinite(n.spread) || n.spread < 0.0) {
    throw InvalidParams("noise mean must be finite and spread finite and >= 0");
  }
  if (!(std::abs(config.feedback_gain) < 1.0)) {
    throw InvalidParams("feedback gain must satisfy |g| < 1");
  }
}

Series transmit(const Series& input, const ChannelConfig& config) {
  check_series(input);
  check(config);
  NoiseRng rng(config.noise.seed);
  Series out{input.dt, {}};
  out.values.reserve(input.values.size());
  double previous = 0.0;
  for (std::size_t i = 0; i < input.values.size(); ++i) {
    double y = input.values[i] + sample_noise(config.noise, rng);
    if (i > 0) y += config.feedback_gain * previous;
    out.values.push_back(y);
    previous = y;
  }
  return out;
}

StageSamples derive_samples(double x, const StageDerivation& c) noexcept {
  StageSamples p;
  p.h_s = c.h_s * x;
  p.h_j = c.h_j * x;
  p.h_m = c.h_m * x;
  p.s_gf = c.s_gf * c.s_attenuation * x;
  p.s_cf = c.s_cf * c.s_attenuation * x;
  p.a_bs = c.a_bs * x;
  p.t_t = c.t_t * x;
  p.t_c = c.t_c * x;
  p.t_p = c.t_p * x;
  p.v_v = c.v_v * x;
  p.v_t = c.v_t * x;
  return p;
}

FactorReading bridge_factors(double h, double s, double m, double v, double r,
                             const Thresholds& th) {
  FactorReading reading{h, s, m, v, r, th.h_th, th.s_th, 0.0, th.v_th, 0.0};
  if (!reading.all_finite()) throw NonFiniteInput("non-finite stage aggregate or threshold");
  return reading;
}

FactorReading row_reading(const TraceRow& row, const Thresholds& thresholds) {
  return bridge_factors(row.h, row.s, row.m, row.v, row.r, thresholds);
}

void summarize(SessionTrace& trace) {
  trace.reached_final = false;
  trace.accepted = false;
  for (const auto& row : trace.rows) {
    if (row.state_after != kMlpFinal) continue;
    trace.reached_final = true;
    if (row.r != 0.0) trace.accepted = true;
  }
}

SessionTrace simulate_end_to_end(const Series& stimulus, const Thresholds& thresholds,
                                 const ChannelConfig& config, std::size_t max_ticks,
                                 const StageDerivation& coefficients) {
  if (max_ticks == 0) throw InvalidParams("max_ticks must be at least 1");
  check(thresholds);
  const Series received = transmit(stimulus, config);
  const MooreMachine& machine = mlp_machine();

  SessionTrace trace;
  trace.header = {
      {"artifact_version", std::string(kVersion)},
      {"generator", std::string(NoiseRng::kName)},
      {"seed", config.noise.seed},
      {"dt", stimulus.dt},
      {"max_ticks", static_cast<std::uint64_t>(max_ticks)},
      {"h_th", thresholds.h_th},
      {"s_th", thresholds.s_th},
      {"v_th", thresholds.v_th},
      {"noise", std::string(to_string(config.noise.kind))},
      {"noise_mean", config.noise.mean},
      {"noise_spread", config.noise.spread},
      {"feedback_gain", config.feedback_gain},
      {"coef_h_s", coefficients.h_s},
      {"coef_h_j", coefficients.h_j},
      {"coef_h_m", coefficients.h_m},
      {"coef_s_gf", coefficients.s_gf},
      {"coef_s_cf", coefficients.s_cf},
      {"coef_s_attenuation", coefficients.s_attenuation},
      {"coef_a_bs", coefficients.a_bs},
      {"coef_t_t", coefficients.t_t},
      {"coef_t_c", coefficients.t_c},
      {"coef_t_p", coefficients.t_p},
      {"coef_v_v", coefficients.v_v},
      {"coef_v_t", coefficients.v_t},
  };

  const std::size_t ticks = std::min(max_ticks, received.values.size());
  trace.rows.reserve(ticks);
  MlpState state = MlpState::S;
  for (std::size_t i = 0; i < ticks; ++i) {
    const StageSamples samples = derive_samples(received.values[i], coefficients);
    TraceRow row;
    row.tick = i;
    row.h = cumulative_reception(samples);
    row.s = medulla_synapse(samples);
    row.m = secondary_afferent(samples);
    row.v = vpl_potential(samples);
    row.r = reception(row.h, row.s, row.m, row.v).r;
    row.gates = evaluate_gates(row.h, row.s, row.m, row.v, thresholds);

    const FactorReading reading = row_reading(row, thresholds);
    row.symbol = classify(state, reading);
    row.state_before = state;
    // classify only yields symbols defined at `state`, so this never throws.
    const StepResult next = step(machine, to_string(state), to_string(row.symbol));
    row.state_after = *parse_mlp_state(next.next_state);
    row.emitted = *parse_mlp_output(next.emitted);
    row.wait = row.state_after == row.state_before;
    state = row.state_after;
    trace.rows.push_back(row);
  }
  summarize(trace);
  return trace;
}

}  // namespace mlsim
