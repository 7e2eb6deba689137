#pragma once

// Threshold-gated pathway pipeline: four stage sums, four gates, a bounded
// retry loop, and a final reception check.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mlsim/errors.hpp"

namespace mlsim {

/// Raw per-tick stage signals.
struct StageSamples {
  double h_s = 0.0;  // skin
  double h_j = 0.0;  // joints
  double h_m = 0.0;  // muscle
  double s_gf = 0.0;  // gracile fasciculus synapse
  double s_cf = 0.0;  // cuneate fasciculus synapse
  double a_bs = 0.0;  // ascending the brain stem
  double t_t = 0.0;
  double t_c = 0.0;
  double t_p = 0.0;
  double v_v = 0.0;  // VPL movement potential
  double v_t = 0.0;  // VPL termination potential

  bool operator==(const StageSamples&) const = default;
};

/// M is gated against 0 and R against 0, so neither has a threshold here.
struct Thresholds {
  double h_th = 0.0;
  double s_th = 0.0;
  double v_th = 0.0;

  bool operator==(const Thresholds&) const = default;
};

inline constexpr std::size_t kDefaultMaxIterations = 10'000;

// Each stage sum adds left to right as written and throws NonFiniteInput on a
// non-finite operand.
double cumulative_reception(const StageSamples& samples);
double medulla_synapse(const StageSamples& samples);
double secondary_afferent(const StageSamples& samples);
double vpl_potential(const StageSamples& samples);

struct Reception {
  double r = 0.0;
  bool accepted = false;
};

/// r = h + s + m + v; accepted iff r != 0 exactly.
Reception reception(double h, double s, double m, double v);

enum class Gate : std::uint8_t { H, S, M, V };
enum class GateVerdict : std::uint8_t { NotEvaluated, Pass, Fail };

/// Verdicts of one loop pass, indexed by Gate.
struct GateRecord {
  std::array<GateVerdict, 4> verdicts{};

  GateVerdict operator[](Gate g) const noexcept { return verdicts[static_cast<std::size_t>(g)]; }
  bool all_passed() const noexcept;
  bool operator==(const GateRecord&) const = default;
};

/// Gate verdicts for precomputed aggregates, with the same short-circuit
/// order as run_pipeline().
GateRecord evaluate_gates(double h, double s, double m, double v, const Thresholds& thresholds);

struct PipelineResult {
  /// Aggregates of the last pass. Stages not reached in that pass read 0.
  double h = 0.0;
  double s = 0.0;
  double m = 0.0;
  double v = 0.0;
  /// h + s + m + v of the last pass.
  double r = 0.0;
  bool accepted = false;
  std::size_t iterations = 0;
  std::vector<GateRecord> gate_trace;
  /// Number of stage sums computed over the whole run.
  std::size_t stage_evaluations = 0;
};

/// Returns the next samples, or nullopt when the source is exhausted.
using SampleProvider = std::function<std::optional<StageSamples>()>;

/// Draws fresh samples each pass and gates H > h_th, S > s_th, M > 0, V > v_th
/// in order. A failing gate ends the pass; the loop then retries. Passing all
/// four exits the loop and reception() decides acceptance. Gives up with
/// accepted = false after max_iterations passes.
///
/// Throws InvalidParams when max_iterations is 0, ExhaustedSource when the
/// provider runs dry, NonFiniteInput from the stage sums.
PipelineResult run_pipeline(const SampleProvider& source, const Thresholds& thresholds,
                            std::size_t max_iterations = kDefaultMaxIterations);

}  // namespace mlsim
