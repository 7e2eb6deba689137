#pragma once

// Cycle-stepped emulation of the pathway nanomachine: input latch, register
// storage with a five-op ALU, processing unit (classifier + Moore machine),
// control sequencing and output unit.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mlsim/mlp_machine.hpp"

namespace mlsim {

inline constexpr std::size_t kMinRegisters = 12;
inline constexpr std::size_t kDefaultRegisters = 16;

/// r0..r4 mirror T1..T5, r5..r9 mirror the five thresholds.
inline constexpr std::size_t kFactorRegister = 0;
inline constexpr std::size_t kThresholdRegister = 5;

struct NanomachineState {
  std::uint64_t cycle = 0;
  MlpState fsm_state = MlpState::S;
  std::vector<double> storage;
  FactorReading input_latch;
  /// The single d-line asserted in the last cycle.
  std::optional<MlpSymbol> d_line;
  /// No FSM progress in the last cycle.
  bool wait = false;
  /// Received factor exposed by the output unit while in the final state.
  std::optional<double> output_value;

  bool operator==(const NanomachineState&) const = default;
};

enum class AluOpcode : std::uint8_t { Add, Sub, And, Or, Not };

struct AluOp {
  AluOpcode op = AluOpcode::Add;
  std::size_t src_a = 0;
  std::size_t src_b = 0;  // ignored by Not
  std::size_t dst = 0;
};

/// Throws InvalidParams when register_count < kMinRegisters.
NanomachineState reset(std::size_t register_count = kDefaultRegisters);

/// Add/Sub are real arithmetic. And/Or/Not treat nonzero as true and write
/// 1.0 or 0.0. Only dst changes; the cycle counter does not advance.
/// Throws IndexOutOfRange.
NanomachineState alu_exec(NanomachineState state, const AluOp& op);

/// Stores the reading in the input latch and mirrors it into r0..r9.
/// Throws NonFiniteInput.
NanomachineState latch_inputs(NanomachineState state, const FactorReading& reading);

/// Called with the output value and the register file whenever the output
/// unit exposes a value. Empty by default.
using OutputFeedback = std::function<void(double output_value, std::vector<double>& storage)>;

/// One clock cycle: classify the latch against the current state, assert
/// that d-line, step the machine, set wait on a self-loop, expose t5 on the
/// output unit when the cycle ends in RS, advance the cycle counter.
NanomachineState tick(NanomachineState state, const OutputFeedback& feedback = {});

using ReadingProvider = std::function<std::optional<FactorReading>()>;

struct AcceptRun {
  NanomachineState state;
  bool accepted = false;
};

/// Latches and ticks until the machine sits in RS with a nonzero output value,
/// or max_cycles cycles have run. Throws InvalidParams for max_cycles == 0 and
/// ExhaustedSource when the provider runs dry first.
AcceptRun run_until_accept(NanomachineState state, const ReadingProvider& readings,
                           std::size_t max_cycles);

}  // namespace mlsim
