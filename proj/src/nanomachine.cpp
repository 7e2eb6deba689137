#include "mlsim/nanomachine.hpp"

#include <string>

namespace mlsim {

namespace {

// Processing-unit wiring. Stage k watches the symbol pair (d_{2k+1}, d_{2k+2});
// the high line advances to stage k+1 except at RS, which absorbs.
MlpState next_state(MlpState state, MlpSymbol line) noexcept {
  const auto k = static_cast<unsigned>(state);
  const auto j = static_cast<unsigned>(line);
  const bool high = (j % 2) == 1;
  if (j / 2 != k || !high || state == MlpState::RS) return state;
  return static_cast<MlpState>(k + 1);
}

void check_index(const NanomachineState& s, std::size_t index, const char* role) {
  if (index >= s.storage.size()) {
    throw IndexOutOfRange(std::string(role) + " register r" + std::to_string(index) +
                          " outside register file of " + std::to_string(s.storage.size()));
  }
}

}  // namespace

NanomachineState reset(std::size_t register_count) {
  if (register_count < kMinRegisters) {
    throw InvalidParams("register file needs at least " + std::to_string(kMinRegisters) +
                        " registers, got " + std::to_string(register_count));
  }
  NanomachineState s;
  s.storage.assign(register_count, 0.0);
  return s;
}

NanomachineState alu_exec(NanomachineState s, const AluOp& op) {
  check_index(s, op.src_a, "source");
  if (op.op != AluOpcode::Not) check_index(s, op.src_b, "source");
  check_index(s, op.dst, "destination");
  const double a = s.storage[op.src_a];
  const double b = op.op == AluOpcode::Not ? 0.0 : s.storage[op.src_b];
  auto truth = [](double x) { return x != 0.0; };
  double result = 0.0;
  switch (op.op) {
    case AluOpcode::Add: result = a + b; break;
    case AluOpcode::Sub: result = a - b; break;
    case AluOpcode::And: result = truth(a) && truth(b) ? 1.0 : 0.0; break;
    case AluOpcode::Or: result = truth(a) || truth(b) ? 1.0 : 0.0; break;
    case AluOpcode::Not: result = truth(a) ? 0.0 : 1.0; break;
  }
  s.storage[op.dst] = result;
  return s;
}

NanomachineState latch_inputs(NanomachineState s, const FactorReading& r) {
  if (!r.all_finite()) throw NonFiniteInput("non-finite factor reading");
  if (s.storage.size() < kMinRegisters) {
    throw InvalidParams("register file smaller than the minimum; use reset()");
  }
  s.input_latch = r;
  const double factors[] = {r.t1, r.t2, r.t3, r.t4, r.t5};
  const double thresholds[] = {r.th_cs, r.th_s, r.th_t, r.th_v, r.th_r};
  for (std::size_t i = 0; i < 5; ++i) {
    s.storage[kFactorRegister + i] = factors[i];
    s.storage[kThresholdRegister + i] = thresholds[i];
  }
  return s;
}

NanomachineState tick(NanomachineState s, const OutputFeedback& feedback) {
  const MlpState before = s.fsm_state;
  const MlpSymbol line = classify(before, s.input_latch);
  s.d_line = line;
  s.fsm_state = next_state(before, line);
  s.wait = s.fsm_state == before;
  if (s.fsm_state == MlpState::RS) {
    s.output_value = s.input_latch.t5;
    if (feedback) feedback(*s.output_value, s.storage);
  }
  ++s.cycle;
  return s;
}

AcceptRun run_until_accept(NanomachineState state, const ReadingProvider& readings,
                           std::size_t max_cycles) {
  if (max_cycles == 0) throw InvalidParams("max_cycles must be at least 1");
  for (std::size_t i = 0; i < max_cycles; ++i) {
    auto reading = readings();
    if (!reading) throw ExhaustedSource("reading provider exhausted at cycle " + std::to_string(i));
    state = tick(latch_inputs(std::move(state), *reading));
    if (state.fsm_state == MlpState::RS && state.output_value && *state.output_value != 0.0) {
      return {std::move(state), true};
    }
  }
  return {std::move(state), false};
}

}  // namespace mlsim
