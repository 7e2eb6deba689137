#include <gtest/gtest.h>

#include "mlsim/nanomachine.hpp"
#include "oracles.hpp"

using namespace mlsim;
using mlsim::oracle::Gen;

namespace {

FactorReading above_all() { return {5, 5, 5, 5, 5, 1, 1, 0, 1, 0}; }

FactorReading zeros_with_positive_thresholds() { return {0, 0, 0, 0, 0, 1, 1, 1, 1, 1}; }

ReadingProvider forever(FactorReading r) {
  return [r]() -> std::optional<FactorReading> { return r; };
}

NanomachineState at(MlpState s) {
  auto st = reset();
  st.fsm_state = s;
  return st;
}

}  // namespace

TEST(Reset, Defaults) {
  auto s = reset(16);
  EXPECT_EQ(s.fsm_state, MlpState::S);
  EXPECT_EQ(s.cycle, 0u);
  EXPECT_EQ(s.storage, std::vector<double>(16, 0.0));
  EXPECT_FALSE(s.d_line);
  EXPECT_FALSE(s.wait);
  EXPECT_FALSE(s.output_value);
  EXPECT_EQ(reset(12).storage.size(), 12u);
  EXPECT_THROW(reset(8), InvalidParams);
}

TEST(Alu, Ops) {
  auto s = reset();
  s.storage[0] = 2;
  s.storage[1] = 3;
  auto out = alu_exec(s, {AluOpcode::Add, 0, 1, 2});
  EXPECT_EQ(out.storage[2], 5.0);
  out = alu_exec(s, {AluOpcode::Sub, 0, 1, 2});
  EXPECT_EQ(out.storage[2], -1.0);

  s.storage[0] = 1;
  s.storage[1] = 0;
  EXPECT_EQ(alu_exec(s, {AluOpcode::And, 0, 1, 2}).storage[2], 0.0);
  EXPECT_EQ(alu_exec(s, {AluOpcode::Or, 0, 1, 2}).storage[2], 1.0);
  s.storage[0] = 0;
  EXPECT_EQ(alu_exec(s, {AluOpcode::Not, 0, 99, 2}).storage[2], 1.0);
  s.storage[0] = -0.5;
  EXPECT_EQ(alu_exec(s, {AluOpcode::Not, 0, 0, 2}).storage[2], 0.0);
}

TEST(Alu, OnlyDestinationChangesAndCycleHolds) {
  auto s = reset();
  for (std::size_t i = 0; i < s.storage.size(); ++i) s.storage[i] = static_cast<double>(i);
  s.cycle = 7;
  auto out = alu_exec(s, {AluOpcode::Add, 3, 4, 10});
  EXPECT_EQ(out.cycle, 7u);
  for (std::size_t i = 0; i < s.storage.size(); ++i) {
    if (i != 10) EXPECT_EQ(out.storage[i], s.storage[i]);
  }
  EXPECT_EQ(out.storage[10], 7.0);
}

TEST(Alu, IndexOutOfRange) {
  auto s = reset(12);
  EXPECT_THROW(alu_exec(s, {AluOpcode::Add, 12, 0, 0}), IndexOutOfRange);
  EXPECT_THROW(alu_exec(s, {AluOpcode::Add, 0, 12, 0}), IndexOutOfRange);
  EXPECT_THROW(alu_exec(s, {AluOpcode::Add, 0, 0, 12}), IndexOutOfRange);
  EXPECT_NO_THROW(alu_exec(s, {AluOpcode::Not, 0, 12, 1}));
}

TEST(Latch, MirrorsIntoRegisters) {
  FactorReading r{3, 4, 5, 6, 7, 2, 8, 9, 10, 11};
  auto s = latch_inputs(reset(), r);
  EXPECT_EQ(s.input_latch, r);
  EXPECT_EQ(s.storage[0], 3.0);
  EXPECT_EQ(s.storage[4], 7.0);
  EXPECT_EQ(s.storage[5], 2.0);
  EXPECT_EQ(s.storage[9], 11.0);
  EXPECT_EQ(s.cycle, 0u);

  auto z = latch_inputs(latch_inputs(reset(), r), FactorReading{});
  for (int i = 0; i < 10; ++i) EXPECT_EQ(z.storage[i], 0.0);
  r.t2 = std::nan("");
  EXPECT_THROW(latch_inputs(reset(), r), NonFiniteInput);
}

TEST(Tick, Examples) {
  FactorReading r;
  r.t1 = 3;
  r.th_cs = 2;
  auto s = tick(latch_inputs(reset(), r));
  EXPECT_EQ(s.fsm_state, MlpState::MS);
  EXPECT_EQ(s.d_line, MlpSymbol::d2);
  EXPECT_FALSE(s.wait);
  EXPECT_EQ(s.cycle, 1u);

  r.t1 = 0;
  s = tick(latch_inputs(reset(), r));
  EXPECT_EQ(s.fsm_state, MlpState::S);
  EXPECT_EQ(s.d_line, MlpSymbol::d1);
  EXPECT_TRUE(s.wait);

  FactorReading mv;
  mv.t4 = 5;
  mv.th_v = 1;
  mv.t5 = 42;
  s = tick(latch_inputs(at(MlpState::MV), mv));
  EXPECT_EQ(s.fsm_state, MlpState::RS);
  EXPECT_EQ(s.d_line, MlpSymbol::d8);
  EXPECT_EQ(s.output_value, 42.0);
}

TEST(Tick, LatchPersistsAcrossCycles) {
  auto s = latch_inputs(reset(), above_all());
  for (int i = 0; i < 4; ++i) s = tick(s);
  EXPECT_EQ(s.fsm_state, MlpState::RS);
  EXPECT_EQ(s.cycle, 4u);
}

TEST(Tick, OutputFeedbackHook) {
  auto s = latch_inputs(at(MlpState::MV), above_all());
  int calls = 0;
  s = tick(s, [&](double value, std::vector<double>& storage) {
    ++calls;
    storage[11] = value;
  });
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(s.storage[11], 5.0);
  // No hook, no change.
  auto plain = tick(latch_inputs(at(MlpState::MV), above_all()));
  EXPECT_EQ(plain.storage[11], 0.0);
}

TEST(RunUntilAccept, Examples) {
  auto a = run_until_accept(reset(), forever(above_all()), 100);
  EXPECT_TRUE(a.accepted);
  EXPECT_EQ(a.state.cycle, 4u);

  auto b = run_until_accept(reset(), forever(zeros_with_positive_thresholds()), 50);
  EXPECT_FALSE(b.accepted);
  EXPECT_EQ(b.state.cycle, 50u);
  EXPECT_EQ(b.state.fsm_state, MlpState::S);

  auto c = run_until_accept(reset(), forever(above_all()), 1);
  EXPECT_FALSE(c.accepted);
  EXPECT_EQ(c.state.fsm_state, MlpState::MS);
}

TEST(RunUntilAccept, ZeroOutputKeepsWaitingInFinalState) {
  FactorReading r = above_all();
  r.t5 = 0.0;
  auto res = run_until_accept(reset(), forever(r), 10);
  EXPECT_FALSE(res.accepted);
  EXPECT_EQ(res.state.fsm_state, MlpState::RS);
  EXPECT_EQ(res.state.output_value, 0.0);
}

TEST(RunUntilAccept, Errors) {
  EXPECT_THROW(run_until_accept(reset(), forever(above_all()), 0), InvalidParams);
  int left = 2;
  ReadingProvider p = [&]() -> std::optional<FactorReading> {
    if (left-- == 0) return std::nullopt;
    return zeros_with_positive_thresholds();
  };
  EXPECT_THROW(run_until_accept(reset(), p, 10), ExhaustedSource);
}

TEST(NanomachineProperties, CoSimulationAgainstEngine) {
  Gen gen(99);
  const auto& m = mlp_machine();
  for (int run_no = 0; run_no < 300; ++run_no) {
    auto s = reset();
    std::vector<std::string> symbols;
    std::vector<MlpState> states;
    for (int c = 0; c < 60; ++c) {
      FactorReading r{gen.sticky_real(-1, 1), gen.sticky_real(-1, 1), gen.sticky_real(-1, 1),
                      gen.sticky_real(-1, 1), gen.sticky_real(-1, 1), gen.sticky_real(-1, 1),
                      gen.sticky_real(-1, 1), gen.sticky_real(-1, 1), gen.sticky_real(-1, 1),
                      gen.sticky_real(-1, 1)};
      auto before = s;
      s = tick(latch_inputs(s, r));
      ASSERT_TRUE(s.d_line);
      EXPECT_EQ(*s.d_line, classify(before.fsm_state, r));
      EXPECT_EQ(s.wait, s.fsm_state == before.fsm_state);
      EXPECT_EQ(s.cycle, before.cycle + 1);
      symbols.emplace_back(to_string(*s.d_line));
      states.push_back(s.fsm_state);
    }
    auto ref = run(m, symbols);
    ASSERT_TRUE(ref.ok());
    for (std::size_t i = 0; i < states.size(); ++i) {
      EXPECT_EQ(to_string(states[i]), ref.steps[i].next_state);
    }
  }
}

TEST(NanomachineProperties, ShortestAcceptancePathIsFour) {
  // Every symbol sequence of length < 4 leaves the engine short of RS, and
  // the emulator needs exactly 4 cycles under a maximal drive.
  const auto& m = mlp_machine();
  std::vector<std::vector<std::string>> frontier{{}};
  for (int len = 1; len < 4; ++len) {
    std::vector<std::vector<std::string>> next;
    for (const auto& seq : frontier) {
      for (auto d : kMlpSymbols) {
        auto s = seq;
        s.emplace_back(to_string(d));
        auto r = run(m, s);
        if (r.ok()) EXPECT_NE(r.final_state(m), "RS");
        next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  EXPECT_EQ(run_until_accept(reset(), forever(above_all()), 1000).state.cycle, 4u);
}
