#include <gtest/gtest.h>

#include <limits>

#include "mlsim/mlp_machine.hpp"
#include "oracles.hpp"

using namespace mlsim;
using mlsim::oracle::Gen;

namespace {

std::vector<std::string> names(std::initializer_list<MlpSymbol> symbols) {
  std::vector<std::string> out;
  for (auto s : symbols) out.emplace_back(to_string(s));
  return out;
}

}  // namespace

TEST(MlpMachine, Shape) {
  const auto m = build_mlp_machine();
  EXPECT_EQ(m.states, (std::set<std::string>{"S", "MS", "MT", "MV", "RS"}));
  EXPECT_EQ(m.input_alphabet.size(), 10u);
  EXPECT_EQ(m.output_alphabet, (std::set<std::string>{"O1", "O2", "O3", "eps"}));
  EXPECT_EQ(m.initial, "S");
  EXPECT_EQ(m.outputs.at("MS"), "O1");
  EXPECT_EQ(m.transitions.at({"S", "d2"}), "MS");
  EXPECT_TRUE(validate(m).empty());
  EXPECT_EQ(&mlp_machine(), &mlp_machine());
  EXPECT_EQ(mlp_machine(), m);
}

TEST(MlpMachine, TransitionsMatchPublishedTablePlusClosure) {
  const auto m = build_mlp_machine();
  std::map<std::pair<std::string, std::string>, std::string> expected;
  for (const auto& cell : oracle::published_transition_table()) {
    expected[{cell.from, oracle::symbol_of(cell)}] = cell.to;
  }
  expected[{"RS", "d10"}] = "RS";
  EXPECT_EQ(m.transitions, expected);
  EXPECT_EQ(m.outputs, oracle::published_outputs());
}

TEST(MlpMachine, StepExamples) {
  const auto& m = mlp_machine();
  EXPECT_EQ(step(m, "S", "d2"), (StepResult{"MS", "O1"}));
  EXPECT_EQ(step(m, "S", "d1"), (StepResult{"S", "eps"}));
  EXPECT_THROW(step(m, "S", "d5"), UndefinedTransition);
  // Output is tau of the entered state even where the table annotates "d4/eps".
  EXPECT_EQ(step(m, "MS", "d4"), (StepResult{"MT", "O2"}));
  EXPECT_EQ(step(m, "RS", "d9"), (StepResult{"RS", "O3"}));
}

TEST(MlpMachine, RunExamples) {
  const auto& m = mlp_machine();
  using enum MlpSymbol;
  auto r = run(m, names({d2, d4, d6, d8}));
  ASSERT_TRUE(r.ok());
  std::vector<StepResult> expected{{"MS", "O1"}, {"MT", "O2"}, {"MV", "eps"}, {"RS", "O3"}};
  EXPECT_EQ(r.steps, expected);

  EXPECT_TRUE(run(m, {}).steps.empty());
  EXPECT_EQ(run(m, {}).final_state(m), "S");

  r = run(m, names({d1, d1, d1}));
  EXPECT_EQ(r.steps, (std::vector<StepResult>(3, StepResult{"S", "eps"})));
}

TEST(MlpMachine, ClassifyExamplesAndTies) {
  FactorReading r;
  r.t1 = 0.5;
  r.th_cs = 0.5;
  EXPECT_EQ(classify(MlpState::S, r), MlpSymbol::d1);
  r.t1 = std::nextafter(0.5, 1.0);
  EXPECT_EQ(classify(MlpState::S, r), MlpSymbol::d2);

  FactorReading z;
  EXPECT_EQ(classify(MlpState::MT, z), MlpSymbol::d5);
  EXPECT_EQ(classify(MlpState::MS, z), MlpSymbol::d3);
  EXPECT_EQ(classify(MlpState::MV, z), MlpSymbol::d7);
  EXPECT_EQ(classify(MlpState::RS, z), MlpSymbol::d9);

  FactorReading rs;
  rs.t5 = 1.0;
  EXPECT_EQ(classify(MlpState::RS, rs), MlpSymbol::d10);
}

TEST(MlpMachine, NameConversionsRoundTrip) {
  for (auto s : kMlpStates) EXPECT_EQ(parse_mlp_state(to_string(s)), s);
  for (auto d : kMlpSymbols) EXPECT_EQ(parse_mlp_symbol(to_string(d)), d);
  for (auto o : {MlpOutput::O1, MlpOutput::O2, MlpOutput::O3, MlpOutput::Epsilon}) {
    EXPECT_EQ(parse_mlp_output(to_string(o)), o);
  }
  EXPECT_FALSE(parse_mlp_state("Q"));
  EXPECT_FALSE(parse_mlp_symbol("d11"));
  EXPECT_FALSE(parse_mlp_output("O4"));
}

// Exhaustive over Q x Sigma.
TEST(MlpMachineProperties, ExactDomainMooreDisciplineProgressAbsorption) {
  const auto& m = mlp_machine();
  int defined = 0;
  for (auto q : kMlpStates) {
    for (auto d : kMlpSymbols) {
      const std::string qs(to_string(q)), ds(to_string(d));
      if (!m.transitions.contains({qs, ds})) {
        EXPECT_THROW(step(m, qs, ds), UndefinedTransition) << qs << "," << ds;
        continue;
      }
      ++defined;
      auto r = step(m, qs, ds);
      EXPECT_EQ(r.emitted, m.outputs.at(r.next_state));
      auto target = *parse_mlp_state(r.next_state);
      EXPECT_GE(static_cast<int>(target), static_cast<int>(q));
      if (q == MlpState::RS) EXPECT_EQ(target, MlpState::RS);
    }
  }
  EXPECT_EQ(defined, 10);
}

TEST(MlpMachineProperties, ClassifyImageIsAcceptedAtEachState) {
  const auto& m = mlp_machine();
  Gen gen(3);
  for (int i = 0; i < 20000; ++i) {
    FactorReading r{gen.sticky_real(-5, 5), gen.sticky_real(-5, 5), gen.sticky_real(-5, 5),
                    gen.sticky_real(-5, 5), gen.sticky_real(-5, 5), gen.sticky_real(-5, 5),
                    gen.sticky_real(-5, 5), gen.sticky_real(-5, 5), gen.sticky_real(-5, 5),
                    gen.sticky_real(-5, 5)};
    for (auto q : kMlpStates) {
      auto d = classify(q, r);
      EXPECT_EQ(d, classify(q, r));
      EXPECT_TRUE(m.transitions.contains({std::string(to_string(q)), std::string(to_string(d))}));
    }
  }
}

TEST(MlpMachineProperties, RunIsDeterministic) {
  const auto& m = mlp_machine();
  Gen gen(5);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::string> input;
    for (std::size_t k = 0, n = gen.index(30); k < n; ++k) {
      input.emplace_back(to_string(kMlpSymbols[gen.index(10)]));
    }
    auto a = run(m, input);
    auto b = run(m, input);
    EXPECT_EQ(a.steps, b.steps);
    EXPECT_EQ(a.ok(), b.ok());
    if (!a.ok()) EXPECT_EQ(a.fault->index(), b.fault->index());
  }
}
