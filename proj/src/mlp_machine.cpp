#include "mlsim/mlp_machine.hpp"

#include <cmath>

namespace mlsim {

namespace {

constexpr std::array<std::string_view, 5> kStateNames{"S", "MS", "MT", "MV", "RS"};
constexpr std::array<std::string_view, 10> kSymbolNames{"d1", "d2", "d3", "d4", "d5",
                                                        "d6", "d7", "d8", "d9", "d10"};
constexpr std::array<std::string_view, 4> kOutputNames{"O1", "O2", "O3", kEpsilon};

}  // namespace

std::string_view to_string(MlpState state) noexcept {
  return kStateNames[static_cast<std::size_t>(state)];
}

std::string_view to_string(MlpSymbol symbol) noexcept {
  return kSymbolNames[static_cast<std::size_t>(symbol)];
}

std::string_view to_string(MlpOutput output) noexcept {
  return kOutputNames[static_cast<std::size_t>(output)];
}

std::optional<MlpState> parse_mlp_state(std::string_view text) noexcept {
  for (std::size_t i = 0; i < kStateNames.size(); ++i) {
    if (kStateNames[i] == text) return static_cast<MlpState>(i);
  }
  return std::nullopt;
}

std::optional<MlpSymbol> parse_mlp_symbol(std::string_view text) noexcept {
  for (std::size_t i = 0; i < kSymbolNames.size(); ++i) {
    if (kSymbolNames[i] == text) return static_cast<MlpSymbol>(i);
  }
  return std::nullopt;
}

std::optional<MlpOutput> parse_mlp_output(std::string_view text) noexcept {
  for (std::size_t i = 0; i < kOutputNames.size(); ++i) {
    if (kOutputNames[i] == text) return static_cast<MlpOutput>(i);
  }
  return std::nullopt;
}

MooreMachine build_mlp_machine() {
  using enum MlpState;
  using enum MlpSymbol;
  MooreMachine m;
  for (auto s : kMlpStates) m.states.emplace(to_string(s));
  for (auto d : kMlpSymbols) m.input_alphabet.emplace(to_string(d));
  for (auto o : {MlpOutput::O1, MlpOutput::O2, MlpOutput::O3, MlpOutput::Epsilon}) {
    m.output_alphabet.emplace(to_string(o));
  }
  m.initial = to_string(S);

  struct Edge {
    MlpState from;
    MlpSymbol on;
    MlpState to;
  };
  constexpr Edge kEdges[] = {
      {S, d1, S},   {S, d2, MS},  {MS, d3, MS}, {MS, d4, MT}, {MT, d5, MT},
      {MT, d6, MV}, {MV, d7, MV}, {MV, d8, RS}, {RS, d9, RS}, {RS, d10, RS},
  };
  for (const auto& e : kEdges) {
    m.transitions.emplace(std::pair{std::string(to_string(e.from)), std::string(to_string(e.on))},
                          std::string(to_string(e.to)));
  }

  m.outputs.emplace(to_string(S), to_string(MlpOutput::Epsilon));
  m.outputs.emplace(to_string(MS), to_string(MlpOutput::O1));
  m.outputs.emplace(to_string(MT), to_string(MlpOutput::O2));
  m.outputs.emplace(to_string(MV), to_string(MlpOutput::Epsilon));
  m.outputs.emplace(to_string(RS), to_string(MlpOutput::O3));
  return m;
}

const MooreMachine& mlp_machine() {
  static const MooreMachine instance = build_mlp_machine();
  return instance;
}

bool FactorReading::all_finite() const noexcept {
  for (double x : {t1, t2, t3, t4, t5, th_cs, th_s, th_t, th_v, th_r}) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

MlpSymbol classify(MlpState state, const FactorReading& r) noexcept {
  using enum MlpSymbol;
  switch (state) {
    case MlpState::S: return r.t1 <= r.th_cs ? d1 : d2;
    case MlpState::MS: return r.t2 <= r.th_s ? d3 : d4;
    case MlpState::MT: return r.t3 <= r.th_t ? d5 : d6;
    case MlpState::MV: return r.t4 <= r.th_v ? d7 : d8;
    case MlpState::RS: return r.t5 <= r.th_r ? d9 : d10;
  }
  return d1;
}

}  // namespace mlsim
