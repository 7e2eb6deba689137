#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "mlsim/moore_machine.hpp"

namespace mlsim {

/// States in pathway order; the enumerator order is the progress order.
enum class MlpState : std::uint8_t { S, MS, MT, MV, RS };

enum class MlpSymbol : std::uint8_t { d1, d2, d3, d4, d5, d6, d7, d8, d9, d10 };

enum class MlpOutput : std::uint8_t { O1, O2, O3, Epsilon };

inline constexpr std::array kMlpStates{MlpState::S, MlpState::MS, MlpState::MT, MlpState::MV,
                                       MlpState::RS};

inline constexpr std::array kMlpSymbols{MlpSymbol::d1, MlpSymbol::d2, MlpSymbol::d3,
                                        MlpSymbol::d4, MlpSymbol::d5, MlpSymbol::d6,
                                        MlpSymbol::d7, MlpSymbol::d8, MlpSymbol::d9,
                                        MlpSymbol::d10};

/// Accepting state of the pathway machine.
inline constexpr MlpState kMlpFinal = MlpState::RS;

std::string_view to_string(MlpState state) noexcept;
std::string_view to_string(MlpSymbol symbol) noexcept;
std::string_view to_string(MlpOutput output) noexcept;

std::optional<MlpState> parse_mlp_state(std::string_view text) noexcept;
std::optional<MlpSymbol> parse_mlp_symbol(std::string_view text) noexcept;
std::optional<MlpOutput> parse_mlp_output(std::string_view text) noexcept;

/// Five-state pathway machine. (RS, d10) -> RS closes the alphabet; every
/// other transition is the published table.
MooreMachine build_mlp_machine();

/// Shared immutable instance of build_mlp_machine().
const MooreMachine& mlp_machine();

/// Signal factors T1..T5 and their thresholds, as latched by the processor.
struct FactorReading {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double t4 = 0.0;
  double t5 = 0.0;
  double th_cs = 0.0;
  double th_s = 0.0;
  double th_t = 0.0;
  double th_v = 0.0;
  double th_r = 0.0;

  bool operator==(const FactorReading&) const = default;
  bool all_finite() const noexcept;
};

/// Input symbol for the factor watched in `state`. Ties go to the low symbol
/// (d1, d3, d5, d7, d9); strictly above threshold gives the high one.
MlpSymbol classify(MlpState state, const FactorReading& reading) noexcept;

}  // namespace mlsim
