#pragma once

// Generic Moore machine: outputs attach to states, never to transitions.

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mlsim/errors.hpp"

namespace mlsim {

/// Identifier of the empty output.
inline constexpr std::string_view kEpsilon = "eps";

/// The six-tuple {Q, Sigma, Lambda, delta, tau, q0}. Identifiers are free-form
/// tokens. A value of this type may violate its invariants; see validate().
struct MooreMachine {
  std::set<std::string> states;
  std::set<std::string> input_alphabet;
  std::set<std::string> output_alphabet;
  /// Partial map (state, symbol) -> state. Determinism is structural.
  std::map<std::pair<std::string, std::string>, std::string> transitions;
  /// Total map state -> output when the machine is valid.
  std::map<std::string, std::string> outputs;
  std::string initial;

  bool operator==(const MooreMachine&) const = default;
};

struct StepResult {
  std::string next_state;
  std::string emitted;

  bool operator==(const StepResult&) const = default;
};

/// next_state = delta(state, symbol), emitted = tau(next_state).
/// Throws UndefinedTransition when the pair has no transition.
StepResult step(const MooreMachine& machine, std::string_view state, std::string_view symbol);

struct RunResult {
  /// One entry per consumed symbol, up to (excluding) the fault.
  std::vector<StepResult> steps;
  std::optional<UndefinedTransition> fault;

  bool ok() const noexcept { return !fault.has_value(); }
  /// Final state; the initial state when no step was taken.
  std::string_view final_state(const MooreMachine& machine) const noexcept;
};

/// Folds step() from the initial state. Stops at the first undefined pair and
/// reports it in RunResult::fault; never throws UndefinedTransition.
RunResult run(const MooreMachine& machine, std::span<const std::string> symbols);

struct Diagnostic {
  enum class Kind {
    InitialNotInStates,
    UnknownSourceState,
    UnknownSymbol,
    DanglingTarget,
    OutputNotTotal,
    OutputForUnknownState,
    UnknownOutput,
    Unreachable,
  };

  Kind kind;
  std::string subject;

  bool operator==(const Diagnostic&) const = default;
  std::string message() const;
};

std::string_view to_string(Diagnostic::Kind kind) noexcept;

/// Empty iff every invariant holds and every state is reachable from initial.
std::vector<Diagnostic> validate(const MooreMachine& machine);

/// Plain-text machine definition.
///
///   # comment
///   states  = S MS MT
///   inputs  = a b
///   outputs = O1 eps
///   initial = S
///   S a -> MS        (transition)
///   MS -> O1         (output)
///
/// Parsing is purely syntactic apart from rejecting duplicate keys; semantic
/// checks belong to validate(). Throws ParseError.
MooreMachine parse_machine(std::string_view text);

/// Inverse of parse_machine(), in a canonical (sorted) layout.
std::string format_machine(const MooreMachine& machine);

}  // namespace mlsim
