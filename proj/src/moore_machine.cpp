#include "mlsim/moore_machine.hpp"

#include <deque>
#include <sstream>

namespace mlsim {

StepResult step(const MooreMachine& machine, std::string_view state, std::string_view symbol) {
  auto it = machine.transitions.find({std::string(state), std::string(symbol)});
  if (it == machine.transitions.end()) {
    throw UndefinedTransition(std::string(state), std::string(symbol));
  }
  auto out = machine.outputs.find(it->second);
  // A valid machine always has tau defined here; an invalid one reports eps.
  std::string emitted = out != machine.outputs.end() ? out->second : std::string(kEpsilon);
  return {it->second, std::move(emitted)};
}

std::string_view RunResult::final_state(const MooreMachine& machine) const noexcept {
  return steps.empty() ? std::string_view(machine.initial)
                       : std::string_view(steps.back().next_state);
}

RunResult run(const MooreMachine& machine, std::span<const std::string> symbols) {
  RunResult result;
  result.steps.reserve(symbols.size());
  std::string current = machine.initial;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    auto it = machine.transitions.find({current, symbols[i]});
    if (it == machine.transitions.end()) {
      result.fault.emplace(current, symbols[i], i);
      break;
    }
    result.steps.push_back(step(machine, current, symbols[i]));
    current = result.steps.back().next_state;
  }
  return result;
}

std::string_view to_string(Diagnostic::Kind kind) noexcept {
  switch (kind) {
    case Diagnostic::Kind::InitialNotInStates: return "InitialNotInStates";
    case Diagnostic::Kind::UnknownSourceState: return "UnknownSourceState";
    case Diagnostic::Kind::UnknownSymbol: return "UnknownSymbol";
    case Diagnostic::Kind::DanglingTarget: return "DanglingTarget";
    case Diagnostic::Kind::OutputNotTotal: return "OutputNotTotal";
    case Diagnostic::Kind::OutputForUnknownState: return "OutputForUnknownState";
    case Diagnostic::Kind::UnknownOutput: return "UnknownOutput";
    case Diagnostic::Kind::Unreachable: return "Unreachable";
  }
  return "?";
}

std::string Diagnostic::message() const {
  std::string text(to_string(kind));
  text += '(';
  text += subject;
  text += ')';
  return text;
}

std::vector<Diagnostic> validate(const MooreMachine& m) {
  using Kind = Diagnostic::Kind;
  std::vector<Diagnostic> out;
  if (!m.states.contains(m.initial)) out.push_back({Kind::InitialNotInStates, m.initial});

  std::set<std::string> reported_sources, reported_symbols, reported_targets;
  for (const auto& [key, target] : m.transitions) {
    const auto& [source, symbol] = key;
    if (!m.states.contains(source) && reported_sources.insert(source).second) {
      out.push_back({Kind::UnknownSourceState, source});
    }
    if (!m.input_alphabet.contains(symbol) && reported_symbols.insert(symbol).second) {
      out.push_back({Kind::UnknownSymbol, symbol});
    }
    if (!m.states.contains(target) && reported_targets.insert(target).second) {
      out.push_back({Kind::DanglingTarget, target});
    }
  }

  for (const auto& state : m.states) {
    if (!m.outputs.contains(state)) out.push_back({Kind::OutputNotTotal, state});
  }
  std::set<std::string> reported_outputs;
  for (const auto& [state, output] : m.outputs) {
    if (!m.states.contains(state)) out.push_back({Kind::OutputForUnknownState, state});
    if (!m.output_alphabet.contains(output) && reported_outputs.insert(output).second) {
      out.push_back({Kind::UnknownOutput, output});
    }
  }

  if (m.states.contains(m.initial)) {
    std::map<std::string, std::vector<std::string>> successors;
    for (const auto& [key, target] : m.transitions) {
      if (m.states.contains(target)) successors[key.first].push_back(target);
    }
    std::set<std::string> seen{m.initial};
    std::deque<std::string> frontier{m.initial};
    while (!frontier.empty()) {
      std::string s = std::move(frontier.front());
      frontier.pop_front();
      for (const auto& next : successors[s]) {
        if (seen.insert(next).second) frontier.push_back(next);
      }
    }
    for (const auto& state : m.states) {
      if (!seen.contains(state)) out.push_back({Kind::Unreachable, state});
    }
  }
  return out;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

}  // namespace

MooreMachine parse_machine(std::string_view text) {
  MooreMachine m;
  std::set<std::string> seen_keys;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (tokens.size() >= 2 && tokens[1].text == "=") {
      std::string key(tokens[0].text);
      if (key != "states" && key != "inputs" && key != "outputs" && key != "initial") {
        throw ParseError(line_no, tokens[0].column, "unknown key '" + key + "'");
      }
      if (!seen_keys.insert(key).second) {
        throw ParseError(line_no, tokens[0].column, "duplicate key '" + key + "'");
      }
      if (key == "initial") {
        if (tokens.size() != 3) {
          throw ParseError(line_no, tokens[0].column, "'initial' takes exactly one state");
        }
        m.initial = std::string(tokens[2].text);
        continue;
      }
      auto& target = key == "states" ? m.states
                     : key == "inputs" ? m.input_alphabet
                                       : m.output_alphabet;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        if (!target.emplace(tokens[i].text).second) {
          throw ParseError(line_no, tokens[i].column,
                           "duplicate identifier '" + std::string(tokens[i].text) + "'");
        }
      }
      continue;
    }

    std::size_t arrow = tokens.size();
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].text == "->") {
        arrow = i;
        break;
      }
    }
    if (arrow == tokens.size()) {
      throw ParseError(line_no, tokens[0].column, "expected 'key = values' or a '->' rule");
    }
    if (tokens.size() - arrow != 2) {
      const Token& at = tokens.size() - arrow == 1 ? tokens[arrow] : tokens[arrow + 2];
      throw ParseError(line_no, at.column, "expected exactly one identifier after '->'");
    }
    std::string rhs(tokens[arrow + 1].text);
    if (arrow == 2) {
      std::pair<std::string, std::string> key{std::string(tokens[0].text),
                                              std::string(tokens[1].text)};
      if (!m.transitions.emplace(key, rhs).second) {
        throw ParseError(line_no, tokens[0].column,
                         "second transition for (" + key.first + ", " + key.second + ")");
      }
    } else if (arrow == 1) {
      std::string state(tokens[0].text);
      if (!m.outputs.emplace(state, rhs).second) {
        throw ParseError(line_no, tokens[0].column, "second output for state '" + state + "'");
      }
    } else {
      throw ParseError(line_no, tokens[0].column,
                       "expected 'state symbol -> state' or 'state -> output'");
    }
  }
  return m;
}

std::string format_machine(const MooreMachine& m) {
  std::ostringstream os;
  auto list = [&os](std::string_view key, const std::set<std::string>& items) {
    os << key << " =";
    for (const auto& item : items) os << ' ' << item;
    os << '\n';
  };
  list("states", m.states);
  list("inputs", m.input_alphabet);
  list("outputs", m.output_alphabet);
  os << "initial = " << m.initial << '\n';
  for (const auto& [key, target] : m.transitions) {
    os << key.first << ' ' << key.second << " -> " << target << '\n';
  }
  for (const auto& [state, output] : m.outputs) os << state << " -> " << output << '\n';
  return os.str();
}

}  // namespace mlsim
