#include "mlsim/errors.hpp"

#include <sstream>

namespace mlsim {

namespace {

std::string undefined_message(const std::string& state, const std::string& symbol,
                              std::size_t index) {
  std::ostringstream os;
  os << "undefined transition (" << state << ", " << symbol << ")";
  if (index != UndefinedTransition::kNoIndex) os << " at input index " << index;
  return os.str();
}

std::string band_message(double f, double lo, double hi) {
  std::ostringstream os;
  os << "frequency " << f << " Hz outside receptor band [" << lo << ", " << hi << "] Hz";
  return os.str();
}

}  // namespace

UndefinedTransition::UndefinedTransition(std::string state, std::string symbol,
                                         std::size_t index)
    : Error(undefined_message(state, symbol, index)),
      state_(std::move(state)),
      symbol_(std::move(symbol)),
      index_(index) {}

FrequencyOutOfBand::FrequencyOutOfBand(double frequency_hz, double low_hz, double high_hz)
    : Error(band_message(frequency_hz, low_hz, high_hz)) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
            what),
      line_(line),
      column_(column) {}

ValidationError::ValidationError(std::string key, std::string constraint)
    : Error("invalid value for '" + key + "': " + constraint),
      key_(std::move(key)),
      constraint_(std::move(constraint)) {}

}  // namespace mlsim
