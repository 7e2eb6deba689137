#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlsim {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A (state, symbol) pair with no transition. Models an illegal event.
class UndefinedTransition : public Error {
 public:
  static constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

  UndefinedTransition(std::string state, std::string symbol, std::size_t index = kNoIndex);

  const std::string& state() const noexcept { return state_; }
  const std::string& symbol() const noexcept { return symbol_; }
  /// Position in the input sequence, or kNoIndex for a single step.
  std::size_t index() const noexcept { return index_; }

 private:
  std::string state_;
  std::string symbol_;
  std::size_t index_;
};

class NonFiniteInput : public Error {
 public:
  using Error::Error;
};

/// A sample provider ran dry before the consumer terminated.
class ExhaustedSource : public Error {
 public:
  using Error::Error;
};

class EmptySeries : public Error {
 public:
  EmptySeries() : Error("series is empty") {}
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class FrequencyOutOfBand : public Error {
 public:
  FrequencyOutOfBand(double frequency_hz, double low_hz, double high_hz);
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A well-formed value that violates a documented constraint.
class ValidationError : public Error {
 public:
  ValidationError(std::string key, std::string constraint);

  const std::string& key() const noexcept { return key_; }
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string key_;
  std::string constraint_;
};

}  // namespace mlsim
