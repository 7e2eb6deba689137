#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlsim/channel.hpp"

namespace mlsim {

enum class TraceFormat { Csv, Jsonl };

std::optional<TraceFormat> parse_trace_format(std::string_view text) noexcept;

/// Column names shared by the CSV header and the JSONL row keys.
const std::vector<std::string_view>& trace_columns();

/// Four characters, one per gate in order H S M V: P pass, F fail, - not reached.
std::string format_gates(const GateRecord& gates);
GateRecord parse_gates(std::string_view text);

/// Shortest text that reads back to the same double.
std::string format_double(double value);

/// CSV: header row then one row per tick, LF line endings, RFC 4180 quoting.
/// JSONL: one header object {"header": {...}} then one object per row.
void write_trace(std::ostream& out, const SessionTrace& trace, TraceFormat format);
std::string trace_to_string(const SessionTrace& trace, TraceFormat format);

/// Readers for the two formats. CSV carries no header metadata. Both
/// recompute reached_final and accepted from the rows. Throw ParseError.
SessionTrace read_trace_csv(std::string_view text);
SessionTrace read_trace_jsonl(std::string_view text);

/// RFC 4180 field splitting, exposed for independent trace readers.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace mlsim
