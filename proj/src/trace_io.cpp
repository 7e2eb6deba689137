#include "mlsim/trace_io.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace mlsim {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::vector<std::string_view> kColumns = {
    "tick", "h", "s", "m", "v", "r", "gates", "symbol", "state_before", "state_after",
    "emitted", "wait"};

std::string quote_csv(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> row_fields(const TraceRow& row) {
  return {std::to_string(row.tick),
          format_double(row.h),
          format_double(row.s),
          format_double(row.m),
          format_double(row.v),
          format_double(row.r),
          format_gates(row.gates),
          std::string(to_string(row.symbol)),
          std::string(to_string(row.state_before)),
          std::string(to_string(row.state_after)),
          std::string(to_string(row.emitted)),
          row.wait ? "true" : "false"};
}

[[noreturn]] void fail(std::size_t line, std::string_view column, const std::string& what) {
  throw ParseError(line, 1, "column '" + std::string(column) + "': " + what);
}

double read_double(std::string_view text, std::size_t line, std::string_view column) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) fail(line, column, "bad number");
  return value;
}

TraceRow row_from_fields(const std::vector<std::string>& f, std::size_t line) {
  if (f.size() != kColumns.size()) {
    throw ParseError(line, 1, "expected " + std::to_string(kColumns.size()) + " fields, got " +
                                  std::to_string(f.size()));
  }
  TraceRow row;
  auto [ptr, ec] = std::from_chars(f[0].data(), f[0].data() + f[0].size(), row.tick);
  if (ec != std::errc{} || ptr != f[0].data() + f[0].size()) fail(line, "tick", "bad index");
  row.h = read_double(f[1], line, "h");
  row.s = read_double(f[2], line, "s");
  row.m = read_double(f[3], line, "m");
  row.v = read_double(f[4], line, "v");
  row.r = read_double(f[5], line, "r");
  try {
    row.gates = parse_gates(f[6]);
  } catch (const Error& e) {
    fail(line, "gates", e.what());
  }
  auto symbol = parse_mlp_symbol(f[7]);
  auto before = parse_mlp_state(f[8]);
  auto after = parse_mlp_state(f[9]);
  auto emitted = parse_mlp_output(f[10]);
  if (!symbol) fail(line, "symbol", "unknown symbol '" + f[7] + "'");
  if (!before) fail(line, "state_before", "unknown state '" + f[8] + "'");
  if (!after) fail(line, "state_after", "unknown state '" + f[9] + "'");
  if (!emitted) fail(line, "emitted", "unknown output '" + f[10] + "'");
  if (f[11] != "true" && f[11] != "false") fail(line, "wait", "expected true or false");
  row.symbol = *symbol;
  row.state_before = *before;
  row.state_after = *after;
  row.emitted = *emitted;
  row.wait = f[11] == "true";
  return row;
}

}  // namespace

std::optional<TraceFormat> parse_trace_format(std::string_view text) noexcept {
  if (text == "csv") return TraceFormat::Csv;
  if (text == "jsonl") return TraceFormat::Jsonl;
  return std::nullopt;
}

const std::vector<std::string_view>& trace_columns() { return kColumns; }

std::string format_gates(const GateRecord& gates) {
  std::string out;
  for (auto v : gates.verdicts) {
    out += v == GateVerdict::Pass ? 'P' : v == GateVerdict::Fail ? 'F' : '-';
  }
  return out;
}

GateRecord parse_gates(std::string_view text) {
  GateRecord record;
  if (text.size() != record.verdicts.size()) throw Error("gate record must have 4 characters");
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'P': record.verdicts[i] = GateVerdict::Pass; break;
      case 'F': record.verdicts[i] = GateVerdict::Fail; break;
      case '-': record.verdicts[i] = GateVerdict::NotEvaluated; break;
      default: throw Error("gate verdict must be P, F or -");
    }
  }
  return record;
}

std::string format_double(double value) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

void write_trace(std::ostream& out, const SessionTrace& trace, TraceFormat format) {
  if (format == TraceFormat::Csv) {
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
      out << (i ? "," : "") << kColumns[i];
    }
    out << '\n';
    for (const auto& row : trace.rows) {
      auto fields = row_fields(row);
      for (std::size_t i = 0; i < fields.size(); ++i) {
        out << (i ? "," : "") << quote_csv(fields[i]);
      }
      out << '\n';
    }
    return;
  }

  ordered_json header = ordered_json::object();
  for (const auto& [key, value] : trace.header) {
    std::visit([&header, &key](const auto& v) { header[key] = v; }, value);
  }
  out << ordered_json{{"header", header}}.dump() << '\n';
  for (const auto& row : trace.rows) {
    ordered_json obj;
    obj["tick"] = static_cast<std::uint64_t>(row.tick);
    obj["h"] = row.h;
    obj["s"] = row.s;
    obj["m"] = row.m;
    obj["v"] = row.v;
    obj["r"] = row.r;
    obj["gates"] = format_gates(row.gates);
    obj["symbol"] = to_string(row.symbol);
    obj["state_before"] = to_string(row.state_before);
    obj["state_after"] = to_string(row.state_after);
    obj["emitted"] = to_string(row.emitted);
    obj["wait"] = row.wait;
    out << obj.dump() << '\n';
  }
  if (!out) throw Error("failed to write trace");
}

std::string trace_to_string(const SessionTrace& trace, TraceFormat format) {
  std::ostringstream os;
  write_trace(os, trace, format);
  return os.str();
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) throw ParseError(line, 1, "quote inside unquoted field");
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        record.push_back(std::move(field));
        field.clear();
        records.push_back(std::move(record));
        record.clear();
        field_started = false;
        ++line;
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (in_quotes) throw ParseError(line, 1, "unterminated quoted field");
  if (field_started || !field.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

SessionTrace read_trace_csv(std::string_view text) {
  auto records = parse_csv(text);
  if (records.empty()) throw ParseError(1, 1, "missing CSV header");
  const auto& head = records.front();
  if (head.size() != kColumns.size()) throw ParseError(1, 1, "unexpected CSV header");
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (head[i] != kColumns[i]) {
      throw ParseError(1, 1, "unexpected CSV column '" + head[i] + "'");
    }
  }
  SessionTrace trace;
  for (std::size_t i = 1; i < records.size(); ++i) {
    trace.rows.push_back(row_from_fields(records[i], i + 1));
  }
  summarize(trace);
  return trace;
}

SessionTrace read_trace_jsonl(std::string_view text) {
  SessionTrace trace;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    ordered_json obj;
    try {
      obj = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, 1, e.what());
    }
    if (!have_header) {
      if (!obj.is_object() || !obj.contains("header") || !obj["header"].is_object()) {
        throw ParseError(line_no, 1, "first line must be the header object");
      }
      for (const auto& [key, value] : obj["header"].items()) {
        if (value.is_string()) {
          trace.header.emplace_back(key, value.get<std::string>());
        } else if (value.is_number_unsigned()) {
          trace.header.emplace_back(key, value.get<std::uint64_t>());
        } else if (value.is_number()) {
          trace.header.emplace_back(key, value.get<double>());
        } else {
          throw ParseError(line_no, 1, "unsupported header value for '" + key + "'");
        }
      }
      have_header = true;
      continue;
    }
    std::vector<std::string> fields;
    try {
      for (auto column : kColumns) {
        const auto& v = obj.at(std::string(column));
        if (column == "wait") {
          fields.push_back(v.get<bool>() ? "true" : "false");
        } else if (v.is_string()) {
          fields.push_back(v.get<std::string>());
        } else if (column == "tick") {
          fields.push_back(std::to_string(v.get<std::uint64_t>()));
        } else {
          fields.push_back(format_double(v.get<double>()));
        }
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, 1, e.what());
    }
    trace.rows.push_back(row_from_fields(fields, line_no));
  }
  if (!have_header) throw ParseError(1, 1, "missing header object");
  summarize(trace);
  return trace;
}

}  // namespace mlsim
