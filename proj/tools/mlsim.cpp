// mlsim: command-line front end for the medial lemniscal pathway simulator.
//
// Exit codes: 0 success / accepted, 1 runtime error, 2 ran but not accepted
// (or machine invalid), 64 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mlsim/config.hpp"
#include "mlsim/mlp_machine.hpp"
#include "mlsim/moore_machine.hpp"
#include "mlsim/receptor.hpp"
#include "mlsim/trace_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotAccepted = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mlsim::Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw mlsim::Error("cannot read '" + path + "'");
  return os.str();
}

mlsim::MooreMachine load_machine(const std::optional<std::string>& path) {
  if (!path) return mlsim::build_mlp_machine();
  return mlsim::parse_machine(read_file(*path));
}

std::vector<std::string> split_symbols(const std::string& list, const mlsim::MooreMachine& m) {
  std::vector<std::string> symbols;
  if (list.empty()) return symbols;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = list.find(',', start);
    std::string token = list.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!m.input_alphabet.contains(token)) {
      throw UsageError("'" + token + "' is not an input symbol of the machine");
    }
    symbols.push_back(std::move(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return symbols;
}

int machine_run(const std::string& list, const std::optional<std::string>& machine_path,
                const std::string& accept_state) {
  const mlsim::MooreMachine machine = load_machine(machine_path);
  const auto symbols = split_symbols(list, machine);
  const auto result = mlsim::run(machine, symbols);

  std::cout << "step,state_before,symbol,state_after,output\n";
  std::string state = machine.initial;
  for (std::size_t i = 0; i < result.steps.size(); ++i) {
    const auto& s = result.steps[i];
    std::cout << i << ',' << state << ',' << symbols[i] << ',' << s.next_state << ','
              << s.emitted << '\n';
    state = s.next_state;
  }
  if (result.fault) {
    std::cerr << "mlsim: " << result.fault->what() << '\n';
    return kExitError;
  }
  return result.final_state(machine) == accept_state ? kExitOk : kExitNotAccepted;
}

int validate_machine(const std::optional<std::string>& path) {
  const auto diagnostics = mlsim::validate(load_machine(path));
  for (const auto& d : diagnostics) std::cout << d.message() << '\n';
  if (diagnostics.empty()) std::cout << "ok\n";
  return diagnostics.empty() ? kExitOk : kExitNotAccepted;
}

int simulate(const std::string& config_path, const std::string& format_name,
             const std::optional<std::string>& out_path, std::optional<std::uint64_t> seed,
             std::optional<std::size_t> max_ticks) {
  auto format = mlsim::parse_trace_format(format_name);
  if (!format) throw UsageError("unknown format '" + format_name + "'");
  mlsim::SimConfig config = mlsim::parse_config(read_file(config_path));
  if (seed) config.seed = *seed;
  if (max_ticks) config.max_ticks = *max_ticks;
  mlsim::validate_config(config);

  const mlsim::SessionTrace trace = mlsim::run_session(config);
  std::ostream* summary = &std::cout;
  if (out_path) {
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) throw mlsim::Error("cannot open '" + *out_path + "' for writing");
    mlsim::write_trace(out, trace, *format);
    out.close();
    if (!out) throw mlsim::Error("failed writing '" + *out_path + "'");
  } else {
    mlsim::write_trace(std::cout, trace, *format);
    summary = &std::cerr;
  }
  const auto final_state =
      trace.rows.empty() ? mlsim::MlpState::S : trace.rows.back().state_after;
  *summary << "ticks=" << trace.rows.size() << " final_state=" << mlsim::to_string(final_state)
           << " accepted=" << (trace.accepted ? "true" : "false") << '\n';
  return trace.accepted ? kExitOk : kExitNotAccepted;
}

std::string band_text(const mlsim::ReceptorSpec& r) {
  if (!r.band_hz) return "";
  return mlsim::format_double(r.band_hz->low_hz) + "-" + mlsim::format_double(r.band_hz->high_hz) +
         " Hz";
}

int print_catalog(const std::string& format_name) {
  if (format_name == "jsonl") {
    for (const auto& r : mlsim::catalog()) {
      nlohmann::ordered_json row{{"id", r.id},
                                 {"name", r.name},
                                 {"structure", r.structure},
                                 {"sensation", r.sensation},
                                 {"signals", r.signals},
                                 {"adaptation", mlsim::to_string(r.adaptation)},
                                 {"band", band_text(r)}};
      std::cout << row.dump() << '\n';
    }
    return kExitOk;
  }
  if (format_name != "csv") throw UsageError("unknown format '" + format_name + "'");
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + '"';
  };
  std::cout << "id,name,structure,sensation,signals,adaptation,band\n";
  for (const auto& r : mlsim::catalog()) {
    std::cout << r.id << ',' << quote(r.name) << ',' << quote(r.structure) << ','
              << quote(r.sensation) << ',' << quote(r.signals) << ','
              << mlsim::to_string(r.adaptation) << ',' << band_text(r) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Medial lemniscal pathway simulator"};
  app.require_subcommand(1);

  auto* machine = app.add_subcommand("machine", "Moore machine operations");
  machine->require_subcommand(1);
  auto* machine_run_cmd = machine->add_subcommand("run", "Run a symbol sequence from q0");
  std::string symbols;
  std::optional<std::string> machine_path;
  std::string accept_state = "RS";
  machine_run_cmd->add_option("symbols", symbols, "Comma-separated input symbols, e.g. d2,d4")
      ->required();
  machine_run_cmd->add_option("--machine", machine_path, "Machine definition file");
  machine_run_cmd->add_option("--accept", accept_state, "Accepting state")
      ->capture_default_str();

  auto* validate_cmd = app.add_subcommand("validate", "Check a machine definition");
  std::optional<std::string> validate_path;
  validate_cmd->add_option("machine", validate_path, "Machine file (default: built-in)");

  auto* simulate_cmd = app.add_subcommand("simulate", "Run an end-to-end simulation");
  std::string config_path;
  std::string format = "csv";
  std::optional<std::string> out_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_ticks;
  simulate_cmd->add_option("--config", config_path, "Simulation config file")->required();
  simulate_cmd->add_option("--format", format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  simulate_cmd->add_option("--out", out_path, "Trace output path (default: stdout)");
  simulate_cmd->add_option("--seed", seed, "Override the config seed");
  simulate_cmd->add_option("--max-ticks", max_ticks, "Override the config tick limit")
      ->check(CLI::PositiveNumber);

  auto* catalog_cmd = app.add_subcommand("catalog", "List the receptor catalog");
  std::string catalog_format = "csv";
  catalog_cmd->add_option("--format", catalog_format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*machine_run_cmd) return machine_run(symbols, machine_path, accept_state);
    if (*validate_cmd) return validate_machine(validate_path);
    if (*simulate_cmd) return simulate(config_path, format, out_path, seed, max_ticks);
    if (*catalog_cmd) return print_catalog(catalog_format);
  } catch (const UsageError& e) {
    std::cerr << "mlsim: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "mlsim: " << e.what() << '\n';
    return kExitError;
  } catch (...) {
    std::cerr << "mlsim: unknown error\n";
    return kExitError;
  }
  return kExitUsage;
}
