#include "mlsim/config.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <variant>

#include "mlsim/trace_io.hpp"

namespace mlsim {

namespace {

// size_t and uint64_t may be the same type, so integer slots are tagged.
struct CountSlot {
  std::size_t* value;
};
struct SeedSlot {
  std::uint64_t* value;
};
using Slot = std::variant<double*, CountSlot, SeedSlot, NoiseKind*, std::string*>;

struct Field {
  std::string_view key;
  Slot (*slot)(SimConfig&);
};

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      {"h_th", [](SimConfig& c) -> Slot { return &c.thresholds.h_th; }},
      {"s_th", [](SimConfig& c) -> Slot { return &c.thresholds.s_th; }},
      {"v_th", [](SimConfig& c) -> Slot { return &c.thresholds.v_th; }},
      {"noise", [](SimConfig& c) -> Slot { return &c.channel.noise.kind; }},
      {"noise_mean", [](SimConfig& c) -> Slot { return &c.channel.noise.mean; }},
      {"noise_spread", [](SimConfig& c) -> Slot { return &c.channel.noise.spread; }},
      {"feedback_gain", [](SimConfig& c) -> Slot { return &c.channel.feedback_gain; }},
      {"receptor", [](SimConfig& c) -> Slot { return &c.stimulus.receptor; }},
      {"amplitude", [](SimConfig& c) -> Slot { return &c.stimulus.params.amplitude; }},
      {"frequency_hz", [](SimConfig& c) -> Slot { return &c.stimulus.params.frequency_hz; }},
      {"duration_s", [](SimConfig& c) -> Slot { return &c.stimulus.params.duration_s; }},
      {"adaptation_tau_s", [](SimConfig& c) -> Slot { return &c.stimulus.params.adaptation_tau_s; }},
      {"mixed_floor", [](SimConfig& c) -> Slot { return &c.stimulus.params.mixed_floor; }},
      {"coef_h_s", [](SimConfig& c) -> Slot { return &c.coefficients.h_s; }},
      {"coef_h_j", [](SimConfig& c) -> Slot { return &c.coefficients.h_j; }},
      {"coef_h_m", [](SimConfig& c) -> Slot { return &c.coefficients.h_m; }},
      {"coef_s_gf", [](SimConfig& c) -> Slot { return &c.coefficients.s_gf; }},
      {"coef_s_cf", [](SimConfig& c) -> Slot { return &c.coefficients.s_cf; }},
      {"coef_s_attenuation", [](SimConfig& c) -> Slot { return &c.coefficients.s_attenuation; }},
      {"coef_a_bs", [](SimConfig& c) -> Slot { return &c.coefficients.a_bs; }},
      {"coef_t_t", [](SimConfig& c) -> Slot { return &c.coefficients.t_t; }},
      {"coef_t_c", [](SimConfig& c) -> Slot { return &c.coefficients.t_c; }},
      {"coef_t_p", [](SimConfig& c) -> Slot { return &c.coefficients.t_p; }},
      {"coef_v_v", [](SimConfig& c) -> Slot { return &c.coefficients.v_v; }},
      {"coef_v_t", [](SimConfig& c) -> Slot { return &c.coefficients.v_t; }},
      {"dt", [](SimConfig& c) -> Slot { return &c.dt; }},
      {"max_ticks", [](SimConfig& c) -> Slot { return CountSlot{&c.max_ticks}; }},
      {"seed", [](SimConfig& c) -> Slot { return SeedSlot{&c.seed}; }},
  };
  return table;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

const Field* find_field(std::string_view key) {
  for (const auto& f : fields()) {
    if (f.key == key) return &f;
  }
  return nullptr;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0;
  while (b < s.size() && is_space(s[b])) ++b;
  std::size_t e = s.size();
  while (e > b && is_space(s[e - 1])) --e;
  offset += b;
  return s.substr(b, e - b);
}

template <typename Int>
bool parse_integer(std::string_view text, Int& out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

bool parse_real(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

void require(bool ok, std::string_view key, std::string constraint) {
  if (!ok) throw ValidationError(std::string(key), std::move(constraint));
}

}  // namespace

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys = [] {
    std::vector<std::string_view> k;
    for (const auto& f : fields()) k.push_back(f.key);
    return k;
  }();
  return keys;
}

SimConfig parse_config(std::string_view text) {
  SimConfig config;
  std::set<std::string_view> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t key_col = 1;
    if (trim(line, key_col).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_no, key_col, "expected 'key = value'");
    }
    key_col = 1;
    std::string_view key = trim(line.substr(0, eq), key_col);
    std::size_t value_col = eq + 2;
    std::string_view value = trim(line.substr(eq + 1), value_col);

    if (key.empty()) throw ParseError(line_no, key_col, "missing key before '='");
    const Field* field = find_field(key);
    if (!field) throw ParseError(line_no, key_col, "unknown key '" + std::string(key) + "'");
    if (!seen.insert(field->key).second) {
      throw ParseError(line_no, key_col, "duplicate key '" + std::string(key) + "'");
    }
    if (value.empty()) {
      throw ParseError(line_no, value_col, "missing value for '" + std::string(key) + "'");
    }
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (is_space(value[i])) {
        throw ParseError(line_no, value_col + i,
                         "unexpected whitespace in value of '" + std::string(key) + "'");
      }
    }

    std::string expected;
    const bool ok = std::visit(
        Overloaded{
            [&](double* out) {
              expected = "a real number";
              return parse_real(value, *out);
            },
            [&](CountSlot out) {
              expected = "a non-negative integer";
              return parse_integer(value, *out.value);
            },
            [&](SeedSlot out) {
              expected = "an unsigned 64-bit integer";
              return parse_integer(value, *out.value);
            },
            [&](NoiseKind* out) {
              expected = "one of none, gaussian, uniform";
              auto kind = parse_noise_kind(value);
              if (kind) *out = *kind;
              return kind.has_value();
            },
            [&](std::string* out) {
              *out = std::string(value);
              return true;
            },
        },
        field->slot(config));
    if (!ok) {
      throw ParseError(line_no, value_col,
                       "value of '" + std::string(key) + "' must be " + expected);
    }
  }
  validate_config(config);
  return config;
}

void validate_config(const SimConfig& c) {
  SimConfig copy = c;
  for (const auto& f : fields()) {
    Slot slot = f.slot(copy);
    if (auto* value = std::get_if<double*>(&slot)) {
      require(std::isfinite(**value), f.key, "must be finite");
    }
  }
  require(c.channel.noise.spread >= 0.0, "noise_spread", ">= 0");
  require(std::abs(c.channel.feedback_gain) < 1.0, "feedback_gain", "|g| < 1");
  const ReceptorSpec* receptor = find_receptor(c.stimulus.receptor);
  require(receptor != nullptr, "receptor", "must name a catalog receptor");
  const auto& p = c.stimulus.params;
  require(p.amplitude >= 0.0, "amplitude", ">= 0");
  require(p.duration_s > 0.0, "duration_s", "> 0");
  require(p.adaptation_tau_s > 0.0, "adaptation_tau_s", "> 0");
  require(p.mixed_floor > 0.0 && p.mixed_floor <= 1.0, "mixed_floor", "in (0, 1]");
  if (receptor->band_hz) {
    const Band& band = *receptor->band_hz;
    require(band.contains(p.frequency_hz), "frequency_hz",
            "in [" + format_double(band.low_hz) + ", " + format_double(band.high_hz) + "] Hz for " +
                receptor->id);
  }
  require(c.dt > 0.0, "dt", "> 0");
  require(c.max_ticks >= 1, "max_ticks", ">= 1");
}

std::string format_config(const SimConfig& config) {
  std::ostringstream os;
  SimConfig copy = config;
  for (const auto& f : fields()) {
    os << f.key << " = ";
    std::visit(Overloaded{
                   [&](double* v) { os << format_double(*v); },
                   [&](CountSlot v) { os << *v.value; },
                   [&](SeedSlot v) { os << *v.value; },
                   [&](NoiseKind* v) { os << to_string(*v); },
                   [&](std::string* v) { os << *v; },
               },
               f.slot(copy));
    os << '\n';
  }
  return os.str();
}

Series make_stimulus(const SimConfig& config) {
  validate_config(config);
  return synthesize(*find_receptor(config.stimulus.receptor), config.stimulus.params, config.dt);
}

SessionTrace run_session(const SimConfig& config) {
  Series stimulus = make_stimulus(config);
  ChannelConfig channel = config.channel;
  channel.noise.seed = config.seed;
  SessionTrace trace = simulate_end_to_end(stimulus, config.thresholds, channel,
                                           config.max_ticks, config.coefficients);
  const auto& p = config.stimulus.params;
  trace.header.emplace_back("receptor", config.stimulus.receptor);
  trace.header.emplace_back("amplitude", p.amplitude);
  trace.header.emplace_back("frequency_hz", p.frequency_hz);
  trace.header.emplace_back("duration_s", p.duration_s);
  trace.header.emplace_back("adaptation_tau_s", p.adaptation_tau_s);
  trace.header.emplace_back("mixed_floor", p.mixed_floor);
  return trace;
}

}  // namespace mlsim
