#include "mlsim/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>
#include <utility>

namespace mlsim {

namespace {

double checked_sum(const char* stage, std::initializer_list<double> operands) {
  double total = 0.0;
  bool first = true;
  for (double x : operands) {
    if (!std::isfinite(x)) throw NonFiniteInput(std::string("non-finite operand in ") + stage);
    total = first ? x : total + x;
    first = false;
  }
  return total;
}

}  // namespace

double cumulative_reception(const StageSamples& p) {
  return checked_sum("H", {p.h_s, p.h_j, p.h_m});
}

double medulla_synapse(const StageSamples& p) { return checked_sum("S", {p.s_gf, p.s_cf}); }

double secondary_afferent(const StageSamples& p) {
  return checked_sum("M", {p.a_bs, p.t_t, p.t_c, p.t_p});
}

double vpl_potential(const StageSamples& p) { return checked_sum("V", {p.v_v, p.v_t}); }

Reception reception(double h, double s, double m, double v) {
  double r = checked_sum("R", {h, s, m, v});
  return {r, r != 0.0};
}

bool GateRecord::all_passed() const noexcept {
  for (auto v : verdicts) {
    if (v != GateVerdict::Pass) return false;
  }
  return true;
}

GateRecord evaluate_gates(double h, double s, double m, double v, const Thresholds& th) {
  GateRecord record;
  const std::array<std::pair<double, double>, 4> checks{
      {{h, th.h_th}, {s, th.s_th}, {m, 0.0}, {v, th.v_th}}};
  for (std::size_t i = 0; i < checks.size(); ++i) {
    bool ok = checks[i].first > checks[i].second;
    record.verdicts[i] = ok ? GateVerdict::Pass : GateVerdict::Fail;
    if (!ok) break;
  }
  return record;
}

PipelineResult run_pipeline(const SampleProvider& source, const Thresholds& th,
                            std::size_t max_iterations) {
  if (max_iterations == 0) throw InvalidParams("max_iterations must be at least 1");
  if (!std::isfinite(th.h_th) || !std::isfinite(th.s_th) || !std::isfinite(th.v_th)) {
    throw NonFiniteInput("non-finite threshold");
  }
  PipelineResult result;
  result.gate_trace.reserve(std::min<std::size_t>(max_iterations, 1024));

  for (std::size_t pass = 0; pass < max_iterations; ++pass) {
    auto samples = source();
    if (!samples) throw ExhaustedSource("sample provider exhausted at pass " + std::to_string(pass));
    ++result.iterations;

    GateRecord record;
    double h = 0.0, s = 0.0, m = 0.0, v = 0.0;
    // Forward on pass: each gate is reached only when the previous one passed.
    auto gate = [&](Gate g, double value, double threshold) {
      ++result.stage_evaluations;
      bool ok = value > threshold;
      record.verdicts[static_cast<std::size_t>(g)] = ok ? GateVerdict::Pass : GateVerdict::Fail;
      return ok;
    };
    bool through = gate(Gate::H, h = cumulative_reception(*samples), th.h_th) &&
                   gate(Gate::S, s = medulla_synapse(*samples), th.s_th) &&
                   gate(Gate::M, m = secondary_afferent(*samples), 0.0) &&
                   gate(Gate::V, v = vpl_potential(*samples), th.v_th);
    result.gate_trace.push_back(record);

    auto rec = reception(h, s, m, v);
    result.h = h;
    result.s = s;
    result.m = m;
    result.v = v;
    result.r = rec.r;
    if (through) {
      result.accepted = rec.accepted;
      return result;
    }
  }
  return result;
}

}  // namespace mlsim
