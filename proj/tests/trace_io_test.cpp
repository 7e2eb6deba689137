#include <gtest/gtest.h>

#include "mlsim/config.hpp"
#include "mlsim/trace_io.hpp"
#include "oracles.hpp"

using namespace mlsim;

namespace {

SessionTrace sample_trace(std::uint64_t seed, std::size_t ticks) {
  SimConfig c;
  c.channel.noise = {NoiseKind::Gaussian, 0.05, 0.3, 0};
  c.channel.feedback_gain = 0.2;
  c.seed = seed;
  c.max_ticks = ticks;
  c.thresholds = {0.4, 0.4, 0.4};
  return run_session(c);
}

std::size_t count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST(WriteTrace, EmptyCsvIsHeaderOnly) {
  EXPECT_EQ(trace_to_string(SessionTrace{}, TraceFormat::Csv),
            "tick,h,s,m,v,r,gates,symbol,state_before,state_after,emitted,wait\n");
}

TEST(WriteTrace, JsonlHasHeaderPlusOneObjectPerRow) {
  auto t = sample_trace(1, 3);
  ASSERT_EQ(t.rows.size(), 3u);
  auto text = trace_to_string(t, TraceFormat::Jsonl);
  EXPECT_EQ(count_lines(text), 4u);
  EXPECT_EQ(text.rfind("{\"header\":{\"artifact_version\"", 0), 0u);
}

TEST(WriteTrace, DeterministicBytes) {
  auto t = sample_trace(3, 200);
  for (auto f : {TraceFormat::Csv, TraceFormat::Jsonl}) {
    EXPECT_EQ(trace_to_string(t, f), trace_to_string(t, f));
  }
}

TEST(WriteTrace, CsvUsesLfAndDotDecimal) {
  auto text = trace_to_string(sample_trace(4, 50), TraceFormat::Csv);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(count_lines(text), 51u);
  EXPECT_EQ(text.back(), '\n');
}

TEST(TraceRoundTrip, CsvAndJsonlLossless) {
  oracle::Gen gen(77);
  for (int i = 0; i < 30; ++i) {
    auto t = sample_trace(gen.u64(), 1 + gen.index(300));
    auto csv = read_trace_csv(trace_to_string(t, TraceFormat::Csv));
    EXPECT_EQ(csv.rows, t.rows);
    EXPECT_EQ(csv.accepted, t.accepted);
    EXPECT_EQ(csv.reached_final, t.reached_final);
    auto jsonl = read_trace_jsonl(trace_to_string(t, TraceFormat::Jsonl));
    EXPECT_EQ(jsonl, t);
  }
}

TEST(TraceRoundTrip, ExtremeDoubles) {
  SessionTrace t;
  TraceRow row;
  row.h = 5e-324;
  row.s = -0.0;
  row.m = 1.7976931348623157e308;
  row.v = 0.1;
  row.r = 1.0 / 3.0;
  row.gates = parse_gates("PF--");
  t.rows = {row};
  EXPECT_EQ(read_trace_csv(trace_to_string(t, TraceFormat::Csv)).rows, t.rows);
  EXPECT_EQ(read_trace_jsonl(trace_to_string(t, TraceFormat::Jsonl)).rows, t.rows);
}

TEST(ParseCsv, QuotingRules) {
  auto rows = parse_csv("a,\"b,c\",\"d\"\"e\"\n\"multi\nline\",,\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"a", "b,c", "d\"e"}));
  EXPECT_EQ(rows[1], (std::vector<std::string>{"multi\nline", "", ""}));
  EXPECT_THROW(parse_csv("\"open"), ParseError);
  EXPECT_THROW(parse_csv("ab\"c\n"), ParseError);
}

TEST(ReadTrace, RejectsMalformedInput) {
  EXPECT_THROW(read_trace_csv(""), ParseError);
  EXPECT_THROW(read_trace_csv("tick,h\n"), ParseError);
  const std::string head = "tick,h,s,m,v,r,gates,symbol,state_before,state_after,emitted,wait\n";
  EXPECT_THROW(read_trace_csv(head + "0,1,1,1,1,4,PPPP,d2,S,MS,O1\n"), ParseError);
  EXPECT_THROW(read_trace_csv(head + "0,x,1,1,1,4,PPPP,d2,S,MS,O1,false\n"), ParseError);
  EXPECT_THROW(read_trace_csv(head + "0,1,1,1,1,4,PPXP,d2,S,MS,O1,false\n"), ParseError);
  EXPECT_THROW(read_trace_csv(head + "0,1,1,1,1,4,PPPP,d2,Q,MS,O1,false\n"), ParseError);
  EXPECT_THROW(read_trace_csv(head + "0,1,1,1,1,4,PPPP,d2,S,MS,O1,maybe\n"), ParseError);
  EXPECT_THROW(read_trace_jsonl(""), ParseError);
  EXPECT_THROW(read_trace_jsonl("{\"tick\":0}\n"), ParseError);
  EXPECT_THROW(read_trace_jsonl("{\"header\":{}}\n{\"tick\":0}\n"), ParseError);
  EXPECT_THROW(read_trace_jsonl("not json\n"), ParseError);
}

TEST(TraceSelfConsistency, IndependentReaderChecksEveryRow) {
  // Machine from its text form only; rows from the raw CSV fields.
  const auto machine = parse_machine(format_machine(build_mlp_machine()));
  auto text = trace_to_string(sample_trace(9, 500), TraceFormat::Csv);
  auto records = parse_csv(text);
  ASSERT_EQ(records.size(), 501u);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& f = records[i];
    EXPECT_EQ(machine.transitions.at({f[8], f[7]}), f[9]);
    EXPECT_EQ(machine.outputs.at(f[9]), f[10]);
  }
}
