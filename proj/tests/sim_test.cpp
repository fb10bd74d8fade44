// Copyright 2026 The qdiadd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "qdiadd/error.hpp"
#include "qdiadd/generators.hpp"
#include "qdiadd/netlist.hpp"
#include "qdiadd/sim.hpp"

namespace qdiadd {
namespace {

constexpr auto kOne = DualRail::One;
constexpr auto kZero = DualRail::Zero;
constexpr auto kNull = DualRail::Null;

// y = BUF(a); probe p hangs off a.1 through `tail` buffers.
Netlist buffer_with_probe(int tail) {
  Netlist n("bufp");
  const auto a1 = n.net("a.1"), a0 = n.net("a.0");
  n.add_input("a", a1, a0);
  const auto y1 = n.net("y.1"), y0 = n.net("y.0");
  n.add_gate("g1", CellKind::BUF, {a1}, y1);
  n.add_gate("g0", CellKind::BUF, {a0}, y0);
  NetId prev = a1;
  for (int i = 0; i < tail; ++i) {
    const auto next = n.net("t" + std::to_string(i));
    n.add_gate("tb" + std::to_string(i), CellKind::BUF, {prev}, next);
    prev = next;
  }
  n.add_probe("p", prev);
  n.add_output("y", y1, y0);
  return n;
}

TEST(SimulatorTest, FullAdderCompletesAtTwo) {
  const auto fa = gen_full_adder_eo();
  Simulator sim(fa, DelayModel::unit(), default_monitors(fa));
  const DualRail data[] = {kOne, kZero, kOne};
  const auto t = sim.run_phase(Phase::Data, data);
  EXPECT_TRUE(t.completed);
  EXPECT_DOUBLE_EQ(t.completion_time, 2.0);
  EXPECT_FALSE(t.has_errors());
  EXPECT_EQ(sim.output(fa.find_output("sum") - fa.outputs().data()), kZero);
  EXPECT_EQ(sim.output(fa.find_output("cout") - fa.outputs().data()), kOne);
  const DualRail spacer[] = {kNull, kNull, kNull};
  const auto r = sim.run_phase(Phase::Rtz, spacer);
  EXPECT_TRUE(r.completed);
  EXPECT_LE(r.completion_time, 2.0);
  for (std::size_t i = 0; i < fa.outputs().size(); ++i) {
    EXPECT_EQ(sim.output(i), kNull);
  }
}

TEST(SimulatorTest, RcaWorstCaseIsTheCarryChain) {
  const auto rca = gen_rca(4);
  const auto vectors = exhaustive_vectors(4);
  const auto results = run_handshake_cycles(rca, vectors, DelayModel::unit(),
                                            default_monitors(rca));
  const auto s = summarize(results);
  EXPECT_EQ(s.cycles, vectors.size());
  EXPECT_DOUBLE_EQ(s.worst_data_latency, 5.0);
  EXPECT_EQ(s.error_findings, 0u);
  for (const auto& r : results) {
    ASSERT_TRUE(r.sum && r.cout);
    const auto total = r.input.a + r.input.b + r.input.cin;
    EXPECT_EQ(*r.sum, total & 15);
    EXPECT_EQ(*r.cout, (total >> 4) != 0);
  }
  // Carry ripples through every bit: a=1111, b=0000.
  const AdderVector ripple[] = {{0xf, 0x0, true}};
  EXPECT_DOUBLE_EQ(run_handshake_cycles(rca, ripple, DelayModel::unit(),
                                        default_monitors(rca))[0]
                       .data_latency,
                   5.0);
  // All bits generate: outputs settle after the local carry.
  const AdderVector local[] = {{0xf, 0xf, true}};
  EXPECT_LT(run_handshake_cycles(rca, local, DelayModel::unit(),
                                 default_monitors(rca))[0]
                .data_latency,
            5.0);
}

TEST(SimulatorTest, RandomDelaysAreDeterministic) {
  const auto n = gen_scbcla(16, 4, true);
  const auto vectors = random_vectors(16, 64, 3);
  const auto run = [&](std::uint64_t seed) {
    return run_handshake_cycles(n, vectors, DelayModel::random(seed),
                                default_monitors(n));
  };
  const auto a = run(11), b = run(11), c = run(12);
  ASSERT_EQ(a.size(), b.size());
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].data_latency, b[i].data_latency);
    EXPECT_EQ(a[i].transitions, b[i].transitions);
    differs = differs || a[i].data_latency != c[i].data_latency;
  }
  EXPECT_TRUE(differs);
}

TEST(SimulatorTest, RandomDelaysStayInRange) {
  const auto n = gen_rcla(8, 4);
  const auto d = DelayModel::random(5, 0.25, 0.75).assign(n);
  ASSERT_EQ(d.size(), n.gates().size());
  for (double x : d) {
    EXPECT_GE(x, 0.25);
    EXPECT_LE(x, 0.75);
  }
}

TEST(SimulatorTest, TableDelays) {
  auto table = unit_delay_table();
  table[static_cast<std::size_t>(CellKind::AO22)] = 1.5;
  const auto fa = gen_full_adder_eo();
  Simulator sim(fa, DelayModel::from_table(table), default_monitors(fa));
  const DualRail data[] = {kOne, kOne, kZero};
  EXPECT_DOUBLE_EQ(sim.run_phase(Phase::Data, data).completion_time, 3.0);
  table[0] = 0.0;
  EXPECT_THROW(DelayModel::from_table(table).check(), ConfigError);
  EXPECT_THROW(DelayModel::random(1, 0.0, 1.0).check(), ConfigError);
  EXPECT_THROW(DelayModel::random(1, 2.0, 1.0).check(), ConfigError);
}

TEST(MonitorTest, InvalidPair) {
  Netlist n("inv");
  const auto a1 = n.net("a.1"), a0 = n.net("a.0");
  n.add_input("a", a1, a0);
  const auto y1 = n.net("y.1"), y0 = n.net("y.0");
  n.add_gate("g1", CellKind::BUF, {a1}, y1);
  n.add_gate("g0", CellKind::BUF, {a1}, y0);
  n.add_output("y", y1, y0);
  Simulator sim(n, DelayModel::unit(), default_monitors(n));
  const DualRail data[] = {kOne};
  const auto t = sim.run_phase(Phase::Data, data);
  EXPECT_EQ(t.count(FindingKind::InvalidPair), 1u);
  EXPECT_TRUE(t.has_errors());
}

TEST(MonitorTest, NonMonotonic) {
  Netlist n("nm");
  const auto a1 = n.net("a.1"), a0 = n.net("a.0");
  n.add_input("a", a1, a0);
  const auto x = n.net("x"), y1 = n.net("y.1"), y0 = n.net("y.0");
  n.add_gate("i", CellKind::INV, {a1}, x);
  n.add_gate("g1", CellKind::AND2, {x, a0}, y0);
  n.add_gate("g0", CellKind::BUF, {a1}, y1);
  n.add_output("y", y1, y0);
  Simulator sim(n, DelayModel::unit(), default_monitors(n));
  const DualRail data[] = {kOne};
  const auto t = sim.run_phase(Phase::Data, data);
  EXPECT_GE(t.count(FindingKind::NonMonotonic), 1u);
}

TEST(MonitorTest, Deadlock) {
  Netlist n("dl");
  const auto a1 = n.net("a.1"), a0 = n.net("a.0");
  const auto b1 = n.net("b.1"), b0 = n.net("b.0");
  n.add_input("a", a1, a0);
  n.add_input("b", b1, b0);
  const auto y1 = n.net("y.1"), y0 = n.net("y.0");
  n.add_gate("g1", CellKind::C2, {a1, b1}, y1);
  n.add_gate("g0", CellKind::C2, {a0, b0}, y0);
  n.add_output("y", y1, y0);
  Simulator sim(n, DelayModel::unit(), default_monitors(n));
  const DualRail data[] = {kOne, kZero};
  const auto t = sim.run_phase(Phase::Data, data);
  EXPECT_FALSE(t.completed);
  EXPECT_EQ(t.count(FindingKind::Deadlock), 1u);
  EXPECT_EQ(t.stuck_outputs, std::vector<std::string>{"y"});
}

TEST(MonitorTest, UnacknowledgedProbe) {
  const auto slow = buffer_with_probe(3);
  Simulator sim(slow, DelayModel::unit(), default_monitors(slow));
  const DualRail data[] = {kOne};
  EXPECT_EQ(sim.run_phase(Phase::Data, data).count(
                FindingKind::UnacknowledgedProbe),
            1u);
  const auto none = buffer_with_probe(0);
  Simulator ok(none, DelayModel::unit(), default_monitors(none));
  EXPECT_FALSE(ok.run_phase(Phase::Data, data).has_errors());
  auto off = default_monitors(slow);
  off.probe_acknowledgment = false;
  Simulator quiet(slow, DelayModel::unit(), off);
  EXPECT_FALSE(quiet.run_phase(Phase::Data, data).has_errors());
}

TEST(MonitorTest, AliasRaceIsInformational) {
  const auto g = gen_scbclg(4, true);
  ASSERT_EQ(default_race_watches(g).size(), 1u);
  EXPECT_TRUE(default_race_watches(gen_scbclg(4, false)).empty());
  std::size_t races = 0;
  const auto vectors = random_vectors(4, 16, 9);
  for (std::uint64_t seed = 1; seed <= 200 && races == 0; ++seed) {
    const auto results = run_handshake_cycles(g, vectors,
                                              DelayModel::random(seed),
                                              default_monitors(g));
    for (const auto& r : results) {
      EXPECT_FALSE(r.has_errors());
      races += r.race_observed;
    }
  }
  EXPECT_GT(races, 0u);
}

TEST(SimulatorTest, PhaseTargetErrors) {
  const auto fa = gen_full_adder_eo();
  Simulator sim(fa, DelayModel::unit(), default_monitors(fa));
  const DualRail bad[] = {DualRail::Invalid, kOne, kOne};
  EXPECT_THROW(sim.run_phase(Phase::Data, bad), SimulationError);
  const DualRail short_list[] = {kOne};
  EXPECT_THROW(sim.run_phase(Phase::Data, short_list), SimulationError);
  const DualRail data[] = {kOne, kOne, kOne};
  sim.run_phase(Phase::Data, data);
  const DualRail flip[] = {kZero, kNull, kNull};
  EXPECT_THROW(sim.run_phase(Phase::Rtz, flip), SimulationError);
  const DualRail other[] = {kZero, kOne, kOne};
  EXPECT_THROW(sim.run_phase(Phase::Data, other), SimulationError);
}

TEST(SimulatorTest, SimulatePhaseCarriesState) {
  const auto fa = gen_full_adder_eo();
  std::vector<std::uint8_t> state(fa.net_count(), 0);
  const DualRail data[] = {kZero, kOne, kOne};
  auto t = simulate_phase(fa, state, data, Phase::Data, DelayModel::unit(),
                          default_monitors(fa));
  EXPECT_TRUE(t.completed);
  EXPECT_TRUE(state[fa.find_output("cout")->rail1]);
  const DualRail spacer[] = {kNull, kNull, kNull};
  t = simulate_phase(fa, state, spacer, Phase::Rtz, DelayModel::unit(),
                     default_monitors(fa));
  EXPECT_TRUE(t.completed);
  EXPECT_TRUE(std::all_of(state.begin(), state.end(),
                          [](auto v) { return v == 0; }));
}

TEST(SimulatorTest, InvalidNetlistIsRejected) {
  Netlist n("bad");
  n.add_input("a", n.net("a.1"), n.net("a.0"));
  n.add_output("y", n.net("y.1"), n.net("a.0"));
  EXPECT_THROW(Simulator(n, DelayModel::unit(), {}), InvalidNetlistError);
}

TEST(HandshakeTest, EmptyVectorList) {
  const auto n = gen_rca(2);
  const auto r = run_handshake_cycles(n, {}, DelayModel::unit(),
                                      default_monitors(n));
  EXPECT_TRUE(r.empty());
  EXPECT_EQ(summarize(r).cycles, 0u);
}

TEST(HandshakeTest, OperandTooWide) {
  const auto n = gen_rca(2);
  const AdderVector v[] = {{1, 0, false}, {4, 0, false}};
  try {
    run_handshake_cycles(n, v, DelayModel::unit(), default_monitors(n));
    FAIL();
  } catch (const SimulationError& e) {
    EXPECT_NE(std::string(e.what()).find("vector 1"), std::string::npos);
  }
}

TEST(HandshakeTest, PortResolution) {
  const auto p = resolve_adder_ports(gen_scbcla(8, 4, false));
  EXPECT_EQ(p.width, 8);
  EXPECT_EQ(p.sum.size(), 8u);
  EXPECT_TRUE(p.cout.has_value());
  EXPECT_FALSE(p.cout_alias.has_value());
  const auto g = resolve_adder_ports(gen_scbclg(4, true));
  EXPECT_TRUE(g.sum.empty());
  EXPECT_TRUE(g.cout && g.cout_alias);
  EXPECT_EQ(resolve_adder_ports(gen_full_adder_eo()).width, 1);
  EXPECT_THROW(resolve_adder_ports(gen_completion_detector(3)),
               SimulationError);
}

TEST(VectorFileTest, RoundTrip) {
  const auto v = random_vectors(12, 50, 4);
  const auto text = emit_vectors(v, 12);
  EXPECT_EQ(text.substr(0, text.find('\n')).size(), 9u);
  EXPECT_EQ(parse_vectors(text), v);
}

TEST(VectorFileTest, Syntax) {
  const auto v = parse_vectors("# header\n\n0xFF, 01 ,1\r\n  3,4,0  \n");
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], (AdderVector{0xff, 1, true}));
  EXPECT_EQ(v[1], (AdderVector{3, 4, false}));
  const auto line_of = [](const char* text) {
    try {
      parse_vectors(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("1,2,0\n1,2\n"), 2);
  EXPECT_EQ(line_of("1,2,0\n1,2,3,4\n"), 2);
  EXPECT_EQ(line_of("#\n1,zz,0\n"), 2);
  EXPECT_EQ(line_of("1,2,2\n"), 1);
  EXPECT_EQ(line_of("1,2,0\n"), -1);
}

TEST(VectorGenTest, Exhaustive) {
  const auto v = exhaustive_vectors(2);
  ASSERT_EQ(v.size(), 32u);
  EXPECT_EQ(v[0], (AdderVector{0, 0, false}));
  EXPECT_EQ(v[1], (AdderVector{1, 0, false}));
  EXPECT_EQ(v[4], (AdderVector{0, 1, false}));
  EXPECT_EQ(v[16], (AdderVector{0, 0, true}));
  EXPECT_THROW(exhaustive_vectors(13), ConfigError);
  EXPECT_THROW(random_vectors(0, 1, 1), ConfigError);
}

TEST(VectorGenTest, RandomIsSeededAndMasked) {
  EXPECT_EQ(random_vectors(7, 20, 2), random_vectors(7, 20, 2));
  EXPECT_NE(random_vectors(7, 20, 2), random_vectors(7, 20, 3));
  for (const auto& v : random_vectors(7, 200, 2)) {
    EXPECT_LT(v.a, 128u);
    EXPECT_LT(v.b, 128u);
  }
}

TEST(TraceTest, CsvListsEveryEvent) {
  const auto fa = gen_full_adder_eo();
  auto mon = default_monitors(fa);
  mon.record_events = true;
  Simulator sim(fa, DelayModel::unit(), mon);
  const DualRail data[] = {kOne, kOne, kZero};
  const auto t = sim.run_phase(Phase::Data, data);
  ASSERT_FALSE(t.events.empty());
  EXPECT_EQ(t.events.size(), t.transitions);
  EXPECT_TRUE(std::is_sorted(
      t.events.begin(), t.events.end(),
      [](const Event& x, const Event& y) { return x.time < y.time; }));
  const auto csv = trace_to_csv(fa, t);
  EXPECT_EQ(csv.rfind("time,net,value\n", 0), 0u);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')),
            t.events.size() + 1);
  EXPECT_NE(csv.find("0,a.1,1\n"), std::string::npos);
}

}  // namespace
}  // namespace qdiadd
