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

#include <string>

#include "oracles.hpp"
#include "qdiadd/error.hpp"
#include "qdiadd/generators.hpp"
#include "qdiadd/netlist.hpp"

namespace qdiadd {
namespace {

Netlist one_gate() {
  Netlist n("one");
  const auto a1 = n.net("a.1"), a0 = n.net("a.0");
  const auto b1 = n.net("b.1"), b0 = n.net("b.0");
  n.add_input("a", a1, a0);
  n.add_input("b", b1, b0);
  const auto y1 = n.net("y.1"), y0 = n.net("y.0");
  n.add_gate("g1", CellKind::AO22, {a1, b1, a0, b0}, y1);
  n.add_gate("g0", CellKind::AO22, {a1, b0, a0, b1}, y0);
  n.add_output("y", y1, y0);
  return n;
}

TEST(ValidateTest, GeneratedDesignsAreValid) {
  for (const auto& n : {gen_full_adder_eo(), gen_sol_eo(), gen_rca(4),
                        gen_scbclg(4, false), gen_scbclg(4, true),
                        gen_scbcla(32, 4, false), gen_scbcla(32, 4, true),
                        gen_scbcla_rca_hybrid(32, 4, true, 4),
                        gen_rcla(32, 4), gen_rcla_rca_hybrid(32, 4, 4),
                        gen_completion_detector(33)}) {
    const auto r = validate(n);
    EXPECT_TRUE(r.ok()) << n.name() << "\n" << r.to_text();
  }
}

TEST(ValidateTest, MultipleDrivers) {
  auto n = one_gate();
  n.add_gate("dup", CellKind::AND2, {n.net("a.1"), n.net("b.1")}, n.net("y.1"));
  const auto r = validate(n);
  EXPECT_EQ(r.count(ViolationKind::MultipleDrivers), 1u);
  EXPECT_EQ(r.violations.size(), 1u);
}

TEST(ValidateTest, ArityMismatch) {
  auto n = one_gate();
  n.add_gate("bad", CellKind::AND2,
             {n.net("a.1"), n.net("b.1"), n.net("a.0")}, n.net("z"));
  const auto r = validate(n);
  EXPECT_EQ(r.count(ViolationKind::ArityMismatch), 1u);
  EXPECT_EQ(r.violations.size(), 1u);
}

TEST(ValidateTest, UndrivenAndCycle) {
  Netlist n("bad");
  const auto x = n.net("x"), y = n.net("y");
  n.add_gate("g", CellKind::OR2, {x, n.net("floating")}, y);
  n.add_gate("h", CellKind::BUF, {y}, x);
  n.add_output("o", x, y);
  const auto r = validate(n);
  EXPECT_GE(r.count(ViolationKind::Undriven), 1u);
  EXPECT_EQ(r.count(ViolationKind::Cycle), 1u);
  EXPECT_THROW(topological_gate_order(n), InvalidNetlistError);
  EXPECT_THROW(static_longest_path(n, unit_delay_table()),
               InvalidNetlistError);
}

TEST(ValidateTest, UnusedAliasCarryIsOnlyANote) {
  const auto r = validate(gen_scbcla(32, 4, true));
  EXPECT_TRUE(r.ok());
  EXPECT_FALSE(r.notes.empty());
}

TEST(NetlistTextTest, RoundTripIsStructurallyEqual) {
  for (const auto& n : {gen_full_adder_eo(), gen_scbclg(4, true),
                        gen_scbcla_rca_hybrid(32, 4, true, 4),
                        gen_rcla(8, 4), gen_completion_detector(5)}) {
    const auto text = emit_netlist(n);
    const auto back = parse_netlist(text);
    EXPECT_TRUE(structurally_equal(n, back, true)) << n.name();
    EXPECT_EQ(emit_netlist(back), text) << n.name();
  }
}

TEST(NetlistTextTest, GrammarCase) {
  const auto n = parse_netlist(
      "module m\ninput p a b\ninput q c d\ngate g1 AO22 y a b c d\n"
      "output r y d\nend\n");
  ASSERT_EQ(n.gates().size(), 1u);
  EXPECT_EQ(n.gates()[0].kind, CellKind::AO22);
  EXPECT_EQ(n.net_name(n.gates()[0].output), "y");
}

TEST(NetlistTextTest, WhitespaceAndCommentsAreTolerated) {
  const auto a = parse_netlist(
      "# header\nmodule m\n\ninput  p a b\n   gate g1 AND2 y a b  \n"
      "output r y b\nend\n");
  const auto b =
      parse_netlist("module m\ninput p a b\ngate g1 AND2 y a b\noutput r y b\nend");
  EXPECT_TRUE(structurally_equal(a, b, true));
}

void expect_parse_error(const std::string& text, int line,
                        const std::string& fragment) {
  try {
    parse_netlist(text);
    FAIL() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos)
        << e.what();
  }
}

TEST(NetlistTextTest, Errors) {
  expect_parse_error("module m\ninput p a b\ngate g1 AO22 y a b c\nend\n", 3,
                     "expects 4 inputs");
  expect_parse_error("module m\nwire x\nend\n", 2, "directive");
  expect_parse_error("module m\ninput p a b\ngate g1 AND2 y a zz\nend\n", 3,
                     "zz");
  expect_parse_error("module m\ninput p a b$\nend\n", 2, "invalid net name");
  expect_parse_error("module m\ninput p a b\n", 2, "end");
  expect_parse_error("module m\nend\ninput p a b\n", 3, "after");
  expect_parse_error("module m\ngate g1 FOO y a b\nend\n", 2, "FOO");
}

TEST(StructuralEqualityTest, DetectsKindAndWiringChanges) {
  const auto a = gen_full_adder_eo();
  auto b = a;
  EXPECT_TRUE(structurally_equal(a, b));
  b.mutable_gate(0).kind = CellKind::ALIAS;
  EXPECT_FALSE(structurally_equal(a, b));
  auto c = a;
  std::swap(c.mutable_gate(2).inputs[0], c.mutable_gate(2).inputs[2]);
  EXPECT_FALSE(structurally_equal(a, c));
}

TEST(StructuralEqualityTest, OneBitRcaIsTheFullAdder) {
  EXPECT_TRUE(structurally_equal(gen_rca(1), gen_full_adder_eo()));
}

TEST(LongestPathTest, SingleGate) {
  const auto p = static_longest_path(one_gate(), unit_delay_table());
  EXPECT_DOUBLE_EQ(p.depth, 1.0);
  EXPECT_EQ(p.kinds, std::vector<CellKind>{CellKind::AO22});
}

TEST(LongestPathTest, RcaFiveAo22) {
  const auto p = static_longest_path(gen_rca(4), unit_delay_table());
  EXPECT_DOUBLE_EQ(p.depth, 5.0);
  EXPECT_EQ(p.census, (KindCounts{{CellKind::AO22, 5}}));
  EXPECT_EQ(p.kinds.size(), p.gate_ids.size());
}

TEST(LongestPathTest, AgreesWithDfsOracle) {
  for (const auto& n : {gen_full_adder_eo(), gen_rca(4), gen_scbclg(4, false),
                        gen_scbclg(4, true), gen_scbcla(32, 4, false),
                        gen_scbcla(32, 4, true),
                        gen_scbcla_rca_hybrid(32, 4, false, 4),
                        gen_rcla(32, 4), gen_rcla_rca_hybrid(32, 4, 4)}) {
    const auto p = static_longest_path(n, unit_delay_table());
    EXPECT_EQ(p.depth, testing::dfs_longest_path(n)) << n.name();
    EXPECT_EQ(static_cast<double>(p.kinds.size()), p.depth) << n.name();
  }
}

TEST(LongestPathTest, DepthIsSumOfGateDelays) {
  auto table = unit_delay_table();
  for (auto k : kAllCellKinds) table[static_cast<std::size_t>(k)] = 0.5;
  table[static_cast<std::size_t>(CellKind::AO22)] = 1.5;
  const auto p = static_longest_path(gen_scbcla(8, 4, true), table);
  double sum = 0;
  for (auto k : p.kinds) sum += delay_of(table, k);
  EXPECT_DOUBLE_EQ(p.depth, sum);
}

TEST(LongestPathTest, AliasShorterThanPlain) {
  const auto plain = static_longest_path(gen_scbcla(32, 4, false), unit_delay_table());
  const auto alias = static_longest_path(gen_scbcla(32, 4, true), unit_delay_table());
  EXPECT_LT(alias.depth, plain.depth);
}

TEST(LongestPathTest, BetweenNets) {
  const auto n = gen_scbclg(4, true);
  const auto cin1 = *n.find_net("cin.1");
  const NetId from[] = {cin1};
  const NetId to_primary[] = {n.find_output("c4")->rail1};
  const NetId to_alias[] = {n.find_output("c4alias")->rail1};
  const auto p = longest_path_between(n, from, to_primary, unit_delay_table());
  EXPECT_EQ(p.census, (KindCounts{{CellKind::C2, 1}, {CellKind::OR2, 1}}));
  const auto q = longest_path_between(n, from, to_alias, unit_delay_table());
  EXPECT_EQ(q.census, (KindCounts{{CellKind::ALIAS, 1}}));
  const NetId wrong[] = {n.find_output("c4")->rail0};
  EXPECT_LT(longest_path_between(n, from, wrong, unit_delay_table()).depth, 0);
}

TEST(CensusTest, FullAdderAndAliasDelta) {
  const auto fa = gate_census(gen_full_adder_eo());
  EXPECT_EQ(fa.counts, (KindCounts{{CellKind::AO22, 6}}));
  EXPECT_EQ(fa.transistors, 60);
  const auto d = census_difference(gate_census(gen_scbclg(4, true)),
                                   gate_census(gen_scbclg(4, false)));
  EXPECT_EQ(d, (KindCounts{{CellKind::ALIAS, 2}}));
}

TEST(CensusTest, TransistorTotalIsWeightedSum) {
  const auto c = gate_census(gen_rcla(32, 4));
  long sum = 0;
  int gates = 0;
  for (const auto& [k, n] : c.counts) {
    sum += static_cast<long>(n) * cell_spec(k).transistors;
    gates += n;
  }
  EXPECT_EQ(c.transistors, sum);
  EXPECT_EQ(c.gates, gates);
}

}  // namespace
}  // namespace qdiadd
