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
#include <vector>

#include "oracles.hpp"
#include "qdiadd/generators.hpp"
#include "qdiadd/metrics.hpp"
#include "qdiadd/netlist.hpp"
#include "qdiadd/sim.hpp"
#include "qdiadd/verify.hpp"

namespace qdiadd {
namespace {

struct Design {
  std::string name;
  AdderConfig config;
};

std::vector<Design> small_designs() {
  std::vector<Design> out;
  auto add = [&](std::string name, Architecture arch, int width, bool alias,
                 int hybrid) {
    AdderConfig c;
    c.architecture = arch;
    c.width = width;
    c.section = arch == Architecture::RCA ? 1 : 4;
    c.alias = alias;
    c.hybrid_rca_width = hybrid;
    out.push_back({std::move(name), c});
  };
  add("rca8", Architecture::RCA, 8, false, 0);
  add("scbcla8", Architecture::SCBCLA, 8, false, 0);
  add("scbcla8_alias", Architecture::SCBCLA, 8, true, 0);
  add("scbcla8_rca4", Architecture::SCBCLA, 8, false, 4);
  add("scbcla8_alias_rca4", Architecture::SCBCLA, 8, true, 4);
  add("rcla8", Architecture::RCLA, 8, false, 0);
  add("rcla8_rca4", Architecture::RCLA, 8, false, 4);
  add("scbcla4_alias", Architecture::SCBCLA, 4, true, 0);
  return out;
}

class SmallAdderTest : public ::testing::TestWithParam<Design> {};

// The zero-delay fixpoint and plain arithmetic agree on every input.
TEST_P(SmallAdderTest, SettledOutputsAreTheSum) {
  const auto& d = GetParam();
  const auto n = generate(d.config);
  const int w = d.config.width;
  for (const auto& v : exhaustive_vectors(w)) {
    const auto out =
        testing::settle_outputs(n, testing::adder_inputs(n, w, v.a, v.b, v.cin));
    const auto total = v.a + v.b + v.cin;
    for (int i = 0; i < w; ++i) {
      ASSERT_EQ(out.at("s" + std::to_string(i)), static_cast<int>((total >> i) & 1))
          << d.name << " " << v.a << "+" << v.b << "+" << v.cin;
    }
    ASSERT_EQ(out.at("cout"), static_cast<int>(total >> w)) << d.name;
  }
}

TEST_P(SmallAdderTest, SimulatorAgreesAndStaticDepthIsTight) {
  const auto& d = GetParam();
  const auto n = generate(d.config);
  const int w = d.config.width;
  const auto vectors = exhaustive_vectors(w);
  const auto report = oracle_check(n, vectors);
  EXPECT_TRUE(report.passed()) << report.to_text();
  const auto results =
      run_handshake_cycles(n, vectors, DelayModel::unit(), default_monitors(n));
  const auto s = summarize(results);
  EXPECT_EQ(s.error_findings, 0u);
  EXPECT_DOUBLE_EQ(s.worst_data_latency,
                   static_longest_path(n, unit_delay_table()).depth)
      << d.name;
}

TEST_P(SmallAdderTest, RandomDelaysKeepTheSum) {
  const auto& d = GetParam();
  const auto n = generate(d.config);
  const auto vectors = random_vectors(d.config.width, 500, 17);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto r = oracle_check(n, vectors, DelayModel::random(seed));
    EXPECT_TRUE(r.passed()) << r.to_text();
  }
}

TEST_P(SmallAdderTest, TextRoundTrip) {
  const auto n = generate(GetParam().config);
  EXPECT_TRUE(structurally_equal(parse_netlist(emit_netlist(n)), n, true));
  EXPECT_TRUE(validate(n).ok());
}

INSTANTIATE_TEST_SUITE_P(Designs, SmallAdderTest,
                         ::testing::ValuesIn(small_designs()),
                         [](const auto& info) { return info.param.name; });

TEST(WideAdderTest, StaticDepthMatchesCriticalVectors) {
  for (bool alias : {false, true}) {
    for (int hybrid : {0, 4}) {
      AdderConfig c;
      c.alias = alias;
      c.hybrid_rca_width = hybrid;
      const auto n = generate(c);
      const auto v = critical_vectors(32, 0, 1);
      const auto s = summarize(
          run_handshake_cycles(n, v, DelayModel::unit(), default_monitors(n)));
      EXPECT_DOUBLE_EQ(s.worst_data_latency,
                       static_longest_path(n, unit_delay_table()).depth)
          << n.name();
    }
  }
}

TEST(WideAdderTest, RandomVectorsNeverExceedStaticDepth) {
  const auto n = gen_scbcla(32, 4, true);
  const auto s = summarize(run_handshake_cycles(
      n, random_vectors(32, 10000, 8), DelayModel::unit(), default_monitors(n)));
  EXPECT_EQ(s.error_findings, 0u);
  EXPECT_LE(s.worst_data_latency,
            static_longest_path(n, unit_delay_table()).depth);
}

}  // namespace
}  // namespace qdiadd
