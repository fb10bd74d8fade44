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

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qdiadd/error.hpp"
#include "qdiadd/generators.hpp"
#include "qdiadd/metrics.hpp"

namespace qdiadd {
namespace {

// Independent reading of the bundled CSV: (group, design) -> {P, L, A}.
using Raw = std::map<std::pair<int, std::string>, std::array<double, 3>>;

Raw load_raw() {
  std::ifstream in(QDIADD_DATA_DIR "/table1.csv");
  Raw raw;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    std::stringstream ss(line);
    std::string g, d, p, l, a;
    std::getline(ss, g, ',');
    std::getline(ss, d, ',');
    std::getline(ss, p, ',');
    std::getline(ss, l, ',');
    std::getline(ss, a, ',');
    raw[{std::stoi(g), d}] = {std::stod(p), std::stod(l), std::stod(a)};
  }
  return raw;
}

const char* kP = "SCBCLA (Without alias logic)";
const char* kHP = "SCBCLA-RCA hybrid (Without alias logic)";
const char* kA = "SCBCLA (With alias logic)";
const char* kHA = "SCBCLA-RCA hybrid (With alias logic)";

double mean(const Raw& raw, std::vector<std::pair<int, std::string>> keys,
            int metric) {
  double s = 0;
  for (const auto& k : keys) s += raw.at(k)[metric];
  return s / static_cast<double>(keys.size());
}

double pct(double base, double cand) {
  return std::abs(base - cand) / base * 100.0;
}

const PercentClaim& claim(const std::vector<PercentClaim>& claims,
                          const std::string& name) {
  for (const auto& c : claims) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("no claim " + name);
}

TEST(ReferenceTest, BundledMatchesDataFile) {
  const auto raw = load_raw();
  const auto& rows = bundled_reference();
  ASSERT_EQ(rows.size(), 14u);
  ASSERT_EQ(raw.size(), 14u);
  for (const auto& r : rows) {
    const auto& v = raw.at({r.group, r.design});
    EXPECT_DOUBLE_EQ(r.power_uw, v[0]);
    EXPECT_DOUBLE_EQ(r.latency_ns, v[1]);
    EXPECT_DOUBLE_EQ(r.area_um2, v[2]);
  }
}

TEST(ReferenceTest, ParseEmitRoundTrip) {
  const auto text = emit_reference(bundled_reference());
  const auto back = parse_reference(text);
  ASSERT_EQ(back.size(), 14u);
  EXPECT_EQ(emit_reference(back), text);
  EXPECT_THROW(parse_reference("group,design\n1,x\n"), ParseError);
  EXPECT_THROW(parse_reference(
                   "group,design,power_uW,latency_ns,area_um2\n1,x,2,zz,4\n"),
               ParseError);
}

TEST(ClaimsTest, RecomputedFromRawNumbers) {
  const auto raw = load_raw();
  const auto claims = compare_table(bundled_reference());
  ASSERT_EQ(claims.size(), 11u);
  const std::vector<std::pair<int, std::string>> plain = {
      {1, kP}, {1, kHP}, {2, kP}, {2, kHP}, {4, kP}, {4, kHP}};
  const std::vector<std::pair<int, std::string>> alias = {
      {1, kA}, {1, kHA}, {2, kA}, {2, kHA}, {4, kA}, {4, kHA}};
  const std::vector<std::pair<int, std::string>> reg = {
      {1, kP}, {2, kP}, {4, kP}, {3, "RCLA"}};
  const std::vector<std::pair<int, std::string>> hyb = {
      {1, kHP}, {2, kHP}, {4, kHP}, {3, "RCLA-RCA hybrid"}};
  const std::vector<std::pair<int, std::string>> reg_a = {{1, kA}, {2, kA}, {4, kA}};
  const std::vector<std::pair<int, std::string>> hyb_a = {
      {1, kHA}, {2, kHA}, {4, kHA}};

  const std::map<std::string, double> expected = {
      {"alias latency reduction", pct(mean(raw, plain, 1), mean(raw, alias, 1))},
      {"alias area increase", pct(mean(raw, plain, 2), mean(raw, alias, 2))},
      {"alias power increase", pct(mean(raw, plain, 0), mean(raw, alias, 0))},
      {"hybrid latency reduction (without alias)",
       pct(mean(raw, reg, 1), mean(raw, hyb, 1))},
      {"hybrid area reduction (without alias)",
       pct(mean(raw, reg, 2), mean(raw, hyb, 2))},
      {"hybrid latency reduction (with alias)",
       pct(mean(raw, reg_a, 1), mean(raw, hyb_a, 1))},
      {"hybrid area reduction (with alias)",
       pct(mean(raw, reg_a, 2), mean(raw, hyb_a, 2))},
      {"hybrid alias area increase",
       pct(raw.at({4, kHP})[2], raw.at({4, kHA})[2])},
      {"hybrid alias power increase",
       pct(raw.at({4, kHP})[0], raw.at({4, kHA})[0])},
      {"area vs weak-indication alias SCBCLA",
       pct(raw.at({2, kA})[2], raw.at({4, kA})[2])},
      {"latency vs RCLA", pct(raw.at({3, "RCLA"})[1], raw.at({4, kA})[1])},
  };
  for (const auto& [name, value] : expected) {
    const auto& c = claim(claims, name);
    EXPECT_TRUE(c.complete) << name;
    EXPECT_NEAR(c.computed, value, 1e-9) << name;
    EXPECT_TRUE(c.passed()) << name << " " << c.computed;
  }
}

TEST(ClaimsTest, RoundedValues) {
  const auto claims = compare_table(bundled_reference());
  const auto r1 = [&](const char* n) {
    return std::round(claim(claims, n).computed * 10.0) / 10.0;
  };
  EXPECT_DOUBLE_EQ(r1("alias latency reduction"), 24.6);
  EXPECT_DOUBLE_EQ(r1("alias area increase"), 1.4);
  EXPECT_DOUBLE_EQ(r1("alias power increase"), 0.1);
  EXPECT_DOUBLE_EQ(r1("hybrid alias area increase"), 1.5);
  EXPECT_DOUBLE_EQ(r1("latency vs RCLA"), 16.0);
}

TEST(ClaimsTest, MissingRowsAreIncomplete) {
  std::vector<ReferenceRow> rows;
  for (const auto& r : bundled_reference()) {
    if (r.group != 3) rows.push_back(r);
  }
  const auto claims = compare_table(rows);
  EXPECT_FALSE(claim(claims, "latency vs RCLA").complete);
  EXPECT_FALSE(claim(claims, "latency vs RCLA").passed());
  EXPECT_TRUE(claim(claims, "alias area increase").passed());
}

TEST(ClaimsTest, PerturbedRowFails) {
  auto rows = bundled_reference();
  for (auto& r : rows) {
    if (r.group == 3 && r.design == "RCLA") r.latency_ns = 3.5;
  }
  EXPECT_FALSE(claim(compare_table(rows), "latency vs RCLA").passed());
}

TEST(AreaTest, ComposedFromComponents) {
  const ComponentAreaTable t;
  AdderConfig c;
  auto a = compose_area(c);
  ASSERT_TRUE(a.priced);
  EXPECT_NEAR(a.area, 8 * t.scbclg_plain + 24 * t.fa_eo + 8 * t.sol_eo, 1e-9);
  c.alias = true;
  c.hybrid_rca_width = 4;
  a = compose_area(c);
  EXPECT_NEAR(a.area, 7 * t.scbclg_alias + 25 * t.fa_eo + 7 * t.sol_eo, 1e-9);
  c = {};
  c.architecture = Architecture::RCLA;
  EXPECT_FALSE(compose_area(c).priced);
}

TEST(AreaTest, Identities) {
  const auto raw = load_raw();
  const ComponentAreaTable t;
  const auto ids = area_identities(bundled_reference());
  ASSERT_EQ(ids.size(), 4u);
  for (const auto& id : ids) EXPECT_TRUE(id.passed()) << id.name;
  EXPECT_NEAR(ids[0].reference, raw.at({4, kA})[2] - raw.at({4, kP})[2], 1e-9);
  EXPECT_NEAR(ids[0].composed, 8 * (t.scbclg_alias - t.scbclg_plain), 1e-9);
  EXPECT_NEAR(ids[1].reference, raw.at({4, kP})[2] - raw.at({4, kHP})[2], 1e-9);
  EXPECT_NEAR(ids[1].composed, t.scbclg_plain + t.sol_eo - t.fa_eo, 1e-9);
}

TEST(AreaTest, OverheadTable) {
  const auto t = overhead_table(bundled_reference());
  ASSERT_EQ(t.rows.size(), 4u);
  for (const auto& row : t.rows) {
    const double overhead = std::stod(row[3]);
    EXPECT_NEAR(overhead, 780.45, 0.05) << row[0];
  }
}

TEST(BenchTest, DesignMatrix) {
  const auto m = design_matrix(false);
  ASSERT_EQ(m.size(), 4u);
  EXPECT_EQ(design_matrix(true).size(), 6u);
  for (const auto& c : m) EXPECT_EQ(reference_group(c), 4);
  AdderConfig r;
  r.architecture = Architecture::RCLA;
  EXPECT_EQ(reference_group(r), 3);
}

TEST(BenchTest, CriticalVectorsCoverCarryChains) {
  const auto v = critical_vectors(32, 10, 1);
  const auto has = [&](AdderVector x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  EXPECT_TRUE(has({0xffffffffu, 0, true}));
  EXPECT_TRUE(has({0xffffffffu, 0, false}));
  EXPECT_TRUE(has({0, 0, false}));
  EXPECT_EQ(critical_vectors(32, 10, 1), v);
}

TEST(BenchTest, LatencyReportOrdering) {
  const auto designs = design_matrix(true);
  const auto report =
      latency_report(designs, critical_vectors(32, 100, 1));
  EXPECT_TRUE(report.passed()) << report.checks_table().to_text();
  ASSERT_EQ(report.rows.size(), 6u);
  const std::vector<double> expected = {22, 21, 16, 15, 21, 20};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_DOUBLE_EQ(report.rows[i].worst_latency, expected[i])
        << report.rows[i].label;
    EXPECT_DOUBLE_EQ(report.rows[i].static_depth, expected[i]);
    EXPECT_EQ(report.rows[i].errors, 0u);
  }
  EXPECT_EQ(report.table().rows.size(), 6u);
}

TEST(HopTest, PlainAndAliasHops) {
  const auto plain = section_hops(gen_scbcla(32, 4, false));
  const auto alias = section_hops(gen_scbcla(32, 4, true));
  ASSERT_EQ(plain.size(), 8u);
  ASSERT_EQ(alias.size(), 8u);
  for (const auto& h : plain) {
    EXPECT_EQ(h.kinds, (KindCounts{{CellKind::C2, 1}, {CellKind::OR2, 1}}));
    EXPECT_EQ(h.transistors, 18);
  }
  for (const auto& h : alias) {
    EXPECT_EQ(h.kinds, (KindCounts{{CellKind::ALIAS, 1}}));
    EXPECT_EQ(h.transistors, 10);
  }
  EXPECT_EQ(section_hops(gen_scbcla_rca_hybrid(32, 4, true, 4)).size(), 7u);
  EXPECT_TRUE(section_hops(gen_rca(4)).empty());
}

}  // namespace
}  // namespace qdiadd
