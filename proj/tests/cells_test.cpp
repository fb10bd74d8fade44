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

#include <vector>

#include "qdiadd/cells.hpp"
#include "qdiadd/error.hpp"

namespace qdiadd {
namespace {

bool eval(CellKind k, std::vector<bool> in, bool prev = false) {
  bool buf[4] = {};
  for (std::size_t i = 0; i < in.size(); ++i) buf[i] = in[i];
  return evaluate_cell(k, std::span<const bool>(buf, in.size()), prev);
}

TEST(CellSpecTest, TransistorCountsFromTheHopArgument) {
  EXPECT_EQ(cell_spec(CellKind::C2).transistors, 12);
  EXPECT_EQ(cell_spec(CellKind::ALIAS).transistors, 10);
  EXPECT_EQ(cell_spec(CellKind::OR2).transistors, 6);
  EXPECT_EQ(cell_spec(CellKind::C2).transistors +
                cell_spec(CellKind::OR2).transistors,
            18);
}

TEST(CellSpecTest, EveryKindHasPositiveCountAndUnitDelay) {
  for (auto k : kAllCellKinds) {
    const auto& s = cell_spec(k);
    EXPECT_EQ(s.kind, k);
    EXPECT_GT(s.transistors, 0) << s.name;
    EXPECT_GT(s.arity, 0) << s.name;
    EXPECT_DOUBLE_EQ(s.delay, 1.0) << s.name;
    EXPECT_FALSE(s.area_um2.has_value()) << s.name;
    EXPECT_EQ(parse_cell_kind(s.name), k);
    EXPECT_EQ(s.stateful, k == CellKind::C2 || k == CellKind::C3);
  }
}

TEST(CellSpecTest, UnknownKindIsACatalogError) {
  EXPECT_THROW(cell_spec(static_cast<CellKind>(99)), CatalogError);
  EXPECT_FALSE(parse_cell_kind("AO21").has_value());
  EXPECT_FALSE(parse_cell_kind("ao22").has_value());
}

TEST(EvaluateCellTest, DocumentedCases) {
  EXPECT_TRUE(eval(CellKind::C2, {1, 0}, true));
  EXPECT_TRUE(eval(CellKind::AND4, {1, 1, 1, 1}));
  EXPECT_FALSE(eval(CellKind::AO22, {1, 0, 0, 1}));
}

TEST(EvaluateCellTest, CombinationalKindsMatchTruthTables) {
  for (auto k : kAllCellKinds) {
    const auto& s = cell_spec(k);
    if (s.stateful) continue;
    for (unsigned m = 0; m < (1U << s.arity); ++m) {
      std::vector<bool> in;
      for (int i = 0; i < s.arity; ++i) in.push_back((m >> i) & 1U);
      const int ones = __builtin_popcount(m);
      bool want = false;
      switch (k) {
        case CellKind::INV: want = !in[0]; break;
        case CellKind::BUF: want = in[0]; break;
        case CellKind::AND2:
        case CellKind::AND3:
        case CellKind::AND4: want = ones == s.arity; break;
        case CellKind::OR2:
        case CellKind::OR3:
        case CellKind::OR4: want = ones > 0; break;
        case CellKind::AO22:
        case CellKind::ALIAS: want = (in[0] && in[1]) || (in[2] && in[3]); break;
        default: break;
      }
      // previous output has no effect
      EXPECT_EQ(eval(k, in, false), want) << s.name << " " << m;
      EXPECT_EQ(eval(k, in, true), want) << s.name << " " << m;
    }
  }
}

TEST(EvaluateCellTest, CElementHysteresis) {
  for (auto k : {CellKind::C2, CellKind::C3}) {
    const int arity = cell_spec(k).arity;
    for (unsigned m = 0; m < (1U << arity); ++m) {
      std::vector<bool> in;
      for (int i = 0; i < arity; ++i) in.push_back((m >> i) & 1U);
      for (bool prev : {false, true}) {
        bool want = prev;
        if (m == 0) want = false;
        if (m == (1U << arity) - 1) want = true;
        EXPECT_EQ(eval(k, in, prev), want);
      }
    }
  }
}

TEST(EvaluateCellTest, ArityMismatchThrows) {
  EXPECT_THROW(eval(CellKind::AND2, {1, 1, 1}), EvaluationError);
  EXPECT_THROW(eval(CellKind::AO22, {1, 1, 1}), EvaluationError);
}

TEST(EvaluateCellTest, UncheckedAgreesWithChecked) {
  const std::uint8_t values[4] = {1, 0, 1, 1};
  const std::uint32_t nets[4] = {0, 1, 2, 3};
  EXPECT_TRUE(evaluate_cell_unchecked(CellKind::AO22, values, nets, false));
  EXPECT_FALSE(evaluate_cell_unchecked(CellKind::AND2, values, nets, false));
  EXPECT_TRUE(evaluate_cell_unchecked(CellKind::C2, values, nets, true));
  EXPECT_FALSE(evaluate_cell_unchecked(CellKind::C2, values, nets, false));
}

TEST(DualRailTest, ClassifyPairPartitionsTheBitSpace) {
  EXPECT_EQ(classify_pair(true, false), DualRail::One);
  EXPECT_EQ(classify_pair(false, true), DualRail::Zero);
  EXPECT_EQ(classify_pair(false, false), DualRail::Null);
  EXPECT_EQ(classify_pair(true, true), DualRail::Invalid);
  EXPECT_TRUE(is_valid(DualRail::One));
  EXPECT_TRUE(is_valid(DualRail::Zero));
  EXPECT_FALSE(is_valid(DualRail::Null));
  EXPECT_FALSE(is_valid(DualRail::Invalid));
}

}  // namespace
}  // namespace qdiadd
