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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace qdiadd {

// Behavioral cell library. Every kind has a fixed arity and one output.
// AO22 and ALIAS compute the same function (Y = A.B + C.D); ALIAS marks the
// redundant section-carry gate so it can be counted separately.
enum class CellKind : std::uint8_t {
  INV,
  BUF,
  AND2,
  AND3,
  AND4,
  OR2,
  OR3,
  OR4,
  AO22,
  ALIAS,
  C2,
  C3,
};

inline constexpr std::size_t kCellKindCount = 12;

inline constexpr std::array<CellKind, kCellKindCount> kAllCellKinds = {
    CellKind::INV,  CellKind::BUF, CellKind::AND2, CellKind::AND3,
    CellKind::AND4, CellKind::OR2, CellKind::OR3,  CellKind::OR4,
    CellKind::AO22, CellKind::ALIAS, CellKind::C2, CellKind::C3,
};

struct CellSpec {
  CellKind kind;
  std::string_view name;
  int arity;
  int transistors;
  std::optional<double> area_um2;  // absent: no published per-gate figure
  double delay;                    // default unit-delay attribute
  bool stateful;                   // Muller C-element
};

/// Catalog lookup. Throws CatalogError for a value outside the enumeration.
const CellSpec& cell_spec(CellKind kind);

std::string_view cell_name(CellKind kind);

/// Case-sensitive lookup by catalog name ("AO22", "C2", ...).
std::optional<CellKind> parse_cell_kind(std::string_view name);

/// Evaluates one cell. Combinational kinds ignore `previous_output`; C2/C3
/// return 1 when all inputs are 1, 0 when all are 0, else `previous_output`.
/// Throws EvaluationError when inputs.size() != arity.
bool evaluate_cell(CellKind kind, std::span<const bool> inputs,
                   bool previous_output);

/// Allocation-free evaluation over packed net values, used by the simulator.
/// Arity is not checked.
bool evaluate_cell_unchecked(CellKind kind, const std::uint8_t* values,
                             const std::uint32_t* input_nets,
                             bool previous_output);

enum class DualRail : std::uint8_t { Null, Zero, One, Invalid };

/// (0,0) spacer, (1,0) one, (0,1) zero, (1,1) invalid.
constexpr DualRail classify_pair(bool rail1, bool rail0) {
  if (rail1 && rail0) return DualRail::Invalid;
  if (rail1) return DualRail::One;
  if (rail0) return DualRail::Zero;
  return DualRail::Null;
}

constexpr bool is_valid(DualRail v) {
  return v == DualRail::One || v == DualRail::Zero;
}

std::string_view dual_rail_name(DualRail v);

}  // namespace qdiadd
