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

#include "qdiadd/cells.hpp"

#include <string>

#include "qdiadd/error.hpp"

namespace qdiadd {

namespace {

// Transistor counts: C2 (12), ALIAS (10) and OR2 (6) are the published
// figures; the rest are the usual static CMOS counts (NAND/NOR + inverter,
// AOI22 + inverter, C_n = 4n + 4).
constexpr std::array<CellSpec, kCellKindCount> kCatalog = {{
    {CellKind::INV, "INV", 1, 2, std::nullopt, 1.0, false},
    {CellKind::BUF, "BUF", 1, 4, std::nullopt, 1.0, false},
    {CellKind::AND2, "AND2", 2, 6, std::nullopt, 1.0, false},
    {CellKind::AND3, "AND3", 3, 8, std::nullopt, 1.0, false},
    {CellKind::AND4, "AND4", 4, 10, std::nullopt, 1.0, false},
    {CellKind::OR2, "OR2", 2, 6, std::nullopt, 1.0, false},
    {CellKind::OR3, "OR3", 3, 8, std::nullopt, 1.0, false},
    {CellKind::OR4, "OR4", 4, 10, std::nullopt, 1.0, false},
    {CellKind::AO22, "AO22", 4, 10, std::nullopt, 1.0, false},
    {CellKind::ALIAS, "ALIAS", 4, 10, std::nullopt, 1.0, false},
    {CellKind::C2, "C2", 2, 12, std::nullopt, 1.0, true},
    {CellKind::C3, "C3", 3, 16, std::nullopt, 1.0, true},
}};

}  // namespace

const CellSpec& cell_spec(CellKind kind) {
  const auto index = static_cast<std::size_t>(kind);
  if (index >= kCatalog.size()) {
    throw CatalogError("unknown cell kind " + std::to_string(index));
  }
  return kCatalog[index];
}

std::string_view cell_name(CellKind kind) { return cell_spec(kind).name; }

std::optional<CellKind> parse_cell_kind(std::string_view name) {
  for (const auto& spec : kCatalog) {
    if (spec.name == name) return spec.kind;
  }
  return std::nullopt;
}

namespace {

template <typename Get>
bool evaluate(CellKind kind, Get in, bool previous_output) {
  switch (kind) {
    case CellKind::INV:
      return !in(0);
    case CellKind::BUF:
      return in(0);
    case CellKind::AND2:
      return in(0) && in(1);
    case CellKind::AND3:
      return in(0) && in(1) && in(2);
    case CellKind::AND4:
      return in(0) && in(1) && in(2) && in(3);
    case CellKind::OR2:
      return in(0) || in(1);
    case CellKind::OR3:
      return in(0) || in(1) || in(2);
    case CellKind::OR4:
      return in(0) || in(1) || in(2) || in(3);
    case CellKind::AO22:
    case CellKind::ALIAS:
      return (in(0) && in(1)) || (in(2) && in(3));
    case CellKind::C2: {
      const bool a = in(0), b = in(1);
      return a == b ? a : previous_output;
    }
    case CellKind::C3: {
      const bool a = in(0), b = in(1), c = in(2);
      if (a && b && c) return true;
      if (!a && !b && !c) return false;
      return previous_output;
    }
  }
  throw CatalogError("unknown cell kind " +
                     std::to_string(static_cast<int>(kind)));
}

}  // namespace

bool evaluate_cell(CellKind kind, std::span<const bool> inputs,
                   bool previous_output) {
  const auto& spec = cell_spec(kind);
  if (static_cast<int>(inputs.size()) != spec.arity) {
    throw EvaluationError(std::string(spec.name) + " expects " +
                          std::to_string(spec.arity) + " inputs, got " +
                          std::to_string(inputs.size()));
  }
  return evaluate(
      kind, [&](int i) { return inputs[static_cast<std::size_t>(i)]; },
      previous_output);
}

bool evaluate_cell_unchecked(CellKind kind, const std::uint8_t* values,
                             const std::uint32_t* input_nets,
                             bool previous_output) {
  return evaluate(
      kind, [&](int i) { return values[input_nets[i]] != 0; },
      previous_output);
}

std::string_view dual_rail_name(DualRail v) {
  switch (v) {
    case DualRail::Null:
      return "NULL";
    case DualRail::Zero:
      return "ZERO";
    case DualRail::One:
      return "ONE";
    case DualRail::Invalid:
      return "INVALID";
  }
  return "?";
}

}  // namespace qdiadd
