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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qdiadd/cells.hpp"

namespace qdiadd {

using NetId = std::uint32_t;
inline constexpr NetId kNoNet = ~NetId{0};

struct Gate {
  std::string id;
  CellKind kind;
  std::vector<NetId> inputs;
  NetId output;
};

/// A declared dual-rail pair: rail1 carries "1", rail0 carries "0".
struct PortPair {
  std::string label;
  NetId rail1;
  NetId rail0;
};

struct Probe {
  std::string label;
  NetId net;
};

// Flat gate-level netlist. Hierarchy is carried in dotted net and gate names
// ("sec3.clg.N"); generators compose sub-blocks by flattening them with a
// prefix. Construction does not enforce structural rules so that broken
// netlists can be built and passed to validate().
class Netlist {
 public:
  explicit Netlist(std::string name = "top") : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Returns the id of `name`, creating the net when absent.
  NetId net(std::string_view name);
  std::optional<NetId> find_net(std::string_view name) const;
  const std::string& net_name(NetId id) const { return net_names_.at(id); }
  std::size_t net_count() const { return net_names_.size(); }

  const PortPair& add_input(std::string label, NetId rail1, NetId rail0);
  const PortPair& add_output(std::string label, NetId rail1, NetId rail0);
  const Probe& add_probe(std::string label, NetId net);
  /// Returns the gate index.
  std::size_t add_gate(std::string id, CellKind kind, std::vector<NetId> inputs,
                       NetId output);

  const std::vector<Gate>& gates() const { return gates_; }
  Gate& mutable_gate(std::size_t index) { return gates_.at(index); }
  const std::vector<PortPair>& inputs() const { return inputs_; }
  const std::vector<PortPair>& outputs() const { return outputs_; }
  const std::vector<Probe>& probes() const { return probes_; }

  const PortPair* find_input(std::string_view label) const;
  const PortPair* find_output(std::string_view label) const;
  const Probe* find_probe(std::string_view label) const;
  std::optional<std::size_t> find_gate(std::string_view id) const;

 private:
  std::string name_;
  std::vector<std::string> net_names_;
  std::unordered_map<std::string, NetId> net_index_;
  std::vector<Gate> gates_;
  std::vector<PortPair> inputs_;
  std::vector<PortPair> outputs_;
  std::vector<Probe> probes_;
};

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
  MultipleDrivers,
  Undriven,
  ArityMismatch,
  Cycle,
  DuplicateName,
};

std::string_view violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string subject;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// Informational findings (unconsumed nets); never make a netlist invalid.
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
  std::size_t count(ViolationKind kind) const;
  std::string to_text() const;
};

ValidationReport validate(const Netlist& netlist);

/// Gate indices in topological order (ties by gate index). Throws
/// InvalidNetlistError when the gate graph has a cycle.
std::vector<std::size_t> topological_gate_order(const Netlist& netlist);

/// True when both netlists have the same gates, kinds, connectivity and port
/// order. Names (nets, gate ids, labels, module name) are compared only when
/// `compare_names` is set.
bool structurally_equal(const Netlist& a, const Netlist& b,
                        bool compare_names = false);

// ---------------------------------------------------------------------------
// Text format

/// Canonical text: module, inputs, probes, gates in topological order,
/// outputs, end. One declaration per line, single-space separated.
std::string emit_netlist(const Netlist& netlist);

/// Throws ParseError (with line number) on unknown directives, bad
/// identifiers, arity mismatches and references to nets that are never
/// declared by an input rail or a gate output.
Netlist parse_netlist(std::string_view text);

// ---------------------------------------------------------------------------
// Structural analysis

using DelayTable = std::array<double, kCellKindCount>;

DelayTable unit_delay_table();

inline double delay_of(const DelayTable& table, CellKind kind) {
  return table[static_cast<std::size_t>(kind)];
}

using KindCounts = std::map<CellKind, int>;

struct PathReport {
  double depth = 0.0;
  std::vector<CellKind> kinds;        // source to sink
  std::vector<std::string> gate_ids;  // source to sink
  KindCounts census;
  std::string from_net;
  std::string to_net;

  std::string to_text() const;
};

/// Maximum-delay path from any input rail to any output rail.
/// Throws InvalidNetlistError when validate() reports violations.
PathReport static_longest_path(const Netlist& netlist,
                               const DelayTable& delays);

/// Maximum-delay path that starts at one of `from` and ends at one of `to`.
/// Depth is negative (and the path empty) when no such path exists.
PathReport longest_path_between(const Netlist& netlist,
                                std::span<const NetId> from,
                                std::span<const NetId> to,
                                const DelayTable& delays);

struct Census {
  KindCounts counts;
  long transistors = 0;
  int gates = 0;

  std::string to_text() const;
};

Census gate_census(const Netlist& netlist);

/// Per-kind `a - b`, zero entries dropped.
KindCounts census_difference(const Census& a, const Census& b);

std::string kind_counts_text(const KindCounts& counts);

}  // namespace qdiadd
