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

#include <algorithm>
#include <limits>
#include <sstream>

#include "qdiadd/error.hpp"
#include "qdiadd/netlist.hpp"

namespace qdiadd {

DelayTable unit_delay_table() {
  DelayTable table{};
  for (auto kind : kAllCellKinds) {
    table[static_cast<std::size_t>(kind)] = cell_spec(kind).delay;
  }
  return table;
}

std::string PathReport::to_text() const {
  std::ostringstream out;
  out << "depth " << depth << " from " << from_net << " to " << to_net
      << " census " << kind_counts_text(census) << "\n";
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    out << "  " << cell_name(kinds[i]) << " " << gate_ids[i] << "\n";
  }
  return out.str();
}

PathReport longest_path_between(const Netlist& netlist,
                                std::span<const NetId> from,
                                std::span<const NetId> to,
                                const DelayTable& delays) {
  constexpr double kUnreached = -std::numeric_limits<double>::infinity();
  const auto order = topological_gate_order(netlist);
  const auto& gates = netlist.gates();

  std::vector<double> arrival(netlist.net_count(), kUnreached);
  std::vector<long> via_gate(netlist.net_count(), -1);
  std::vector<NetId> via_input(netlist.net_count(), kNoNet);
  for (NetId s : from) arrival.at(s) = 0.0;

  for (auto g : order) {
    const auto& gate = gates[g];
    double best = kUnreached;
    NetId best_in = kNoNet;
    for (NetId in : gate.inputs) {
      if (arrival[in] > best) {
        best = arrival[in];
        best_in = in;
      }
    }
    if (best_in == kNoNet) continue;
    const double t = best + delay_of(delays, gate.kind);
    if (t > arrival[gate.output]) {
      arrival[gate.output] = t;
      via_gate[gate.output] = static_cast<long>(g);
      via_input[gate.output] = best_in;
    }
  }

  PathReport report;
  NetId end = kNoNet;
  double depth = kUnreached;
  for (NetId t : to) {
    if (arrival.at(t) > depth) {
      depth = arrival[t];
      end = t;
    }
  }
  if (end == kNoNet) {
    report.depth = -1.0;
    return report;
  }

  report.depth = depth;
  report.to_net = netlist.net_name(end);
  NetId cursor = end;
  while (via_gate[cursor] >= 0) {
    const auto& gate = gates[static_cast<std::size_t>(via_gate[cursor])];
    report.kinds.push_back(gate.kind);
    report.gate_ids.push_back(gate.id);
    ++report.census[gate.kind];
    cursor = via_input[cursor];
  }
  report.from_net = netlist.net_name(cursor);
  std::reverse(report.kinds.begin(), report.kinds.end());
  std::reverse(report.gate_ids.begin(), report.gate_ids.end());
  return report;
}

PathReport static_longest_path(const Netlist& netlist,
                               const DelayTable& delays) {
  const auto verdict = validate(netlist);
  if (!verdict.ok()) {
    throw InvalidNetlistError("static_longest_path: netlist '" +
                              netlist.name() + "' is invalid (" +
                              std::to_string(verdict.violations.size()) +
                              " violation(s))");
  }
  std::vector<NetId> sources;
  for (const auto& p : netlist.inputs()) {
    sources.push_back(p.rail1);
    sources.push_back(p.rail0);
  }
  std::vector<NetId> sinks;
  for (const auto& p : netlist.outputs()) {
    sinks.push_back(p.rail1);
    sinks.push_back(p.rail0);
  }
  return longest_path_between(netlist, sources, sinks, delays);
}

}  // namespace qdiadd
