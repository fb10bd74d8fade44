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

#include "qdiadd/netlist.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

#include "qdiadd/error.hpp"

namespace qdiadd {

NetId Netlist::net(std::string_view name) {
  if (auto it = net_index_.find(std::string(name)); it != net_index_.end()) {
    return it->second;
  }
  const auto id = static_cast<NetId>(net_names_.size());
  net_names_.emplace_back(name);
  net_index_.emplace(std::string(name), id);
  return id;
}

std::optional<NetId> Netlist::find_net(std::string_view name) const {
  if (auto it = net_index_.find(std::string(name)); it != net_index_.end()) {
    return it->second;
  }
  return std::nullopt;
}

const PortPair& Netlist::add_input(std::string label, NetId rail1,
                                   NetId rail0) {
  inputs_.push_back({std::move(label), rail1, rail0});
  return inputs_.back();
}

const PortPair& Netlist::add_output(std::string label, NetId rail1,
                                    NetId rail0) {
  outputs_.push_back({std::move(label), rail1, rail0});
  return outputs_.back();
}

const Probe& Netlist::add_probe(std::string label, NetId net) {
  probes_.push_back({std::move(label), net});
  return probes_.back();
}

std::size_t Netlist::add_gate(std::string id, CellKind kind,
                              std::vector<NetId> inputs, NetId output) {
  gates_.push_back({std::move(id), kind, std::move(inputs), output});
  return gates_.size() - 1;
}

namespace {

template <typename T>
const T* find_label(const std::vector<T>& items, std::string_view label) {
  auto it = std::find_if(items.begin(), items.end(),
                         [&](const T& p) { return p.label == label; });
  return it == items.end() ? nullptr : &*it;
}

}  // namespace

const PortPair* Netlist::find_input(std::string_view label) const {
  return find_label(inputs_, label);
}

const PortPair* Netlist::find_output(std::string_view label) const {
  return find_label(outputs_, label);
}

const Probe* Netlist::find_probe(std::string_view label) const {
  return find_label(probes_, label);
}

std::optional<std::size_t> Netlist::find_gate(std::string_view id) const {
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    if (gates_[i].id == id) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::string_view violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MultipleDrivers:
      return "multiple-drivers";
    case ViolationKind::Undriven:
      return "undriven";
    case ViolationKind::ArityMismatch:
      return "arity";
    case ViolationKind::Cycle:
      return "cycle";
    case ViolationKind::DuplicateName:
      return "duplicate-name";
  }
  return "?";
}

std::size_t ValidationReport::count(ViolationKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(),
                    [&](const Violation& v) { return v.kind == kind; }));
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  out << (ok() ? "valid" : "invalid") << ": " << violations.size()
      << " violation(s), " << notes.size() << " note(s)\n";
  for (const auto& v : violations) {
    out << "  " << violation_kind_name(v.kind) << " " << v.subject << ": "
        << v.message << "\n";
  }
  for (const auto& n : notes) out << "  note: " << n << "\n";
  return out.str();
}

namespace {

// Gate that drives each net, or -1 (input rail / undriven). Only the first
// gate driver is kept.
std::vector<long> gate_drivers(const Netlist& netlist) {
  std::vector<long> driver(netlist.net_count(), -1);
  const auto& gates = netlist.gates();
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const NetId out = gates[g].output;
    if (out < driver.size() && driver[out] < 0) {
      driver[out] = static_cast<long>(g);
    }
  }
  return driver;
}

// Kahn's algorithm; returns the order and leaves unprocessed gates out.
std::vector<std::size_t> kahn_order(const Netlist& netlist) {
  const auto& gates = netlist.gates();
  const auto driver = gate_drivers(netlist);
  std::vector<int> pending(gates.size(), 0);
  std::vector<std::vector<std::size_t>> fanout(gates.size());
  for (std::size_t g = 0; g < gates.size(); ++g) {
    for (NetId in : gates[g].inputs) {
      if (in < driver.size() && driver[in] >= 0) {
        ++pending[g];
        fanout[static_cast<std::size_t>(driver[in])].push_back(g);
      }
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>,
                      std::greater<std::size_t>>
      ready;
  for (std::size_t g = 0; g < gates.size(); ++g) {
    if (pending[g] == 0) ready.push(g);
  }
  std::vector<std::size_t> order;
  order.reserve(gates.size());
  while (!ready.empty()) {
    const auto g = ready.top();
    ready.pop();
    order.push_back(g);
    for (auto succ : fanout[g]) {
      if (--pending[succ] == 0) ready.push(succ);
    }
  }
  return order;
}

}  // namespace

ValidationReport validate(const Netlist& netlist) {
  ValidationReport report;
  const auto n = netlist.net_count();
  std::vector<int> drivers(n, 0);
  std::vector<int> readers(n, 0);

  auto check_id = [&](NetId id, const std::string& where) {
    if (id >= n) {
      report.violations.push_back({ViolationKind::Undriven, where,
                                   "reference to unknown net id"});
      return false;
    }
    return true;
  };

  for (const auto& p : netlist.inputs()) {
    if (check_id(p.rail1, p.label)) ++drivers[p.rail1];
    if (check_id(p.rail0, p.label)) ++drivers[p.rail0];
  }
  for (const auto& g : netlist.gates()) {
    if (check_id(g.output, g.id)) ++drivers[g.output];
    for (NetId in : g.inputs) {
      if (check_id(in, g.id)) ++readers[in];
    }
    const auto& spec = cell_spec(g.kind);
    if (static_cast<int>(g.inputs.size()) != spec.arity) {
      report.violations.push_back(
          {ViolationKind::ArityMismatch, g.id,
           std::string(spec.name) + " expects " + std::to_string(spec.arity) +
               " inputs, has " + std::to_string(g.inputs.size())});
    }
  }
  for (const auto& p : netlist.outputs()) {
    if (check_id(p.rail1, p.label)) ++readers[p.rail1];
    if (check_id(p.rail0, p.label)) ++readers[p.rail0];
  }
  for (const auto& p : netlist.probes()) {
    if (check_id(p.net, p.label)) ++readers[p.net];
  }

  for (NetId id = 0; id < n; ++id) {
    if (drivers[id] > 1) {
      report.violations.push_back(
          {ViolationKind::MultipleDrivers, netlist.net_name(id),
           std::to_string(drivers[id]) + " drivers"});
    } else if (drivers[id] == 0) {
      report.violations.push_back(
          {ViolationKind::Undriven, netlist.net_name(id), "no driver"});
    } else if (readers[id] == 0) {
      report.notes.push_back("unconsumed net " + netlist.net_name(id));
    }
  }

  std::set<std::string> seen;
  for (const auto& g : netlist.gates()) {
    if (!seen.insert("gate:" + g.id).second) {
      report.violations.push_back(
          {ViolationKind::DuplicateName, g.id, "duplicate gate id"});
    }
  }
  auto check_labels = [&](const auto& items, const char* what) {
    std::set<std::string> labels;
    for (const auto& p : items) {
      if (!labels.insert(p.label).second) {
        report.violations.push_back({ViolationKind::DuplicateName, p.label,
                                     std::string("duplicate ") + what});
      }
    }
  };
  check_labels(netlist.inputs(), "input label");
  check_labels(netlist.outputs(), "output label");
  check_labels(netlist.probes(), "probe label");

  const auto order = kahn_order(netlist);
  if (order.size() != netlist.gates().size()) {
    std::vector<bool> done(netlist.gates().size(), false);
    for (auto g : order) done[g] = true;
    std::string first;
    std::size_t stuck = 0;
    for (std::size_t g = 0; g < done.size(); ++g) {
      if (!done[g]) {
        if (first.empty()) first = netlist.gates()[g].id;
        ++stuck;
      }
    }
    report.violations.push_back(
        {ViolationKind::Cycle, first,
         std::to_string(stuck) + " gate(s) on or behind a cycle"});
  }
  return report;
}

std::vector<std::size_t> topological_gate_order(const Netlist& netlist) {
  auto order = kahn_order(netlist);
  if (order.size() != netlist.gates().size()) {
    throw InvalidNetlistError("netlist '" + netlist.name() +
                              "' has a combinational cycle");
  }
  return order;
}

// ---------------------------------------------------------------------------

bool structurally_equal(const Netlist& a, const Netlist& b,
                        bool compare_names) {
  if (a.gates().size() != b.gates().size() ||
      a.inputs().size() != b.inputs().size() ||
      a.outputs().size() != b.outputs().size() ||
      a.probes().size() != b.probes().size()) {
    return false;
  }
  if (compare_names && a.name() != b.name()) return false;

  std::vector<NetId> map(a.net_count(), kNoNet);
  auto bind = [&](NetId x, NetId y) {
    if (x >= map.size()) return false;
    if (map[x] == kNoNet) {
      map[x] = y;
      return true;
    }
    return map[x] == y;
  };

  for (std::size_t i = 0; i < a.inputs().size(); ++i) {
    const auto& pa = a.inputs()[i];
    const auto& pb = b.inputs()[i];
    if (compare_names && pa.label != pb.label) return false;
    if (!bind(pa.rail1, pb.rail1) || !bind(pa.rail0, pb.rail0)) return false;
  }

  // Index b's gates by (kind, mapped inputs) once their inputs are known.
  std::multimap<std::pair<CellKind, std::vector<NetId>>, std::size_t> b_index;
  for (std::size_t g = 0; g < b.gates().size(); ++g) {
    const auto& gate = b.gates()[g];
    b_index.emplace(std::make_pair(gate.kind, gate.inputs), g);
  }

  std::vector<std::size_t> order;
  try {
    order = topological_gate_order(a);
    topological_gate_order(b);
  } catch (const InvalidNetlistError&) {
    return false;
  }

  for (auto g : order) {
    const auto& ga = a.gates()[g];
    std::vector<NetId> mapped;
    mapped.reserve(ga.inputs.size());
    for (NetId in : ga.inputs) {
      if (in >= map.size() || map[in] == kNoNet) return false;
      mapped.push_back(map[in]);
    }
    auto it = b_index.find(std::make_pair(ga.kind, mapped));
    if (it == b_index.end()) return false;
    const auto& gb = b.gates()[it->second];
    if (compare_names && ga.id != gb.id) return false;
    if (!bind(ga.output, gb.output)) return false;
    b_index.erase(it);
  }

  for (std::size_t i = 0; i < a.outputs().size(); ++i) {
    const auto& pa = a.outputs()[i];
    const auto& pb = b.outputs()[i];
    if (compare_names && pa.label != pb.label) return false;
    if (!bind(pa.rail1, pb.rail1) || !bind(pa.rail0, pb.rail0)) return false;
  }
  for (std::size_t i = 0; i < a.probes().size(); ++i) {
    const auto& pa = a.probes()[i];
    const auto& pb = b.probes()[i];
    if (compare_names && pa.label != pb.label) return false;
    if (!bind(pa.net, pb.net)) return false;
  }
  if (compare_names) {
    for (NetId x = 0; x < map.size(); ++x) {
      if (map[x] != kNoNet && a.net_name(x) != b.net_name(map[x])) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

std::string kind_counts_text(const KindCounts& counts) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [kind, count] : counts) {
    if (!first) out << ", ";
    first = false;
    out << cell_name(kind) << ": " << count;
  }
  out << "}";
  return out.str();
}

std::string Census::to_text() const {
  std::ostringstream out;
  out << "gates " << gates << " transistors " << transistors << " "
      << kind_counts_text(counts);
  return out.str();
}

Census gate_census(const Netlist& netlist) {
  Census census;
  for (const auto& g : netlist.gates()) {
    ++census.counts[g.kind];
    census.transistors += cell_spec(g.kind).transistors;
    ++census.gates;
  }
  return census;
}

KindCounts census_difference(const Census& a, const Census& b) {
  KindCounts diff;
  for (auto kind : kAllCellKinds) {
    const auto ia = a.counts.find(kind);
    const auto ib = b.counts.find(kind);
    const int ca = ia == a.counts.end() ? 0 : ia->second;
    const int cb = ib == b.counts.end() ? 0 : ib->second;
    if (ca != cb) diff[kind] = ca - cb;
  }
  return diff;
}

}  // namespace qdiadd
