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

#include "qdiadd/sim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <queue>
#include <random>
#include <sstream>

#include "qdiadd/error.hpp"

namespace qdiadd {

std::string_view phase_name(Phase phase) {
  return phase == Phase::Data ? "DATA" : "RTZ";
}

std::string_view finding_kind_name(FindingKind kind) {
  switch (kind) {
    case FindingKind::InvalidPair:
      return "invalid-pair";
    case FindingKind::NonMonotonic:
      return "non-monotonic";
    case FindingKind::Deadlock:
      return "deadlock";
    case FindingKind::UnacknowledgedProbe:
      return "unacknowledged-probe";
    case FindingKind::AliasRace:
      return "alias-race";
  }
  return "?";
}

// ---------------------------------------------------------------------------

DelayModel DelayModel::unit() { return DelayModel{}; }

DelayModel DelayModel::from_table(const DelayTable& table) {
  DelayModel m;
  m.mode = DelayMode::Table;
  m.table = table;
  return m;
}

DelayModel DelayModel::random(std::uint64_t seed, double min_delay,
                              double max_delay) {
  DelayModel m;
  m.mode = DelayMode::Random;
  m.seed = seed;
  m.min_delay = min_delay;
  m.max_delay = max_delay;
  return m;
}

void DelayModel::check() const {
  if (mode == DelayMode::Random) {
    if (!(min_delay > 0.0) || !(max_delay >= min_delay) ||
        !std::isfinite(max_delay)) {
      throw ConfigError("random delay range must satisfy 0 < min <= max");
    }
    return;
  }
  const auto& t = mode == DelayMode::Unit ? unit_delay_table() : table;
  for (auto kind : kAllCellKinds) {
    const double d = delay_of(t, kind);
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw ConfigError("delay for " + std::string(cell_name(kind)) +
                        " must be positive");
    }
  }
}

namespace {

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<double> DelayModel::assign(const Netlist& netlist) const {
  check();
  std::vector<double> delays;
  delays.reserve(netlist.gates().size());
  if (mode == DelayMode::Random) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < netlist.gates().size(); ++i) {
      delays.push_back(min_delay + (max_delay - min_delay) * unit_interval(rng));
    }
    return delays;
  }
  const auto& t = mode == DelayMode::Unit ? unit_delay_table() : table;
  for (const auto& g : netlist.gates()) delays.push_back(delay_of(t, g.kind));
  return delays;
}

std::string DelayModel::describe() const {
  std::ostringstream out;
  switch (mode) {
    case DelayMode::Unit:
      out << "unit";
      break;
    case DelayMode::Table:
      out << "table";
      break;
    case DelayMode::Random:
      out << "random seed=" << seed << " range=[" << min_delay << ","
          << max_delay << "]";
      break;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

bool PhaseTrace::has_errors() const {
  return std::any_of(findings.begin(), findings.end(),
                     [](const Finding& f) { return f.is_error(); });
}

std::size_t PhaseTrace::count(FindingKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(),
                    [&](const Finding& f) { return f.kind == kind; }));
}

std::vector<RaceWatch> default_race_watches(const Netlist& netlist) {
  std::vector<RaceWatch> watches;
  if (netlist.find_probe("N") && netlist.find_output("c4alias")) {
    watches.push_back({"N", "c4alias"});
  }
  return watches;
}

MonitorConfig default_monitors(const Netlist& netlist) {
  MonitorConfig m;
  m.races = default_race_watches(netlist);
  return m;
}

// ---------------------------------------------------------------------------

Simulator::Simulator(const Netlist& netlist, const DelayModel& delays,
                     MonitorConfig monitors)
    : Simulator(netlist, delays.assign(netlist), std::move(monitors)) {}

Simulator::Simulator(const Netlist& netlist, std::vector<double> gate_delays,
                     MonitorConfig monitors)
    : netlist_(netlist),
      monitors_(std::move(monitors)),
      delay_(std::move(gate_delays)) {
  if (delay_.size() != netlist_.gates().size()) {
    throw SimulationError("delay assignment does not match the gate count");
  }
  for (double d : delay_) {
    if (!(d > 0.0)) throw ConfigError("gate delays must be positive");
  }
  const auto verdict = validate(netlist_);
  if (!verdict.ok()) {
    throw InvalidNetlistError("cannot simulate invalid netlist '" +
                              netlist_.name() + "':\n" + verdict.to_text());
  }
  compile();
  reset();
}

void Simulator::compile() {
  const auto& gates = netlist_.gates();
  const auto nets = netlist_.net_count();
  kind_.reserve(gates.size());
  in_offset_.reserve(gates.size() + 1);
  in_offset_.push_back(0);
  std::vector<std::uint32_t> fanout_count(nets, 0);
  for (const auto& g : gates) {
    kind_.push_back(g.kind);
    for (NetId in : g.inputs) {
      in_nets_.push_back(in);
      ++fanout_count[in];
    }
    in_offset_.push_back(static_cast<std::uint32_t>(in_nets_.size()));
    out_net_.push_back(g.output);
  }
  fanout_offset_.assign(nets + 1, 0);
  for (std::size_t n = 0; n < nets; ++n) {
    fanout_offset_[n + 1] = fanout_offset_[n] + fanout_count[n];
  }
  fanout_.resize(fanout_offset_[nets]);
  std::vector<std::uint32_t> fill(fanout_offset_.begin(),
                                  fanout_offset_.end() - 1);
  for (std::size_t g = 0; g < gates.size(); ++g) {
    for (NetId in : gates[g].inputs) {
      fanout_[fill[in]++] = static_cast<std::uint32_t>(g);
    }
  }

  output_pair_of_.assign(nets, -1);
  input_pair_of_.assign(nets, -1);
  for (std::size_t i = 0; i < netlist_.outputs().size(); ++i) {
    const auto& p = netlist_.outputs()[i];
    output_pair_of_[p.rail1] = static_cast<std::int32_t>(i);
    output_pair_of_[p.rail0] = static_cast<std::int32_t>(i);
  }
  for (std::size_t i = 0; i < netlist_.inputs().size(); ++i) {
    const auto& p = netlist_.inputs()[i];
    input_pair_of_[p.rail1] = static_cast<std::int32_t>(i);
    input_pair_of_[p.rail0] = static_cast<std::int32_t>(i);
  }
  is_probe_.assign(nets, 0);
  for (const auto& p : netlist_.probes()) is_probe_[p.net] = 1;

  for (const auto& race : monitors_.races) {
    const auto* probe = netlist_.find_probe(race.probe);
    const auto* out = netlist_.find_output(race.output);
    if (!probe || !out) {
      throw SimulationError("race watch refers to unknown probe '" +
                            race.probe + "' or output '" + race.output + "'");
    }
    races_.push_back(
        {probe->net, out->rail1, out->rail0, race.output + "/" + race.probe});
  }
  topo_ = topological_gate_order(netlist_);
  dirty_mark_.assign(gates.size(), 0);
}

void Simulator::reset() {
  values_.assign(netlist_.net_count(), 0);
  // Settle with inputs at spacer and every C-element cleared.
  for (auto g : topo_) {
    values_[out_net_[g]] = evaluate_cell_unchecked(
        kind_[g], values_.data(), in_nets_.data() + in_offset_[g], false);
  }
  projected_ = values_;
}

DualRail Simulator::input(std::size_t index) const {
  const auto& p = netlist_.inputs().at(index);
  return pair_value(p.rail1, p.rail0);
}

DualRail Simulator::output(std::size_t index) const {
  const auto& p = netlist_.outputs().at(index);
  return pair_value(p.rail1, p.rail0);
}

namespace {

struct Pending {
  double time;
  NetId net;
  std::uint8_t value;
};

struct Later {
  bool operator()(const Pending& x, const Pending& y) const {
    if (x.time != y.time) return x.time > y.time;
    return x.net > y.net;
  }
};

constexpr std::size_t kMaxFindingsPerKind = 32;

}  // namespace

PhaseTrace Simulator::run_phase(Phase phase,
                                std::span<const DualRail> targets) {
  const auto& inputs = netlist_.inputs();
  const auto& outputs = netlist_.outputs();
  if (targets.size() != inputs.size()) {
    throw SimulationError("expected " + std::to_string(inputs.size()) +
                          " input targets, got " +
                          std::to_string(targets.size()));
  }

  PhaseTrace trace;
  trace.phase = phase;
  const bool data = phase == Phase::Data;
  const std::uint8_t forward = data ? 1 : 0;

  std::priority_queue<Pending, std::vector<Pending>, Later> queue;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto current = input(i);
    const auto target = targets[i];
    if (target == DualRail::Invalid) {
      throw SimulationError("input '" + inputs[i].label +
                            "' cannot be driven INVALID");
    }
    if (data) {
      if (target == DualRail::Null) {
        if (current != DualRail::Null) {
          throw SimulationError("DATA phase: held input '" + inputs[i].label +
                                "' is not at spacer");
        }
        continue;
      }
      if (current == target) continue;
      if (current != DualRail::Null) {
        throw SimulationError("DATA phase: input '" + inputs[i].label +
                              "' must start from spacer");
      }
      const NetId rail =
          target == DualRail::One ? inputs[i].rail1 : inputs[i].rail0;
      queue.push({0.0, rail, 1});
      projected_[rail] = 1;
    } else {
      if (target != DualRail::Null) {
        if (current != target) {
          throw SimulationError("RTZ phase: held input '" + inputs[i].label +
                                "' must keep its current value");
        }
        continue;
      }
      for (NetId rail : {inputs[i].rail1, inputs[i].rail0}) {
        if (values_[rail]) {
          queue.push({0.0, rail, 0});
          projected_[rail] = 0;
        }
      }
    }
  }

  auto satisfied = [&](std::size_t o) {
    const auto v = output(o);
    return data ? is_valid(v) : v == DualRail::Null;
  };
  std::size_t done_count = 0;
  for (std::size_t o = 0; o < outputs.size(); ++o) {
    if (satisfied(o)) ++done_count;
  }
  if (done_count == outputs.size()) {
    trace.completed = true;
    trace.completion_time = 0.0;
  }

  std::array<std::size_t, 5> finding_counts{};
  auto report = [&](FindingKind kind, double time, std::string subject,
                    std::string detail) {
    auto& c = finding_counts[static_cast<std::size_t>(kind)];
    if (c++ < kMaxFindingsPerKind) {
      trace.findings.push_back({kind, time, std::move(subject),
                                std::move(detail)});
    }
  };

  // Race bookkeeping: fall times of probe and watched rails that start high.
  struct RaceState {
    double probe_fall = -1.0;
    double rail_fall = -1.0;
    bool probe_high = false;
    bool rail_high = false;
  };
  std::vector<RaceState> race_state(races_.size());
  if (!data) {
    for (std::size_t r = 0; r < races_.size(); ++r) {
      race_state[r].probe_high = values_[races_[r].probe] != 0;
      race_state[r].rail_high =
          values_[races_[r].rail1] != 0 || values_[races_[r].rail0] != 0;
    }
  }

  std::vector<std::uint32_t> dirty;
  std::vector<NetId> changed;
  std::vector<std::int32_t> invalid_reported;

  while (!queue.empty()) {
    const double now = queue.top().time;
    changed.clear();
    while (!queue.empty() && queue.top().time == now) {
      const auto e = queue.top();
      queue.pop();
      if (values_[e.net] == e.value) continue;
      values_[e.net] = e.value;
      changed.push_back(e.net);
      ++trace.transitions;
      if (monitors_.record_events) {
        trace.events.push_back({now, e.net, e.value != 0});
      }
      if (monitors_.monotonicity && e.value != forward) {
        report(FindingKind::NonMonotonic, now, netlist_.net_name(e.net),
               std::string(e.value ? "rising" : "falling") + " edge in " +
                   std::string(phase_name(phase)));
      }
      if (monitors_.probe_acknowledgment && is_probe_[e.net] &&
          trace.completed) {
        report(FindingKind::UnacknowledgedProbe, now,
               netlist_.net_name(e.net),
               "switched after completion at t=" +
                   std::to_string(trace.completion_time));
      }
    }

    // Pair monitors and completion bookkeeping.
    for (NetId net : changed) {
      const auto o = output_pair_of_[net];
      if (o >= 0) {
        const auto& p = outputs[static_cast<std::size_t>(o)];
        if (monitors_.invalid_pair &&
            pair_value(p.rail1, p.rail0) == DualRail::Invalid &&
            std::find(invalid_reported.begin(), invalid_reported.end(), o) ==
                invalid_reported.end()) {
          invalid_reported.push_back(o);
          report(FindingKind::InvalidPair, now, p.label, "both rails high");
        }
      }
      const auto i = input_pair_of_[net];
      if (i >= 0 && monitors_.invalid_pair) {
        const auto& p = inputs[static_cast<std::size_t>(i)];
        if (pair_value(p.rail1, p.rail0) == DualRail::Invalid) {
          report(FindingKind::InvalidPair, now, p.label, "both rails high");
        }
      }
    }
    if (!changed.empty()) {
      std::size_t count = 0;
      for (std::size_t o = 0; o < outputs.size(); ++o) {
        if (satisfied(o)) ++count;
      }
      done_count = count;
      if (!trace.completed && done_count == outputs.size()) {
        trace.completed = true;
        trace.completion_time = now;
        if (monitors_.probe_acknowledgment) {
          for (NetId net : changed) {
            if (is_probe_[net]) {
              report(FindingKind::UnacknowledgedProbe, now,
                     netlist_.net_name(net), "switched at completion");
            }
          }
        }
      }
    }

    if (!data) {
      for (std::size_t r = 0; r < races_.size(); ++r) {
        auto& rs = race_state[r];
        const auto& race = races_[r];
        if (rs.probe_high && rs.probe_fall < 0 && !values_[race.probe]) {
          rs.probe_fall = now;
        }
        if (rs.rail_high && rs.rail_fall < 0 && !values_[race.rail1] &&
            !values_[race.rail0]) {
          rs.rail_fall = now;
        }
      }
    }

    dirty.clear();
    for (NetId net : changed) {
      for (auto k = fanout_offset_[net]; k < fanout_offset_[net + 1]; ++k) {
        const auto g = fanout_[k];
        if (!dirty_mark_[g]) {
          dirty_mark_[g] = 1;
          dirty.push_back(g);
        }
      }
    }
    std::sort(dirty.begin(), dirty.end());
    for (auto g : dirty) {
      dirty_mark_[g] = 0;
      const NetId out = out_net_[g];
      const bool next =
          evaluate_cell_unchecked(kind_[g], values_.data(),
                                  in_nets_.data() + in_offset_[g],
                                  projected_[out] != 0);
      if (static_cast<std::uint8_t>(next) != projected_[out]) {
        projected_[out] = next ? 1 : 0;
        queue.push({now + delay_[g], out, static_cast<std::uint8_t>(next)});
      }
    }
    trace.quiescence_time = now;
  }

  if (!trace.completed) {
    for (std::size_t o = 0; o < outputs.size(); ++o) {
      if (!satisfied(o)) trace.stuck_outputs.push_back(outputs[o].label);
    }
    std::string stuck;
    for (const auto& s : trace.stuck_outputs) {
      stuck += (stuck.empty() ? "" : " ") + s;
    }
    report(FindingKind::Deadlock, trace.quiescence_time, "outputs",
           "quiescent with incomplete outputs: " + stuck);
  }

  for (std::size_t r = 0; r < races_.size(); ++r) {
    const auto& rs = race_state[r];
    if (rs.probe_high && rs.rail_high && rs.rail_fall >= 0 &&
        (rs.probe_fall < 0 || rs.rail_fall < rs.probe_fall)) {
      report(FindingKind::AliasRace, rs.rail_fall, races_[r].label,
             "output fell before probe");
    }
  }
  return trace;
}

PhaseTrace simulate_phase(const Netlist& netlist,
                          std::vector<std::uint8_t>& state,
                          std::span<const DualRail> targets, Phase phase,
                          const DelayModel& delays,
                          const MonitorConfig& monitors) {
  Simulator sim(netlist, delays, monitors);
  sim.load_state(state);
  auto trace = sim.run_phase(phase, targets);
  state = sim.state();
  return trace;
}

void Simulator::load_state(std::span<const std::uint8_t> values) {
  if (values.size() != netlist_.net_count()) {
    throw SimulationError("state does not match the netlist's net count");
  }
  values_.assign(values.begin(), values.end());
  for (auto& v : values_) v = v ? 1 : 0;
  projected_ = values_;
}

}  // namespace qdiadd
