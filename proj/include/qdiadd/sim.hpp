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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdiadd/cells.hpp"
#include "qdiadd/netlist.hpp"

namespace qdiadd {

enum class Phase { Data, Rtz };

std::string_view phase_name(Phase phase);

enum class DelayMode { Unit, Table, Random };

// Per-gate delay assignment. Random mode draws one delay per gate instance,
// uniform over [min_delay, max_delay], from a generator seeded with `seed`.
struct DelayModel {
  DelayMode mode = DelayMode::Unit;
  DelayTable table = unit_delay_table();
  std::uint64_t seed = 1;
  double min_delay = 0.5;
  double max_delay = 2.0;

  static DelayModel unit();
  static DelayModel from_table(const DelayTable& table);
  static DelayModel random(std::uint64_t seed, double min_delay = 0.5,
                           double max_delay = 2.0);

  /// Throws ConfigError unless every delay it can produce is positive.
  void check() const;
  std::vector<double> assign(const Netlist& netlist) const;
  std::string describe() const;
};

enum class FindingKind {
  InvalidPair,          // (1,1) on a declared pair
  NonMonotonic,         // falling edge in DATA or rising edge in RTZ
  Deadlock,             // quiescent before the completion condition held
  UnacknowledgedProbe,  // probe net switched at or after completion
  AliasRace,            // watched output fell before the probe (informational)
};

std::string_view finding_kind_name(FindingKind kind);

struct Finding {
  FindingKind kind;
  double time;
  std::string subject;
  std::string detail;

  bool is_error() const { return kind != FindingKind::AliasRace; }
};

struct Event {
  double time;
  NetId net;
  bool value;
};

struct PhaseTrace {
  Phase phase = Phase::Data;
  std::vector<Event> events;  // empty unless event recording is enabled
  std::size_t transitions = 0;
  bool completed = false;
  double completion_time = 0.0;
  double quiescence_time = 0.0;
  std::vector<Finding> findings;
  std::vector<std::string> stuck_outputs;  // labels, on deadlock

  bool has_errors() const;
  std::size_t count(FindingKind kind) const;
};

/// Observer for the documented section-carry race: reports when a rail of
/// `output` that was high falls before `probe` falls in an RTZ phase.
struct RaceWatch {
  std::string probe;
  std::string output;
};

/// The SCBCLG alias race (probe N against c4alias) when both exist.
std::vector<RaceWatch> default_race_watches(const Netlist& netlist);

struct MonitorConfig {
  bool invalid_pair = true;
  bool monotonicity = true;
  bool probe_acknowledgment = true;
  bool record_events = false;
  std::vector<RaceWatch> races;  // resolved against the simulated netlist
};

/// MonitorConfig with the default race watches for `netlist`.
MonitorConfig default_monitors(const Netlist& netlist);

// Two-valued event-driven simulator with transport delays. Events at equal
// timestamps are applied together in net-id order, then every affected gate
// is evaluated once in gate-index order.
class Simulator {
 public:
  Simulator(const Netlist& netlist, const DelayModel& delays,
            MonitorConfig monitors);
  Simulator(const Netlist& netlist, std::vector<double> gate_delays,
            MonitorConfig monitors);

  /// Returns every net to its spacer-state value.
  void reset();

  /// Net values indexed by net id. A loaded state must be quiescent; each
  /// C-element keeps the value of its output net.
  std::vector<std::uint8_t> state() const { return values_; }
  void load_state(std::span<const std::uint8_t> values);

  /// Drives input pair i towards targets[i] at time 0 and runs to
  /// quiescence. In DATA, a Null target keeps the pair at spacer; in RTZ, a
  /// valid target keeps the pair at its current value. Completion means all
  /// output pairs valid (DATA) or all Null (RTZ). Throws SimulationError when
  /// the targets do not fit the phase or the current state.
  PhaseTrace run_phase(Phase phase, std::span<const DualRail> targets);

  DualRail input(std::size_t index) const;
  DualRail output(std::size_t index) const;
  bool value(NetId net) const { return values_[net] != 0; }

  const Netlist& netlist() const { return netlist_; }
  std::span<const double> gate_delays() const { return delay_; }

 private:
  void compile();
  DualRail pair_value(NetId rail1, NetId rail0) const {
    return classify_pair(values_[rail1] != 0, values_[rail0] != 0);
  }

  const Netlist& netlist_;
  MonitorConfig monitors_;
  std::vector<double> delay_;

  // Compiled form.
  std::vector<CellKind> kind_;
  std::vector<std::uint32_t> in_offset_;
  std::vector<std::uint32_t> in_nets_;
  std::vector<NetId> out_net_;
  std::vector<std::uint32_t> fanout_offset_;
  std::vector<std::uint32_t> fanout_;
  std::vector<std::int32_t> output_pair_of_;  // net -> output pair or -1
  std::vector<std::int32_t> input_pair_of_;   // net -> input pair or -1
  std::vector<std::uint8_t> is_probe_;
  std::vector<std::size_t> topo_;

  struct ResolvedRace {
    NetId probe;
    NetId rail1;
    NetId rail0;
    std::string label;
  };
  std::vector<ResolvedRace> races_;

  // State.
  std::vector<std::uint8_t> values_;
  std::vector<std::uint8_t> projected_;
  std::vector<std::uint8_t> dirty_mark_;
};

/// Runs one phase from `state` (net values by id, quiescent) and writes the
/// settled state back.
PhaseTrace simulate_phase(const Netlist& netlist,
                          std::vector<std::uint8_t>& state,
                          std::span<const DualRail> targets, Phase phase,
                          const DelayModel& delays,
                          const MonitorConfig& monitors);

// ---------------------------------------------------------------------------
// Handshake cycles on adders

struct AdderVector {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool cin = false;

  friend bool operator==(const AdderVector&, const AdderVector&) = default;
};

/// Input/output pair indices resolved from port labels a<i>/b<i>/cin and
/// s<i>/cout (a/b/sum for single-bit blocks; c4 for a bare SCBCLG).
struct AdderPorts {
  int width = 0;
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
  std::size_t cin = 0;
  std::vector<std::size_t> sum;  // empty for carry-only blocks
  std::optional<std::size_t> cout;
  std::optional<std::size_t> cout_alias;
};

/// Throws SimulationError when the netlist does not look like an adder.
AdderPorts resolve_adder_ports(const Netlist& netlist);

/// DATA targets for one vector.
std::vector<DualRail> data_targets(const Netlist& netlist,
                                   const AdderPorts& ports,
                                   const AdderVector& v);

struct CycleResult {
  AdderVector input;
  std::optional<std::uint64_t> sum;  // decoded, when all sum pairs valid
  std::optional<bool> cout;
  std::optional<bool> cout_alias;
  double data_latency = 0.0;
  double rtz_latency = 0.0;
  bool data_completed = false;
  bool rtz_completed = false;
  std::size_t transitions = 0;
  bool race_observed = false;
  std::vector<Finding> findings;

  bool has_errors() const;
};

/// Alternates DATA and RTZ per vector on one simulator. SimulationError
/// messages carry the failing vector index.
std::vector<CycleResult> run_handshake_cycles(
    const Netlist& netlist, std::span<const AdderVector> vectors,
    const DelayModel& delays, const MonitorConfig& monitors);

struct HandshakeSummary {
  std::size_t cycles = 0;
  double worst_data_latency = 0.0;
  double worst_rtz_latency = 0.0;
  std::size_t worst_data_index = 0;
  std::size_t error_findings = 0;
  std::size_t race_observations = 0;
  std::size_t transitions = 0;
};

HandshakeSummary summarize(std::span<const CycleResult> results);

// ---------------------------------------------------------------------------
// File formats

/// One `a_hex,b_hex,cin_bit` record per line; blank lines and '#' comments
/// are skipped. Throws ParseError.
std::vector<AdderVector> parse_vectors(std::string_view text);
std::string emit_vectors(std::span<const AdderVector> vectors, int width);

/// `time,net,value` table with a header row.
std::string trace_to_csv(const Netlist& netlist, const PhaseTrace& trace);

/// Seeded uniform vectors over `width` bits.
std::vector<AdderVector> random_vectors(int width, std::size_t count,
                                        std::uint64_t seed);

/// All 2^(2*width+1) vectors, a fastest, then b, then cin. width <= 12.
std::vector<AdderVector> exhaustive_vectors(int width);

}  // namespace qdiadd
