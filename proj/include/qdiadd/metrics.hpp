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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdiadd/generators.hpp"
#include "qdiadd/netlist.hpp"
#include "qdiadd/report.hpp"
#include "qdiadd/sim.hpp"

namespace qdiadd {

// Block areas in um^2, function blocks only.
struct ComponentAreaTable {
  double fa_eo = 27.45;
  double sol_eo = 22.36;
  double scbclg_plain = 113.35;
  double scbclg_alias = 118.43;
  double fa_weak_24 = 41.17;
  double fa_weak_25 = 39.65;
  double sol_weak = 34.56;
};

struct ComposedArea {
  bool priced = false;
  double area = 0.0;
  std::string breakdown;  // "8 x SCBCLG_alias + 24 x FA_eo + ..." or reason
};

/// Sums block areas by structural count. RCLA internals are not priced.
ComposedArea compose_area(const AdderConfig& config,
                          const ComponentAreaTable& table = {});

struct ReferenceRow {
  int group = 0;
  std::string design;
  double power_uw = 0.0;
  double latency_ns = 0.0;
  double area_um2 = 0.0;
};

const std::vector<ReferenceRow>& bundled_reference();

/// Column-separated rows with header group,design,power_uW,latency_ns,
/// area_um2. Throws ParseError.
std::vector<ReferenceRow> parse_reference(std::string_view text);
std::string emit_reference(std::span<const ReferenceRow> rows);

enum class Metric { Power, Latency, Area };

std::string_view metric_name(Metric m);

// A stated percentage recomputed from reference rows. `baseline` and
// `candidate` are averages over the listed rows; the change is
// (baseline - candidate) / baseline for reductions and
// (candidate - baseline) / baseline for increases.
struct PercentClaim {
  std::string name;
  Metric metric = Metric::Latency;
  bool reduction = true;
  double stated = 0.0;
  double tolerance = 0.0;
  std::vector<std::string> baseline_rows;  // "G4 SCBCLA (Without alias logic)"
  std::vector<std::string> candidate_rows;
  bool complete = false;
  double baseline = 0.0;
  double candidate = 0.0;
  double computed = 0.0;  // percent

  bool passed() const;
  std::string formula() const;
};

std::vector<PercentClaim> compare_table(std::span<const ReferenceRow> rows);

// Reference area delta between two rows against the composed delta.
struct AreaIdentity {
  std::string name;
  std::string operands;
  bool complete = false;
  double reference = 0.0;
  double composed = 0.0;
  double tolerance = 0.0;

  bool passed() const;
};

std::vector<AreaIdentity> area_identities(std::span<const ReferenceRow> rows,
                                          const ComponentAreaTable& table = {});

/// Reference area minus composed area for each Group4 row (register and
/// completion-detector overhead, informational).
ReportTable overhead_table(std::span<const ReferenceRow> rows,
                           const ComponentAreaTable& table = {});

// ---------------------------------------------------------------------------
// Designs

/// The four Group4 analogues (32-bit, m = 4): plain, hybrid plain, alias,
/// hybrid alias; with `include_rcla`, RCLA and RCLA-RCA hybrid follow.
std::vector<AdderConfig> design_matrix(bool include_rcla);

/// Reference table group of a config's analogue (3 for RCLA, 4 otherwise).
int reference_group(const AdderConfig& config);

/// Vectors that sensitise long carry paths (full propagate runs with a
/// single generate/kill at each bit, both carry-in values), followed by
/// `random_count` seeded random vectors.
std::vector<AdderVector> critical_vectors(int width, std::size_t random_count,
                                          std::uint64_t seed);

struct LatencyRow {
  AdderConfig config;
  std::string label;
  int group = 0;
  long transistors = 0;
  int gates = 0;
  ComposedArea area;
  double static_depth = 0.0;
  double worst_latency = 0.0;
  std::size_t vectors = 0;
  std::size_t errors = 0;
  double mean_transitions = 0.0;
  std::optional<double> reference_latency_ns;
};

struct OrderingCheck {
  std::string name;
  std::string detail;
  bool passed = false;
};

struct LatencyReport {
  std::vector<LatencyRow> rows;
  std::vector<OrderingCheck> checks;

  bool passed() const;
  ReportTable table() const;
  ReportTable checks_table() const;
};

LatencyReport latency_report(std::span<const AdderConfig> designs,
                             std::span<const AdderVector> vectors,
                             const DelayModel& delays = DelayModel::unit(),
                             std::span<const ReferenceRow> reference =
                                 bundled_reference());

// ---------------------------------------------------------------------------
// Section-carry hops

struct HopReport {
  int section = 0;
  std::string from;  // carry-in rail net
  std::string to;    // carry-out rail net
  KindCounts kinds;
  long transistors = 0;
  double depth = 0.0;
};

/// For each SCBCLG section: the longest unit-delay path from the section's
/// carry-in rails to its outgoing carry rails (the alias pair when present).
std::vector<HopReport> section_hops(const Netlist& netlist);

// ---------------------------------------------------------------------------
// Tables

ReportTable claims_table(std::span<const PercentClaim> claims);
ReportTable identities_table(std::span<const AreaIdentity> ids);
ReportTable reference_table(std::span<const ReferenceRow> rows);

}  // namespace qdiadd
