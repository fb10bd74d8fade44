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

#include "qdiadd/netlist.hpp"
#include "qdiadd/report.hpp"
#include "qdiadd/sim.hpp"

namespace qdiadd {

// ---------------------------------------------------------------------------
// Arithmetic oracle

struct Counterexample {
  AdderVector input;
  std::string expected;
  std::string observed;
};

struct OracleReport {
  std::string design;
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::optional<Counterexample> first;

  bool passed() const { return mismatches == 0; }
  std::string to_text() const;
};

/// Settles each vector through a DATA/RTZ cycle and compares the decoded
/// outputs with a + b + cin. Carry-only blocks compare their carry pairs
/// with (a + b + cin) >> width.
OracleReport oracle_check(const Netlist& netlist,
                          std::span<const AdderVector> vectors,
                          const DelayModel& delays = DelayModel::unit());

// ---------------------------------------------------------------------------
// Alias equivalence

struct AliasReport {
  std::string design;
  bool applicable = false;
  std::size_t cases = 0;
  std::size_t pairs = 0;  // primary/alias pairs compared per case
  std::size_t mismatches = 0;
  std::optional<Counterexample> first;

  bool passed() const { return applicable && mismatches == 0; }
  std::string to_text() const;
};

/// A netlist exposing c4 and c4alias is checked on all 512 valid input
/// combinations. Otherwise every internal alias carry (nets ending in
/// C41alias/C40alias) is compared with its primary twin after each vector
/// of `vectors`. Inapplicable when neither form is present.
AliasReport alias_equivalence_check(const Netlist& netlist,
                                    std::span<const AdderVector> vectors = {});

// ---------------------------------------------------------------------------
// Early-output probes

struct ProbeScenario {
  Phase phase = Phase::Data;
  AdderVector vector;
  /// Input labels kept NULL during DATA or kept valid during RTZ.
  std::vector<std::string> held;
};

struct ProbeResult {
  std::string design;
  ProbeScenario scenario;
  bool witness = false;  // every output pair completed
  double completion_time = 0.0;
  std::vector<std::string> complete;
  std::vector<std::string> incomplete;

  std::string to_text() const;
};

/// Throws ConfigError unless `held` names inputs and is a nonempty strict
/// subset of them.
ProbeResult early_output_probe(const Netlist& netlist,
                               const ProbeScenario& scenario,
                               const DelayModel& delays = DelayModel::unit());

// ---------------------------------------------------------------------------
// Randomized-delay fuzzing

struct FuzzFailure {
  std::size_t trial = 0;
  std::string delay_digest;
  AdderVector vector;
  std::string violation;
};

struct FuzzOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  double min_delay = 0.5;
  double max_delay = 2.0;
  std::vector<AdderVector> pool;  // drawn from when nonempty, else random
  unsigned threads = 0;           // 0: hardware concurrency
};

struct FuzzReport {
  std::string design;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<FuzzFailure> failures;  // trial order
  std::size_t race_trials = 0;        // trials where the alias race fired
  std::size_t races_with_failure = 0;

  bool passed() const { return failures.empty(); }
  std::string to_text() const;
};

/// Each trial draws its own delay assignment and vector from (seed, trial)
/// and runs one DATA + RTZ cycle on a fresh simulator.
FuzzReport qdi_fuzz(const Netlist& netlist, const FuzzOptions& options);

/// Delay model and vector used by trial `trial` of a fuzz run.
DelayModel fuzz_trial_delays(const FuzzOptions& options, std::size_t trial);
AdderVector fuzz_trial_vector(const FuzzOptions& options, int width,
                              std::size_t trial);

/// Hex FNV-1a digest of a delay assignment.
std::string delay_digest(std::span<const double> delays);

// ---------------------------------------------------------------------------
// Mutations

enum class Mutation {
  SwapSumRails,   // exchange the drivers of one sum pair's rails
  DropCElement,   // C2 -> AND2
  DropOrTerm,     // OR<n> -> OR<n-1> (last input removed)
};

std::string_view mutation_name(Mutation m);

/// `target` is an output label (SwapSumRails) or a gate id or id suffix
/// after a '.'. Empty target picks "sum"/"s0", "H1" or "G". Throws
/// ConfigError when the target does not fit the mutation.
Netlist mutate(const Netlist& netlist, Mutation m, std::string_view target = {});

// ---------------------------------------------------------------------------
// Verdict table (check, design, cases, failures, verdict, detail)

ReportTable verdict_table();
void add_verdict(ReportTable& table, const OracleReport& r);
void add_verdict(ReportTable& table, const AliasReport& r);
void add_verdict(ReportTable& table, const ProbeResult& r);
void add_verdict(ReportTable& table, const FuzzReport& r);

}  // namespace qdiadd
