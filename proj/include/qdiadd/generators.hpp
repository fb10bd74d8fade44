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

#include <string>

#include "qdiadd/netlist.hpp"

namespace qdiadd {

enum class Architecture { RCA, SCBCLA, RCLA };

std::string_view architecture_name(Architecture arch);

/// Parameters of a generated adder. Sections are `section` bits wide; a
/// nonzero `hybrid_rca_width` replaces that many least significant bits with
/// a ripple-carry chain.
struct AdderConfig {
  Architecture architecture = Architecture::SCBCLA;
  int width = 32;
  int section = 4;
  bool alias = false;
  int hybrid_rca_width = 0;
};

/// Throws ConfigError when the configuration cannot be generated.
void check_config(const AdderConfig& config);

/// Row label used in the bundled reference table ("SCBCLA-RCA hybrid (With
/// alias logic)", "RCLA", ...).
std::string design_label(const AdderConfig& config);

// Building blocks. Port labels: a, b, cin -> sum, cout for the FA/SOL;
// a<i>, b<i>, cin -> s<i>, cout for adders; the SCBCLG exposes c4 and, with
// alias logic, c4alias, plus the probe N (section propagate node).

Netlist gen_full_adder_eo();
Netlist gen_sol_eo();
Netlist gen_rca(int width);
Netlist gen_scbclg(int section, bool alias);
Netlist gen_scbcla(int width, int section, bool alias);
Netlist gen_scbcla_rca_hybrid(int width, int section, bool alias,
                              int rca_width);
Netlist gen_rcla(int width, int section);
Netlist gen_rcla_rca_hybrid(int width, int section, int rca_width);

/// One OR2 per pair feeding a C3/C2 tree. Inputs d0..d<n-1>; the single
/// done wire is exposed as probe "done".
Netlist gen_completion_detector(int pair_count);

/// Dispatches on architecture and hybrid width.
Netlist generate(const AdderConfig& config);

}  // namespace qdiadd
