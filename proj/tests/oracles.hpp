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

// Reference models used as test oracles. They share no code with the
// simulator or the timing analysis.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qdiadd/netlist.hpp"

namespace qdiadd::testing {

// Zero-delay fixpoint evaluation: sweeps all gates until nothing changes.
// `values` holds the previous settled state (C-elements keep it).
inline void settle(const Netlist& n, std::vector<std::uint8_t>& values) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& g : n.gates()) {
      int ones = 0;
      for (auto in : g.inputs) ones += values[in];
      const int arity = static_cast<int>(g.inputs.size());
      bool out = false;
      switch (g.kind) {
        case CellKind::INV: out = ones == 0; break;
        case CellKind::BUF: out = ones == 1; break;
        case CellKind::AND2:
        case CellKind::AND3:
        case CellKind::AND4: out = ones == arity; break;
        case CellKind::OR2:
        case CellKind::OR3:
        case CellKind::OR4: out = ones > 0; break;
        case CellKind::AO22:
        case CellKind::ALIAS:
          out = (values[g.inputs[0]] && values[g.inputs[1]]) ||
                (values[g.inputs[2]] && values[g.inputs[3]]);
          break;
        case CellKind::C2:
        case CellKind::C3:
          out = ones == arity ? true : ones == 0 ? false : values[g.output] != 0;
          break;
      }
      if (values[g.output] != out) {
        values[g.output] = out;
        changed = true;
      }
    }
  }
}

// Drives named inputs to dual-rail values (-1 NULL, 0, 1) and settles from
// the spacer state. Returns output label -> (-1 NULL, 0, 1, 2 invalid).
inline std::map<std::string, int> settle_outputs(
    const Netlist& n, const std::map<std::string, int>& inputs) {
  std::vector<std::uint8_t> values(n.net_count(), 0);
  for (const auto& p : n.inputs()) {
    const auto it = inputs.find(p.label);
    const int v = it == inputs.end() ? -1 : it->second;
    values[p.rail1] = v == 1;
    values[p.rail0] = v == 0;
  }
  settle(n, values);
  std::map<std::string, int> out;
  for (const auto& p : n.outputs()) {
    const bool t = values[p.rail1], f = values[p.rail0];
    out[p.label] = t && f ? 2 : t ? 1 : f ? 0 : -1;
  }
  return out;
}

// Adder inputs for a, b, cin using a<i>/b<i> labels (a/b for one bit).
inline std::map<std::string, int> adder_inputs(const Netlist& n, int width,
                                               std::uint64_t a,
                                               std::uint64_t b, bool cin) {
  std::map<std::string, int> in;
  if (n.find_input("a")) {
    in["a"] = a & 1;
    in["b"] = b & 1;
  } else {
    for (int i = 0; i < width; ++i) {
      in["a" + std::to_string(i)] = (a >> i) & 1;
      in["b" + std::to_string(i)] = (b >> i) & 1;
    }
  }
  in["cin"] = cin;
  return in;
}

// Longest unit-delay path by memoized DFS from every input rail.
inline int dfs_longest_path(const Netlist& n) {
  std::map<NetId, std::vector<std::size_t>> readers;
  for (std::size_t i = 0; i < n.gates().size(); ++i) {
    for (auto in : n.gates()[i].inputs) readers[in].push_back(i);
  }
  std::vector<bool> is_out(n.net_count(), false);
  for (const auto& p : n.outputs()) is_out[p.rail1] = is_out[p.rail0] = true;
  std::map<NetId, int> memo;
  // Longest number of gates from `net` to any output rail; -1 if none.
  std::function<int(NetId)> from = [&](NetId net) -> int {
    if (auto it = memo.find(net); it != memo.end()) return it->second;
    int best = is_out[net] ? 0 : -1;
    for (auto gi : readers[net]) {
      const int rest = from(n.gates()[gi].output);
      if (rest >= 0) best = std::max(best, rest + 1);
    }
    memo[net] = best;
    return best;
  };
  int best = -1;
  for (const auto& p : n.inputs()) {
    best = std::max({best, from(p.rail1), from(p.rail0)});
  }
  return best;
}

}  // namespace qdiadd::testing
