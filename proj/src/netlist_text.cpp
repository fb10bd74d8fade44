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
#include <sstream>
#include <map>

#include "qdiadd/error.hpp"
#include "qdiadd/netlist.hpp"

namespace qdiadd {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '.';
  });
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

std::string emit_netlist(const Netlist& netlist) {
  std::ostringstream out;
  auto name = [&](NetId id) -> const std::string& {
    return netlist.net_name(id);
  };
  out << "module " << netlist.name() << "\n";
  for (const auto& p : netlist.inputs()) {
    out << "input " << p.label << " " << name(p.rail1) << " " << name(p.rail0)
        << "\n";
  }
  for (const auto& p : netlist.probes()) {
    out << "probe " << p.label << " " << name(p.net) << "\n";
  }

  std::vector<std::size_t> order;
  try {
    order = topological_gate_order(netlist);
  } catch (const InvalidNetlistError&) {
    order.resize(netlist.gates().size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  }
  for (auto g : order) {
    const auto& gate = netlist.gates()[g];
    out << "gate " << gate.id << " " << cell_name(gate.kind) << " "
        << name(gate.output);
    for (NetId in : gate.inputs) out << " " << name(in);
    out << "\n";
  }
  for (const auto& p : netlist.outputs()) {
    out << "output " << p.label << " " << name(p.rail1) << " "
        << name(p.rail0) << "\n";
  }
  out << "end\n";
  return out.str();
}

Netlist parse_netlist(std::string_view text) {
  Netlist netlist;
  bool have_module = false;
  bool ended = false;
  // First line that references each net, and whether it is ever declared.
  std::map<NetId, int> first_use;
  std::vector<bool> declared;

  auto ident = [](std::string_view tok, int line, const char* what) {
    if (!is_identifier(tok)) {
      throw ParseError(line, std::string("invalid ") + what + " '" +
                                 std::string(tok) + "'");
    }
    return std::string(tok);
  };
  auto declare = [&](std::string_view tok, int line) {
    const NetId id = netlist.net(ident(tok, line, "net name"));
    if (declared.size() <= id) declared.resize(id + 1, false);
    declared[id] = true;
    return id;
  };
  auto use = [&](std::string_view tok, int line) {
    const NetId id = netlist.net(ident(tok, line, "net name"));
    if (declared.size() <= id) declared.resize(id + 1, false);
    first_use.try_emplace(id, line);
    return id;
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split(line);
    if (tokens.empty() || tokens[0].starts_with("#")) continue;
    if (ended) throw ParseError(line_no, "content after 'end'");

    const auto directive = tokens[0];
    if (!have_module) {
      if (directive != "module" || tokens.size() != 2) {
        throw ParseError(line_no, "expected 'module <name>'");
      }
      netlist.set_name(ident(tokens[1], line_no, "module name"));
      have_module = true;
      continue;
    }

    if (directive == "module") {
      throw ParseError(line_no, "nested 'module'");
    } else if (directive == "input" || directive == "output") {
      if (tokens.size() != 4) {
        throw ParseError(line_no, "expected '" + std::string(directive) +
                                      " <label> <rail1> <rail0>'");
      }
      auto label = ident(tokens[1], line_no, "label");
      if (directive == "input") {
        const NetId r1 = declare(tokens[2], line_no);
        const NetId r0 = declare(tokens[3], line_no);
        netlist.add_input(std::move(label), r1, r0);
      } else {
        const NetId r1 = use(tokens[2], line_no);
        const NetId r0 = use(tokens[3], line_no);
        netlist.add_output(std::move(label), r1, r0);
      }
    } else if (directive == "probe") {
      if (tokens.size() != 3) {
        throw ParseError(line_no, "expected 'probe <label> <net>'");
      }
      auto label = ident(tokens[1], line_no, "label");
      netlist.add_probe(std::move(label), use(tokens[2], line_no));
    } else if (directive == "gate") {
      if (tokens.size() < 4) {
        throw ParseError(line_no,
                         "expected 'gate <id> <KIND> <out-net> <in-net>...'");
      }
      auto id = ident(tokens[1], line_no, "gate id");
      const auto kind = parse_cell_kind(tokens[2]);
      if (!kind) {
        throw ParseError(line_no,
                         "unknown cell kind '" + std::string(tokens[2]) + "'");
      }
      const auto& spec = cell_spec(*kind);
      const auto given = tokens.size() - 4;
      if (static_cast<int>(given) != spec.arity) {
        throw ParseError(line_no, std::string(spec.name) + " expects " +
                                      std::to_string(spec.arity) +
                                      " inputs, got " + std::to_string(given));
      }
      const NetId out = declare(tokens[3], line_no);
      std::vector<NetId> inputs;
      for (std::size_t i = 4; i < tokens.size(); ++i) {
        inputs.push_back(use(tokens[i], line_no));
      }
      netlist.add_gate(std::move(id), *kind, std::move(inputs), out);
    } else if (directive == "end") {
      if (tokens.size() != 1) throw ParseError(line_no, "'end' takes no args");
      ended = true;
    } else {
      throw ParseError(line_no,
                       "unknown directive '" + std::string(directive) + "'");
    }
  }

  if (!have_module) throw ParseError(0, "empty netlist text");
  if (!ended) throw ParseError(line_no, "missing 'end'");

  int worst_line = 0;
  std::string undeclared;
  for (const auto& [id, line] : first_use) {
    if (!declared[id] && (undeclared.empty() || line < worst_line)) {  // earliest line wins
      worst_line = line;
      undeclared = netlist.net_name(id);
    }
  }
  if (!undeclared.empty()) {
    throw ParseError(worst_line, "reference to undeclared net '" +
                                     undeclared + "'");
  }
  return netlist;
}

}  // namespace qdiadd
