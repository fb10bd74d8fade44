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
#include <charconv>
#include <iomanip>
#include <random>
#include <sstream>

#include "qdiadd/error.hpp"
#include "qdiadd/sim.hpp"

namespace qdiadd {

namespace {

std::optional<std::size_t> input_index(const Netlist& n, std::string_view l) {
  const auto* p = n.find_input(l);
  if (!p) return std::nullopt;
  return static_cast<std::size_t>(p - n.inputs().data());
}

std::optional<std::size_t> output_index(const Netlist& n, std::string_view l) {
  const auto* p = n.find_output(l);
  if (!p) return std::nullopt;
  return static_cast<std::size_t>(p - n.outputs().data());
}

}  // namespace

AdderPorts resolve_adder_ports(const Netlist& netlist) {
  AdderPorts ports;
  const auto cin = input_index(netlist, "cin");
  if (!cin) {
    throw SimulationError("netlist '" + netlist.name() + "' has no cin input");
  }
  ports.cin = *cin;

  if (auto a = input_index(netlist, "a")) {
    const auto b = input_index(netlist, "b");
    if (!b) throw SimulationError("single-bit block without input b");
    ports.width = 1;
    ports.a.push_back(*a);
    ports.b.push_back(*b);
    if (auto s = output_index(netlist, "sum")) ports.sum.push_back(*s);
  } else {
    for (int i = 0;; ++i) {
      const auto a = input_index(netlist, "a" + std::to_string(i));
      if (!a) break;
      const auto b = input_index(netlist, "b" + std::to_string(i));
      if (!b) {
        throw SimulationError("input a" + std::to_string(i) +
                              " has no matching b" + std::to_string(i));
      }
      ports.a.push_back(*a);
      ports.b.push_back(*b);
    }
    ports.width = static_cast<int>(ports.a.size());
    if (ports.width == 0) {
      throw SimulationError("netlist '" + netlist.name() +
                            "' has no operand inputs");
    }
    for (int i = 0; i < ports.width; ++i) {
      if (auto s = output_index(netlist, "s" + std::to_string(i))) {
        ports.sum.push_back(*s);
      }
    }
    if (!ports.sum.empty() &&
        static_cast<int>(ports.sum.size()) != ports.width) {
      throw SimulationError("netlist '" + netlist.name() +
                            "' declares only some sum outputs");
    }
  }
  if (ports.width > 63) throw SimulationError("adder wider than 63 bits");

  ports.cout = output_index(netlist, "cout");
  if (!ports.cout) ports.cout = output_index(netlist, "c4");
  ports.cout_alias = output_index(netlist, "c4alias");
  if (ports.sum.empty() && !ports.cout) {
    throw SimulationError("netlist '" + netlist.name() +
                          "' has neither sum nor carry outputs");
  }
  return ports;
}

std::vector<DualRail> data_targets(const Netlist& netlist,
                                   const AdderPorts& ports,
                                   const AdderVector& v) {
  std::vector<DualRail> targets(netlist.inputs().size(), DualRail::Null);
  auto bit = [](bool x) { return x ? DualRail::One : DualRail::Zero; };
  for (int i = 0; i < ports.width; ++i) {
    targets[ports.a[static_cast<std::size_t>(i)]] = bit((v.a >> i) & 1U);
    targets[ports.b[static_cast<std::size_t>(i)]] = bit((v.b >> i) & 1U);
  }
  targets[ports.cin] = bit(v.cin);
  return targets;
}

bool CycleResult::has_errors() const {
  return std::any_of(findings.begin(), findings.end(),
                     [](const Finding& f) { return f.is_error(); });
}

std::vector<CycleResult> run_handshake_cycles(
    const Netlist& netlist, std::span<const AdderVector> vectors,
    const DelayModel& delays, const MonitorConfig& monitors) {
  std::vector<CycleResult> results;
  if (vectors.empty()) return results;
  const auto ports = resolve_adder_ports(netlist);
  Simulator sim(netlist, delays, monitors);
  const std::vector<DualRail> spacer(netlist.inputs().size(), DualRail::Null);
  const std::uint64_t mask =
      ports.width >= 64 ? ~0ULL : ((1ULL << ports.width) - 1);

  results.reserve(vectors.size());
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    CycleResult r;
    r.input = vectors[k];
    if ((r.input.a & ~mask) || (r.input.b & ~mask)) {
      throw SimulationError("vector " + std::to_string(k) +
                            ": operand wider than " +
                            std::to_string(ports.width) + " bits");
    }
    try {
      const auto targets = data_targets(netlist, ports, r.input);
      auto data = sim.run_phase(Phase::Data, targets);
      r.data_completed = data.completed;
      r.data_latency = data.completion_time;
      r.transitions += data.transitions;

      if (!ports.sum.empty()) {
        std::uint64_t sum = 0;
        bool ok = true;
        for (std::size_t i = 0; i < ports.sum.size(); ++i) {
          const auto v = sim.output(ports.sum[i]);
          if (!is_valid(v)) ok = false;
          if (v == DualRail::One) sum |= 1ULL << i;
        }
        if (ok) r.sum = sum;
      }
      if (ports.cout && is_valid(sim.output(*ports.cout))) {
        r.cout = sim.output(*ports.cout) == DualRail::One;
      }
      if (ports.cout_alias && is_valid(sim.output(*ports.cout_alias))) {
        r.cout_alias = sim.output(*ports.cout_alias) == DualRail::One;
      }

      auto rtz = sim.run_phase(Phase::Rtz, spacer);
      r.rtz_completed = rtz.completed;
      r.rtz_latency = rtz.completion_time;
      r.transitions += rtz.transitions;
      r.race_observed = rtz.count(FindingKind::AliasRace) > 0;

      r.findings = std::move(data.findings);
      r.findings.insert(r.findings.end(), rtz.findings.begin(),
                        rtz.findings.end());
    } catch (const SimulationError& e) {
      throw SimulationError("vector " + std::to_string(k) + ": " + e.what());
    }
    results.push_back(std::move(r));
  }
  return results;
}

HandshakeSummary summarize(std::span<const CycleResult> results) {
  HandshakeSummary s;
  s.cycles = results.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (r.data_latency > s.worst_data_latency) {
      s.worst_data_latency = r.data_latency;
      s.worst_data_index = i;
    }
    s.worst_rtz_latency = std::max(s.worst_rtz_latency, r.rtz_latency);
    for (const auto& f : r.findings) {
      if (f.is_error()) ++s.error_findings;
    }
    if (r.race_observed) ++s.race_observations;
    s.transitions += r.transitions;
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::uint64_t parse_hex(std::string_view tok, int line) {
  tok = trim(tok);
  if (tok.starts_with("0x") || tok.starts_with("0X")) tok.remove_prefix(2);
  std::uint64_t value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value, 16);
  if (tok.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError(line, "bad hex operand '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

std::vector<AdderVector> parse_vectors(std::string_view text) {
  std::vector<AdderVector> vectors;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto c1 = line.find(',');
    const auto c2 =
        c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos ||
        line.find(',', c2 + 1) != std::string_view::npos) {
      throw ParseError(line_no, "expected 'a_hex,b_hex,cin_bit'");
    }
    AdderVector v;
    v.a = parse_hex(line.substr(0, c1), line_no);
    v.b = parse_hex(line.substr(c1 + 1, c2 - c1 - 1), line_no);
    const auto cin = trim(line.substr(c2 + 1));
    if (cin != "0" && cin != "1") {
      throw ParseError(line_no, "carry-in must be 0 or 1");
    }
    v.cin = cin == "1";
    vectors.push_back(v);
  }
  return vectors;
}

std::string emit_vectors(std::span<const AdderVector> vectors, int width) {
  std::ostringstream out;
  const int digits = std::max(1, (width + 3) / 4);
  out << std::hex << std::setfill('0');
  for (const auto& v : vectors) {
    out << std::setw(digits) << v.a << "," << std::setw(digits) << v.b << ","
        << (v.cin ? 1 : 0) << "\n";
  }
  return out.str();
}

std::string trace_to_csv(const Netlist& netlist, const PhaseTrace& trace) {
  std::ostringstream out;
  out << "time,net,value\n";
  for (const auto& e : trace.events) {
    out << e.time << "," << netlist.net_name(e.net) << ","
        << (e.value ? 1 : 0) << "\n";
  }
  return out.str();
}

std::vector<AdderVector> random_vectors(int width, std::size_t count,
                                        std::uint64_t seed) {
  if (width < 1 || width > 63) throw ConfigError("vector width out of range");
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = (1ULL << width) - 1;
  std::vector<AdderVector> vectors(count);
  for (auto& v : vectors) {
    v.a = rng() & mask;
    v.b = rng() & mask;
    v.cin = (rng() & 1U) != 0;
  }
  return vectors;
}

std::vector<AdderVector> exhaustive_vectors(int width) {
  if (width < 1 || width > 12) {
    throw ConfigError("exhaustive enumeration supports widths 1..12");
  }
  const std::uint64_t mask = (1ULL << width) - 1;
  const std::uint64_t total = 1ULL << (2 * width + 1);
  std::vector<AdderVector> vectors;
  vectors.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    vectors.push_back({i & mask, (i >> width) & mask, ((i >> (2 * width)) & 1U) != 0});
  }
  return vectors;
}

}  // namespace qdiadd
