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

#include "qdiadd/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>

#include "qdiadd/error.hpp"

namespace qdiadd {

namespace {

std::string hex(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string vector_text(const AdderVector& v) {
  return "a=" + hex(v.a) + " b=" + hex(v.b) + " cin=" + (v.cin ? "1" : "0");
}

std::string bit_text(std::optional<bool> b) {
  return b ? (*b ? "1" : "0") : "?";
}

// Compares one settled cycle against integer addition.
std::optional<Counterexample> compare(const AdderPorts& ports,
                                      const CycleResult& r) {
  const auto total = r.input.a + r.input.b + (r.input.cin ? 1 : 0);
  const auto mask = (1ULL << ports.width) - 1;
  const bool carry = (total >> ports.width) & 1U;
  bool ok = true;
  std::string expected;
  std::string observed;
  if (!ports.sum.empty()) {
    expected = "sum=" + hex(total & mask);
    observed = "sum=" + (r.sum ? hex(*r.sum) : std::string("?"));
    ok = r.sum && *r.sum == (total & mask);
  }
  auto check_bit = [&](std::string_view name, std::optional<bool> got) {
    if (!expected.empty()) {
      expected += " ";
      observed += " ";
    }
    expected += std::string(name) + "=" + (carry ? "1" : "0");
    observed += std::string(name) + "=" + bit_text(got);
    if (!got || *got != carry) ok = false;
  };
  if (ports.cout) check_bit("cout", r.cout);
  if (ports.cout_alias) check_bit("cout_alias", r.cout_alias);
  if (ok) return std::nullopt;
  return Counterexample{r.input, expected, observed};
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_state(std::uint64_t seed, std::size_t trial) {
  return splitmix(splitmix(seed) ^ (static_cast<std::uint64_t>(trial) *
                                    0xD1B54A32D192ED03ULL));
}

std::string finding_text(const Finding& f) {
  std::string s = std::string(finding_kind_name(f.kind)) + " at t=" +
                  fixed(f.time, 3) + " on " + f.subject;
  if (!f.detail.empty()) s += " (" + f.detail + ")";
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string OracleReport::to_text() const {
  std::ostringstream out;
  out << "oracle " << design << ": " << (passed() ? "PASS" : "FAIL") << ", "
      << cases << " cases, " << mismatches << " mismatches\n";
  if (first) {
    out << "  first counterexample " << vector_text(first->input)
        << ": expected " << first->expected << ", observed "
        << first->observed << "\n";
  }
  return out.str();
}

OracleReport oracle_check(const Netlist& netlist,
                          std::span<const AdderVector> vectors,
                          const DelayModel& delays) {
  OracleReport report;
  report.design = netlist.name();
  const auto ports = resolve_adder_ports(netlist);
  auto monitors = default_monitors(netlist);
  const auto results = run_handshake_cycles(netlist, vectors, delays, monitors);
  report.cases = results.size();
  for (const auto& r : results) {
    if (auto cx = compare(ports, r)) {
      ++report.mismatches;
      if (!report.first) report.first = std::move(cx);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

std::string AliasReport::to_text() const {
  std::ostringstream out;
  out << "alias equivalence " << design << ": ";
  if (!applicable) {
    out << "N/A (no alias carry pair)\n";
    return out.str();
  }
  out << (passed() ? "PASS" : "FAIL") << ", " << cases << " cases, " << pairs
      << " pair(s) each, " << mismatches << " mismatches\n";
  if (first) {
    out << "  first mismatch " << vector_text(first->input) << ": "
        << first->expected << " vs " << first->observed << "\n";
  }
  return out.str();
}

AliasReport alias_equivalence_check(const Netlist& netlist,
                                    std::span<const AdderVector> vectors) {
  AliasReport report;
  report.design = netlist.name();
  const auto ports = resolve_adder_ports(netlist);

  if (ports.cout && ports.cout_alias) {
    report.applicable = true;
    report.pairs = 1;
    std::vector<AdderVector> all;
    if (vectors.empty()) {
      all = exhaustive_vectors(ports.width);
      vectors = all;
    }
    auto results = run_handshake_cycles(netlist, vectors, DelayModel::unit(),
                                        default_monitors(netlist));
    report.cases = results.size();
    for (const auto& r : results) {
      if (!r.cout || !r.cout_alias || *r.cout != *r.cout_alias) {
        ++report.mismatches;
        if (!report.first) {
          report.first = Counterexample{r.input, "c4=" + bit_text(r.cout),
                                        "c4alias=" + bit_text(r.cout_alias)};
        }
      }
    }
    return report;
  }

  struct Twin {
    std::string name;
    NetId p1, p0, a1, a0;
  };
  std::vector<Twin> twins;
  for (NetId id = 0; id < netlist.net_count(); ++id) {
    const auto& name = netlist.net_name(id);
    constexpr std::string_view suffix = "C41alias";
    if (!name.ends_with(suffix)) continue;
    const auto stem = name.substr(0, name.size() - suffix.size());
    const auto a0 = netlist.find_net(stem + "C40alias");
    const auto p1 = netlist.find_net(stem + "C41");
    const auto p0 = netlist.find_net(stem + "C40");
    if (a0 && p1 && p0) twins.push_back({stem, *p1, *p0, id, *a0});
  }
  if (twins.empty()) return report;
  report.applicable = true;
  report.pairs = twins.size();

  std::vector<AdderVector> generated;
  if (vectors.empty()) {
    generated = ports.width <= 6 ? exhaustive_vectors(ports.width)
                                 : random_vectors(ports.width, 4096, 1);
    vectors = generated;
  }
  Simulator sim(netlist, DelayModel::unit(), default_monitors(netlist));
  const std::vector<DualRail> spacer(netlist.inputs().size(), DualRail::Null);
  for (const auto& v : vectors) {
    sim.run_phase(Phase::Data, data_targets(netlist, ports, v));
    ++report.cases;
    for (const auto& t : twins) {
      const auto p = classify_pair(sim.value(t.p1), sim.value(t.p0));
      const auto a = classify_pair(sim.value(t.a1), sim.value(t.a0));
      if (p != a || !is_valid(p)) {
        ++report.mismatches;
        if (!report.first) {
          report.first = Counterexample{
              v, t.name + "C4=" + std::string(dual_rail_name(p)),
              t.name + "C4alias=" + std::string(dual_rail_name(a))};
        }
        break;
      }
    }
    sim.run_phase(Phase::Rtz, spacer);
  }
  return report;
}

// ---------------------------------------------------------------------------

std::string ProbeResult::to_text() const {
  std::ostringstream out;
  const bool data = scenario.phase == Phase::Data;
  out << (data ? "early set " : "early reset ") << design << " "
      << vector_text(scenario.vector) << " held {";
  for (std::size_t i = 0; i < scenario.held.size(); ++i) {
    out << (i ? "," : "") << scenario.held[i];
  }
  out << "}: " << (witness ? "WITNESS" : "NO WITNESS") << ", "
      << complete.size() << "/" << complete.size() + incomplete.size()
      << " outputs " << (data ? "valid" : "null");
  if (witness) out << " at t=" << fixed(completion_time, 3);
  out << "\n";
  if (!incomplete.empty()) {
    out << "  incomplete:";
    for (const auto& l : incomplete) out << " " << l;
    out << "\n";
  }
  return out.str();
}

ProbeResult early_output_probe(const Netlist& netlist,
                               const ProbeScenario& scenario,
                               const DelayModel& delays) {
  const auto& inputs = netlist.inputs();
  if (scenario.held.empty()) throw ConfigError("probe holds no inputs");
  std::vector<bool> held(inputs.size(), false);
  for (const auto& label : scenario.held) {
    const auto* p = netlist.find_input(label);
    if (!p) throw ConfigError("probe holds unknown input '" + label + "'");
    held[static_cast<std::size_t>(p - inputs.data())] = true;
  }
  if (std::all_of(held.begin(), held.end(), [](bool h) { return h; })) {
    throw ConfigError("probe must leave at least one input free");
  }

  ProbeResult result;
  result.design = netlist.name();
  result.scenario = scenario;
  const auto ports = resolve_adder_ports(netlist);
  auto monitors = default_monitors(netlist);
  Simulator sim(netlist, delays, monitors);
  auto targets = data_targets(netlist, ports, scenario.vector);

  PhaseTrace trace;
  if (scenario.phase == Phase::Data) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (held[i]) targets[i] = DualRail::Null;
    }
    trace = sim.run_phase(Phase::Data, targets);
  } else {
    sim.run_phase(Phase::Data, targets);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (!held[i]) targets[i] = DualRail::Null;
    }
    trace = sim.run_phase(Phase::Rtz, targets);
  }

  for (std::size_t i = 0; i < netlist.outputs().size(); ++i) {
    const auto v = sim.output(i);
    const bool done =
        scenario.phase == Phase::Data ? is_valid(v) : v == DualRail::Null;
    (done ? result.complete : result.incomplete)
        .push_back(netlist.outputs()[i].label);
  }
  result.witness = result.incomplete.empty();
  result.completion_time =
      trace.completed ? trace.completion_time : trace.quiescence_time;
  return result;
}

// ---------------------------------------------------------------------------

std::string delay_digest(std::span<const double> delays) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double d : delays) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &d, sizeof d);
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001b3ULL;
    }
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

DelayModel fuzz_trial_delays(const FuzzOptions& options, std::size_t trial) {
  return DelayModel::random(splitmix(trial_state(options.seed, trial)),
                            options.min_delay, options.max_delay);
}

AdderVector fuzz_trial_vector(const FuzzOptions& options, int width,
                              std::size_t trial) {
  std::mt19937_64 rng(splitmix(trial_state(options.seed, trial) + 1));
  if (!options.pool.empty()) return options.pool[rng() % options.pool.size()];
  const std::uint64_t mask = (1ULL << width) - 1;
  AdderVector v;
  v.a = rng() & mask;
  v.b = rng() & mask;
  v.cin = (rng() & 1U) != 0;
  return v;
}

std::string FuzzReport::to_text() const {
  std::ostringstream out;
  out << "fuzz " << design << ": " << (passed() ? "PASS" : "FAIL") << ", "
      << trials << " trials, seed " << seed << ", " << failures.size()
      << " failures, alias race in " << race_trials << " trials ("
      << races_with_failure << " with a failure)\n";
  for (std::size_t i = 0; i < failures.size() && i < 10; ++i) {
    const auto& f = failures[i];
    out << "  trial " << f.trial << " delays " << f.delay_digest << " "
        << vector_text(f.vector) << ": " << f.violation << "\n";
  }
  if (failures.size() > 10) {
    out << "  ... " << failures.size() - 10 << " more\n";
  }
  return out.str();
}

FuzzReport qdi_fuzz(const Netlist& netlist, const FuzzOptions& options) {
  if (options.trials < 1) throw ConfigError("fuzz needs at least one trial");
  DelayModel::random(options.seed, options.min_delay, options.max_delay).check();
  const auto ports = resolve_adder_ports(netlist);
  const auto monitors = default_monitors(netlist);

  FuzzReport report;
  report.design = netlist.name();
  report.trials = options.trials;
  report.seed = options.seed;

  std::vector<std::optional<FuzzFailure>> failures(options.trials);
  std::vector<std::uint8_t> races(options.trials, 0);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= options.trials) return;
      const auto delays = fuzz_trial_delays(options, t);
      const AdderVector v[1] = {fuzz_trial_vector(options, ports.width, t)};
      std::string violation;
      try {
        const auto r = run_handshake_cycles(netlist, v, delays, monitors);
        races[t] = r[0].race_observed ? 1 : 0;
        for (const auto& f : r[0].findings) {
          if (f.is_error()) {
            violation = finding_text(f);
            break;
          }
        }
        if (violation.empty()) {
          if (auto cx = compare(ports, r[0])) {
            violation = "oracle mismatch: expected " + cx->expected +
                        ", observed " + cx->observed;
          } else if (!r[0].data_completed || !r[0].rtz_completed) {
            violation = "phase did not complete";
          }
        }
      } catch (const Error& e) {
        violation = e.what();
      }
      if (!violation.empty()) {
        failures[t] = FuzzFailure{t, delay_digest(delays.assign(netlist)),
                                  v[0], violation};
      }
    }
  };

  unsigned threads = options.threads ? options.threads
                                     : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, options.trials));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::size_t t = 0; t < options.trials; ++t) {
    if (races[t]) {
      ++report.race_trials;
      if (failures[t]) ++report.races_with_failure;
    }
    if (failures[t]) report.failures.push_back(std::move(*failures[t]));
  }
  return report;
}

// ---------------------------------------------------------------------------

std::string_view mutation_name(Mutation m) {
  switch (m) {
    case Mutation::SwapSumRails: return "swap-sum-rails";
    case Mutation::DropCElement: return "drop-c-element";
    case Mutation::DropOrTerm: return "drop-or-term";
  }
  return "?";
}

namespace {

std::size_t find_gate_by_suffix(const Netlist& n, std::string_view target) {
  if (auto g = n.find_gate(target)) return *g;
  const std::string dotted = "." + std::string(target);
  for (std::size_t i = 0; i < n.gates().size(); ++i) {
    if (n.gates()[i].id.ends_with(dotted)) return i;
  }
  throw ConfigError("no gate '" + std::string(target) + "'");
}

std::size_t driver_of(const Netlist& n, NetId net) {
  for (std::size_t i = 0; i < n.gates().size(); ++i) {
    if (n.gates()[i].output == net) return i;
  }
  throw ConfigError("net '" + n.net_name(net) + "' has no gate driver");
}

}  // namespace

Netlist mutate(const Netlist& netlist, Mutation m, std::string_view target) {
  Netlist out = netlist;
  out.set_name(netlist.name() + "+" + std::string(mutation_name(m)));
  switch (m) {
    case Mutation::SwapSumRails: {
      std::string label(target);
      if (label.empty()) label = netlist.find_output("sum") ? "sum" : "s0";
      const auto* pair = netlist.find_output(label);
      if (!pair) throw ConfigError("no output '" + label + "'");
      const auto g1 = driver_of(out, pair->rail1);
      const auto g0 = driver_of(out, pair->rail0);
      std::swap(out.mutable_gate(g1).output, out.mutable_gate(g0).output);
      break;
    }
    case Mutation::DropCElement: {
      auto& g = out.mutable_gate(
          find_gate_by_suffix(out, target.empty() ? "H1" : target));
      if (g.kind != CellKind::C2) {
        throw ConfigError("gate '" + g.id + "' is not a C2");
      }
      g.kind = CellKind::AND2;
      break;
    }
    case Mutation::DropOrTerm: {
      auto& g = out.mutable_gate(
          find_gate_by_suffix(out, target.empty() ? "G" : target));
      switch (g.kind) {
        case CellKind::OR4: g.kind = CellKind::OR3; break;
        case CellKind::OR3: g.kind = CellKind::OR2; break;
        case CellKind::OR2: g.kind = CellKind::BUF; break;
        default: throw ConfigError("gate '" + g.id + "' is not an OR gate");
      }
      g.inputs.pop_back();
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ReportTable verdict_table() {
  ReportTable t;
  t.title = "verification";
  t.columns = {"check", "design", "cases", "failures", "verdict", "detail"};
  return t;
}

void add_verdict(ReportTable& table, const OracleReport& r) {
  std::string detail;
  if (r.first) {
    detail = vector_text(r.first->input) + ": expected " + r.first->expected +
             ", observed " + r.first->observed;
  }
  table.add({"oracle", r.design, std::to_string(r.cases),
             std::to_string(r.mismatches), r.passed() ? "PASS" : "FAIL",
             detail});
}

void add_verdict(ReportTable& table, const AliasReport& r) {
  std::string detail;
  if (r.first) {
    detail = vector_text(r.first->input) + ": " + r.first->expected + " vs " +
             r.first->observed;
  }
  table.add({"alias-equivalence", r.design, std::to_string(r.cases),
             std::to_string(r.mismatches),
             !r.applicable ? "N/A" : (r.passed() ? "PASS" : "FAIL"), detail});
}

void add_verdict(ReportTable& table, const ProbeResult& r) {
  std::string detail = vector_text(r.scenario.vector) + " held";
  for (const auto& h : r.scenario.held) detail += " " + h;
  detail += "; " + std::to_string(r.complete.size()) + "/" +
            std::to_string(r.complete.size() + r.incomplete.size()) +
            " outputs complete";
  table.add({r.scenario.phase == Phase::Data ? "early-set" : "early-reset",
             r.design, "1", r.witness ? "0" : "1",
             r.witness ? "WITNESS" : "NO WITNESS", detail});
}

void add_verdict(ReportTable& table, const FuzzReport& r) {
  std::string detail = "seed " + std::to_string(r.seed) + ", alias race in " +
                       std::to_string(r.race_trials) + " trials";
  if (!r.failures.empty()) {
    detail += "; trial " + std::to_string(r.failures.front().trial) + ": " +
              r.failures.front().violation;
  }
  table.add({"fuzz", r.design, std::to_string(r.trials),
             std::to_string(r.failures.size()), r.passed() ? "PASS" : "FAIL",
             detail});
}

}  // namespace qdiadd
