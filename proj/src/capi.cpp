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

#include "qdiadd/qdiadd.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "qdiadd/error.hpp"
#include "qdiadd/generators.hpp"
#include "qdiadd/metrics.hpp"
#include "qdiadd/netlist.hpp"
#include "qdiadd/report.hpp"
#include "qdiadd/sim.hpp"
#include "qdiadd/verify.hpp"

struct qdiadd_netlist {
  qdiadd::Netlist netlist;
};

namespace {

using namespace qdiadd;

thread_local std::string g_last_error;

qdiadd_status fail(qdiadd_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
qdiadd_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return QDIADD_OK;
  } catch (const ParseError& e) {
    return fail(QDIADD_ERR_PARSE, e.what());
  } catch (const ConfigError& e) {
    return fail(QDIADD_ERR_CONFIG, e.what());
  } catch (const InvalidNetlistError& e) {
    return fail(QDIADD_ERR_INVALID_NETLIST, e.what());
  } catch (const SimulationError& e) {
    return fail(QDIADD_ERR_SIMULATION, e.what());
  } catch (const Error& e) {
    return fail(QDIADD_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QDIADD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QDIADD_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

#define REQUIRE_ARG(cond, msg)                          \
  do {                                                  \
    if (!(cond)) return fail(QDIADD_ERR_ARGUMENT, msg); \
  } while (0)

OutputFormat to_format(qdiadd_format f) {
  switch (f) {
    case QDIADD_FORMAT_TEXT: return OutputFormat::Text;
    case QDIADD_FORMAT_CSV: return OutputFormat::Csv;
    case QDIADD_FORMAT_JSON: return OutputFormat::Json;
  }
  throw ConfigError("unknown output format code");
}

DelayModel to_delay(const qdiadd_delay* d) {
  if (!d) return DelayModel::unit();
  DelayModel m;
  switch (d->mode) {
    case QDIADD_DELAY_UNIT: m = DelayModel::unit(); break;
    case QDIADD_DELAY_RANDOM:
      m = DelayModel::random(d->seed, d->min_delay, d->max_delay);
      break;
    case QDIADD_DELAY_TABLE: {
      DelayTable t{};
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = d->table[i];
      m = DelayModel::from_table(t);
      break;
    }
    default: throw ConfigError("unknown delay mode");
  }
  m.check();
  return m;
}

std::string hex(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string bit(std::optional<bool> b) { return b ? (*b ? "1" : "0") : "?"; }

}  // namespace

extern "C" {

const char* qdiadd_last_error(void) { return g_last_error.c_str(); }

const char* qdiadd_status_name(qdiadd_status status) {
  switch (status) {
    case QDIADD_OK: return "ok";
    case QDIADD_ERR_ARGUMENT: return "argument error";
    case QDIADD_ERR_CONFIG: return "configuration error";
    case QDIADD_ERR_PARSE: return "parse error";
    case QDIADD_ERR_INVALID_NETLIST: return "invalid netlist";
    case QDIADD_ERR_SIMULATION: return "simulation error";
    case QDIADD_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qdiadd_version(void) { return "0.1.0"; }

void qdiadd_string_free(char* s) { std::free(s); }

void qdiadd_design_init(qdiadd_design* design) {
  if (!design) return;
  design->arch = QDIADD_ARCH_SCBCLA;
  design->width = 32;
  design->section = 4;
  design->alias = 0;
  design->hybrid_rca_width = 0;
  design->pairs = 33;
}

qdiadd_status qdiadd_parse_arch(const char* name, qdiadd_arch* out) {
  REQUIRE_ARG(name && out, "null argument");
  static const struct {
    const char* name;
    qdiadd_arch arch;
  } kNames[] = {{"fa", QDIADD_ARCH_FA},         {"sol", QDIADD_ARCH_SOL},
                {"rca", QDIADD_ARCH_RCA},       {"scbclg", QDIADD_ARCH_SCBCLG},
                {"scbcla", QDIADD_ARCH_SCBCLA}, {"rcla", QDIADD_ARCH_RCLA},
                {"cd", QDIADD_ARCH_CD}};
  for (const auto& n : kNames) {
    if (std::strcmp(name, n.name) == 0) {
      *out = n.arch;
      return QDIADD_OK;
    }
  }
  return fail(QDIADD_ERR_CONFIG, std::string("unknown architecture '") +
                                     name +
                                     "' (fa, sol, rca, scbclg, scbcla, rcla, cd)");
}

qdiadd_status qdiadd_generate(const qdiadd_design* design,
                              qdiadd_netlist** out) {
  REQUIRE_ARG(design && out, "null argument");
  return guarded([&] {
    Netlist n;
    switch (design->arch) {
      case QDIADD_ARCH_FA: n = gen_full_adder_eo(); break;
      case QDIADD_ARCH_SOL: n = gen_sol_eo(); break;
      case QDIADD_ARCH_SCBCLG: n = gen_scbclg(design->section, design->alias != 0); break;
      case QDIADD_ARCH_CD: n = gen_completion_detector(design->pairs); break;
      case QDIADD_ARCH_RCA:
      case QDIADD_ARCH_SCBCLA:
      case QDIADD_ARCH_RCLA: {
        AdderConfig c;
        c.architecture = design->arch == QDIADD_ARCH_RCA
                             ? Architecture::RCA
                             : design->arch == QDIADD_ARCH_RCLA
                                   ? Architecture::RCLA
                                   : Architecture::SCBCLA;
        c.width = design->width;
        c.section = design->section;
        c.alias = design->alias != 0;
        c.hybrid_rca_width = design->hybrid_rca_width;
        n = generate(c);
        break;
      }
      default: throw ConfigError("unknown architecture code");
    }
    *out = new qdiadd_netlist{std::move(n)};
  });
}

qdiadd_status qdiadd_parse(const char* text, qdiadd_netlist** out) {
  REQUIRE_ARG(text && out, "null argument");
  return guarded([&] { *out = new qdiadd_netlist{parse_netlist(text)}; });
}

void qdiadd_netlist_free(qdiadd_netlist* netlist) { delete netlist; }

qdiadd_status qdiadd_emit(const qdiadd_netlist* netlist, char** text) {
  REQUIRE_ARG(netlist && text, "null argument");
  return guarded([&] { put(text, emit_netlist(netlist->netlist)); });
}

qdiadd_status qdiadd_netlist_name(const qdiadd_netlist* netlist, char** name) {
  REQUIRE_ARG(netlist && name, "null argument");
  return guarded([&] { put(name, netlist->netlist.name()); });
}

qdiadd_status qdiadd_netlist_shape(const qdiadd_netlist* netlist,
                                   size_t* inputs, size_t* outputs,
                                   size_t* gates) {
  REQUIRE_ARG(netlist, "null netlist");
  if (inputs) *inputs = netlist->netlist.inputs().size();
  if (outputs) *outputs = netlist->netlist.outputs().size();
  if (gates) *gates = netlist->netlist.gates().size();
  return QDIADD_OK;
}

qdiadd_status qdiadd_validate(const qdiadd_netlist* netlist, int* ok,
                              char** report) {
  REQUIRE_ARG(netlist, "null netlist");
  return guarded([&] {
    const auto r = validate(netlist->netlist);
    if (ok) *ok = r.ok() ? 1 : 0;
    put(report, r.to_text());
  });
}

qdiadd_status qdiadd_census(const qdiadd_netlist* netlist, long* transistors,
                            int* gates, char** text) {
  REQUIRE_ARG(netlist, "null netlist");
  return guarded([&] {
    const auto c = gate_census(netlist->netlist);
    if (transistors) *transistors = c.transistors;
    if (gates) *gates = c.gates;
    put(text, c.to_text());
  });
}

qdiadd_status qdiadd_longest_path(const qdiadd_netlist* netlist,
                                  double* depth, char** text) {
  REQUIRE_ARG(netlist, "null netlist");
  return guarded([&] {
    const auto p = static_longest_path(netlist->netlist, unit_delay_table());
    if (depth) *depth = p.depth;
    put(text, p.to_text());
  });
}

int qdiadd_structurally_equal(const qdiadd_netlist* a,
                              const qdiadd_netlist* b) {
  if (!a || !b) return 0;
  try {
    return structurally_equal(a->netlist, b->netlist) ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

qdiadd_status qdiadd_mutate(const qdiadd_netlist* netlist,
                            qdiadd_mutation mutation, const char* target,
                            qdiadd_netlist** out) {
  REQUIRE_ARG(netlist && out, "null argument");
  return guarded([&] {
    Mutation m;
    switch (mutation) {
      case QDIADD_MUT_SWAP_SUM_RAILS: m = Mutation::SwapSumRails; break;
      case QDIADD_MUT_DROP_C_ELEMENT: m = Mutation::DropCElement; break;
      case QDIADD_MUT_DROP_OR_TERM: m = Mutation::DropOrTerm; break;
      default: throw ConfigError("unknown mutation code");
    }
    *out = new qdiadd_netlist{
        mutate(netlist->netlist, m, target ? target : "")};
  });
}

void qdiadd_delay_init(qdiadd_delay* delay) {
  if (!delay) return;
  delay->mode = QDIADD_DELAY_UNIT;
  delay->seed = 1;
  delay->min_delay = 0.5;
  delay->max_delay = 2.0;
  for (double& d : delay->table) d = 1.0;
}

qdiadd_status qdiadd_parse_format(const char* name, qdiadd_format* out) {
  REQUIRE_ARG(name && out, "null argument");
  return guarded([&] {
    switch (parse_output_format(name)) {
      case OutputFormat::Text: *out = QDIADD_FORMAT_TEXT; break;
      case OutputFormat::Csv: *out = QDIADD_FORMAT_CSV; break;
      case OutputFormat::Json: *out = QDIADD_FORMAT_JSON; break;
    }
  });
}

qdiadd_status qdiadd_random_vectors(int width, size_t count, uint64_t seed,
                                    char** text) {
  REQUIRE_ARG(text, "null argument");
  return guarded([&] {
    put(text, emit_vectors(random_vectors(width, count, seed), width));
  });
}

qdiadd_status qdiadd_exhaustive_vectors(int width, char** text) {
  REQUIRE_ARG(text, "null argument");
  return guarded(
      [&] { put(text, emit_vectors(exhaustive_vectors(width), width)); });
}

qdiadd_status qdiadd_simulate(const qdiadd_netlist* netlist,
                              const qdiadd_delay* delay, const char* vectors,
                              qdiadd_format format, char** report,
                              size_t* failures) {
  REQUIRE_ARG(netlist && vectors, "null argument");
  return guarded([&] {
    const auto& n = netlist->netlist;
    const auto model = to_delay(delay);
    const auto ports = resolve_adder_ports(n);
    const auto vecs = parse_vectors(vectors);
    const auto results =
        run_handshake_cycles(n, vecs, model, default_monitors(n));
    const auto summary = summarize(results);
    const std::uint64_t mask = (1ULL << ports.width) - 1;

    ReportTable cycles;
    cycles.title = "cycles";
    cycles.columns = {"index", "a",           "b",           "cin",
                      "sum",   "cout",        "data_latency", "rtz_latency",
                      "transitions", "alias_race", "findings", "verdict"};
    std::size_t bad = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      const auto total = r.input.a + r.input.b + (r.input.cin ? 1 : 0);
      const bool carry = (total >> ports.width) & 1U;
      bool ok = r.data_completed && r.rtz_completed && !r.has_errors();
      if (!ports.sum.empty()) ok = ok && r.sum && *r.sum == (total & mask);
      if (ports.cout) ok = ok && r.cout && *r.cout == carry;
      if (ports.cout_alias) ok = ok && r.cout_alias && *r.cout_alias == carry;
      if (!ok) ++bad;
      std::string findings;
      for (const auto& f : r.findings) {
        if (!findings.empty()) findings += "; ";
        findings += std::string(finding_kind_name(f.kind)) + " " + f.subject;
      }
      cycles.add({std::to_string(i), hex(r.input.a), hex(r.input.b),
                  r.input.cin ? "1" : "0", r.sum ? hex(*r.sum) : "?",
                  ports.cout ? bit(r.cout) : "-", fixed(r.data_latency, 3),
                  fixed(r.rtz_latency, 3), std::to_string(r.transitions),
                  r.race_observed ? "1" : "0", findings, ok ? "PASS" : "FAIL"});
    }
    Document doc;
    doc.meta = {{"command", "sim"},
                {"design", n.name()},
                {"delay", model.describe()},
                {"vectors", std::to_string(vecs.size())}};
    doc.tables.push_back(std::move(cycles));
    ReportTable sum;
    sum.title = "summary";
    sum.columns = {"cycles", "failures", "worst_data_latency",
                   "worst_vector", "worst_rtz_latency", "error_findings",
                   "alias_races", "transitions"};
    sum.add({std::to_string(summary.cycles), std::to_string(bad),
             fixed(summary.worst_data_latency, 3),
             std::to_string(summary.worst_data_index),
             fixed(summary.worst_rtz_latency, 3),
             std::to_string(summary.error_findings),
             std::to_string(summary.race_observations),
             std::to_string(summary.transitions)});
    doc.tables.push_back(std::move(sum));
    if (failures) *failures = bad;
    put(report, doc.render(to_format(format)));
  });
}

qdiadd_status qdiadd_trace(const qdiadd_netlist* netlist,
                           const qdiadd_delay* delay, uint64_t a, uint64_t b,
                           int cin, char** csv) {
  REQUIRE_ARG(netlist && csv, "null argument");
  return guarded([&] {
    const auto& n = netlist->netlist;
    const auto ports = resolve_adder_ports(n);
    const std::uint64_t mask = (1ULL << ports.width) - 1;
    if ((a & ~mask) || (b & ~mask)) {
      throw SimulationError("operand wider than " +
                            std::to_string(ports.width) + " bits");
    }
    auto monitors = default_monitors(n);
    monitors.record_events = true;
    Simulator sim(n, to_delay(delay), monitors);
    const auto data =
        sim.run_phase(Phase::Data, data_targets(n, ports, {a, b, cin != 0}));
    const std::vector<DualRail> spacer(n.inputs().size(), DualRail::Null);
    const auto rtz = sim.run_phase(Phase::Rtz, spacer);
    std::string out = "phase,time,net,value\n";
    auto append = [&](const char* phase, const PhaseTrace& t) {
      const auto body = trace_to_csv(n, t);
      std::size_t pos = body.find('\n') + 1;
      while (pos < body.size()) {
        const auto eol = body.find('\n', pos);
        out += std::string(phase) + "," + body.substr(pos, eol - pos) + "\n";
        pos = eol + 1;
      }
    };
    append("DATA", data);
    append("RTZ", rtz);
    put(csv, out);
  });
}

void qdiadd_verify_options_init(qdiadd_verify_options* options) {
  if (!options) return;
  options->exhaustive = 0;
  options->random = 0;
  options->vectors = nullptr;
  options->alias = 0;
  options->fuzz_trials = 0;
  options->seed = 1;
  options->min_delay = 0.5;
  options->max_delay = 2.0;
  options->threads = 0;
}

qdiadd_status qdiadd_verify(const qdiadd_netlist* netlist,
                            const qdiadd_verify_options* options,
                            qdiadd_format format, char** report,
                            size_t* failures) {
  REQUIRE_ARG(netlist && options, "null argument");
  return guarded([&] {
    const auto& n = netlist->netlist;
    const auto ports = resolve_adder_ports(n);
    auto table = verdict_table();
    Document doc;
    doc.meta = {{"command", "verify"},
                {"design", n.name()},
                {"seed", std::to_string(options->seed)}};
    std::size_t bad = 0;

    std::vector<AdderVector> vecs;
    if (options->exhaustive) {
      vecs = exhaustive_vectors(ports.width);
    }
    if (options->vectors) {
      const auto v = parse_vectors(options->vectors);
      vecs.insert(vecs.end(), v.begin(), v.end());
    }
    if (options->random) {
      const auto v = random_vectors(ports.width, options->random, options->seed);
      vecs.insert(vecs.end(), v.begin(), v.end());
    }
    if (!vecs.empty()) {
      const auto r = oracle_check(n, vecs);
      add_verdict(table, r);
      if (!r.passed()) ++bad;
    }
    if (options->alias) {
      const auto r = alias_equivalence_check(n);
      add_verdict(table, r);
      if (!r.passed()) ++bad;
    }
    if (options->fuzz_trials) {
      FuzzOptions fo;
      fo.trials = options->fuzz_trials;
      fo.seed = options->seed;
      fo.min_delay = options->min_delay;
      fo.max_delay = options->max_delay;
      fo.threads = options->threads;
      doc.meta.emplace_back("delay_range", fixed(fo.min_delay, 3) + ".." +
                                               fixed(fo.max_delay, 3));
      const auto r = qdi_fuzz(n, fo);
      add_verdict(table, r);
      if (!r.passed()) {
        ++bad;
        std::string text = r.to_text();
        std::size_t pos = 0;
        while (pos < text.size()) {
          const auto eol = text.find('\n', pos);
          doc.notes.push_back(text.substr(pos, eol - pos));
          pos = eol + 1;
        }
      }
    }
    if (table.rows.empty()) {
      throw ConfigError("nothing to verify: give --exhaustive, --random, "
                        "--vectors, --alias or --fuzz");
    }
    doc.tables.push_back(std::move(table));
    if (failures) *failures = bad;
    put(report, doc.render(to_format(format)));
  });
}

qdiadd_status qdiadd_probe(const qdiadd_netlist* netlist, int phase,
                           uint64_t a, uint64_t b, int cin, const char* held,
                           int* witness, char** text) {
  REQUIRE_ARG(netlist && held, "null argument");
  REQUIRE_ARG(phase == 0 || phase == 1, "phase must be 0 (DATA) or 1 (RTZ)");
  return guarded([&] {
    ProbeScenario s;
    s.phase = phase == 0 ? Phase::Data : Phase::Rtz;
    s.vector = {a, b, cin != 0};
    std::string list(held);
    std::size_t pos = 0;
    while (pos <= list.size()) {
      auto comma = list.find(',', pos);
      if (comma == std::string::npos) comma = list.size();
      if (comma > pos) s.held.push_back(list.substr(pos, comma - pos));
      pos = comma + 1;
    }
    const auto r = early_output_probe(netlist->netlist, s);
    if (witness) *witness = r.witness ? 1 : 0;
    put(text, r.to_text());
  });
}

qdiadd_status qdiadd_bench(int group4_only, size_t random, uint64_t seed,
                           const qdiadd_delay* delay, qdiadd_format format,
                           char** report, size_t* failures) {
  return guarded([&] {
    const auto model = to_delay(delay);
    const auto designs = design_matrix(!group4_only);
    const auto vecs = critical_vectors(32, random, seed);
    const auto lr = latency_report(designs, vecs, model);

    ReportTable hops;
    hops.title = "section carry hops";
    hops.columns = {"design", "hops", "hop_cells", "hop_transistors"};
    for (const auto& c : designs) {
      const auto hs = section_hops(generate(c));
      std::string cells = "-";
      std::string tr = "-";
      if (!hs.empty()) {
        cells = kind_counts_text(hs.front().kinds);
        tr = std::to_string(hs.front().transistors);
        for (const auto& h : hs) {
          if (h.kinds != hs.front().kinds) cells = "mixed";
        }
      }
      hops.add({design_label(c), std::to_string(hs.size()), cells, tr});
    }

    Document doc;
    doc.meta = {{"command", "bench"},
                {"seed", std::to_string(seed)},
                {"delay", model.describe()},
                {"vectors", std::to_string(vecs.size())}};
    doc.tables.push_back(lr.table());
    doc.tables.push_back(lr.checks_table());
    doc.tables.push_back(std::move(hops));
    std::size_t bad = 0;
    for (const auto& c : lr.checks) bad += c.passed ? 0 : 1;
    if (failures) *failures = bad;
    put(report, doc.render(to_format(format)));
  });
}

qdiadd_status qdiadd_report(const char* reference, qdiadd_format format,
                            char** report, size_t* failures) {
  return guarded([&] {
    const auto rows = reference ? parse_reference(reference)
                                : bundled_reference();
    const auto claims = compare_table(rows);
    const auto ids = area_identities(rows);
    Document doc;
    doc.meta = {{"command", "report"},
                {"reference", reference ? "file" : "bundled"},
                {"rows", std::to_string(rows.size())}};
    doc.tables.push_back(claims_table(claims));
    doc.tables.push_back(identities_table(ids));
    doc.tables.push_back(overhead_table(rows));
    std::size_t bad = 0;
    for (const auto& c : claims) bad += c.passed() ? 0 : 1;
    for (const auto& i : ids) bad += i.passed() ? 0 : 1;
    if (failures) *failures = bad;
    put(report, doc.render(to_format(format)));
  });
}

qdiadd_status qdiadd_bundled_reference(char** text) {
  REQUIRE_ARG(text, "null argument");
  return guarded([&] { put(text, emit_reference(bundled_reference())); });
}

}  // extern "C"
