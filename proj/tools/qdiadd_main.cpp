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

// qdiadd command-line front end. Talks to the library only through the C
// API in qdiadd/qdiadd.h.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdiadd/qdiadd.h"

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitError = 2;

struct CApiError {
  qdiadd_status status;
  std::string message;
};

void check(qdiadd_status s) {
  if (s != QDIADD_OK) throw CApiError{s, qdiadd_last_error()};
}

struct StringDeleter {
  void operator()(char* p) const { qdiadd_string_free(p); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct NetlistDeleter {
  void operator()(qdiadd_netlist* p) const { qdiadd_netlist_free(p); }
};
using NetlistPtr = std::unique_ptr<qdiadd_netlist, NetlistDeleter>;

std::string take(char* p) {
  CString owned(p);
  return p ? std::string(p) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CApiError{QDIADD_ERR_ARGUMENT, "cannot read '" + path + "'"};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CApiError{QDIADD_ERR_ARGUMENT, "cannot write '" + path + "'"};
  out << text;
}

// Options shared by the subcommands.
struct DesignArgs {
  std::string arch = "scbcla";
  int width = 32;
  int section = 4;
  bool alias = false;
  int hybrid = 0;
  int pairs = 33;
  std::string netlist_file;
};

struct DelayArgs {
  std::string mode = "unit";
  std::uint64_t seed = 1;
  double min_delay = 0.5;
  double max_delay = 2.0;
  std::vector<std::string> cell_delays;  // KIND=value
};

void add_design_options(CLI::App* app, DesignArgs& d, bool allow_file) {
  app->add_option("--arch", d.arch,
                  "fa, sol, rca, scbclg, scbcla, rcla or cd")
      ->capture_default_str();
  app->add_option("--width", d.width, "adder width in bits")
      ->capture_default_str();
  app->add_option("--section", d.section, "section size m")
      ->capture_default_str();
  app->add_flag("--alias", d.alias, "add alias carry logic");
  app->add_option("--hybrid-rca", d.hybrid,
                  "least significant bits realized as an RCA")
      ->capture_default_str();
  app->add_option("--pairs", d.pairs, "completion detector pair count")
      ->capture_default_str();
  if (allow_file) {
    app->add_option("--netlist", d.netlist_file,
                    "read the design from a netlist file instead");
  }
}

void add_delay_options(CLI::App* app, DelayArgs& d) {
  app->add_option("--delay", d.mode, "unit, random or table")
      ->check(CLI::IsMember({"unit", "random", "table"}))
      ->capture_default_str();
  app->add_option("--min-delay", d.min_delay, "random delay lower bound")
      ->capture_default_str();
  app->add_option("--max-delay", d.max_delay, "random delay upper bound")
      ->capture_default_str();
  app->add_option("--cell-delay", d.cell_delays,
                  "KIND=value for --delay table (unlisted kinds: 1)");
}

NetlistPtr load_design(const DesignArgs& d) {
  qdiadd_netlist* n = nullptr;
  if (!d.netlist_file.empty()) {
    check(qdiadd_parse(read_file(d.netlist_file).c_str(), &n));
    return NetlistPtr(n);
  }
  qdiadd_design design;
  qdiadd_design_init(&design);
  check(qdiadd_parse_arch(d.arch.c_str(), &design.arch));
  design.width = d.width;
  design.section = d.section;
  design.alias = d.alias ? 1 : 0;
  design.hybrid_rca_width = d.hybrid;
  design.pairs = d.pairs;
  check(qdiadd_generate(&design, &n));
  return NetlistPtr(n);
}

qdiadd_delay make_delay(const DelayArgs& a, std::uint64_t seed) {
  static const char* kKinds[12] = {"INV", "BUF", "AND2", "AND3",
                                   "AND4", "OR2", "OR3", "OR4",
                                   "AO22", "ALIAS", "C2", "C3"};
  qdiadd_delay d;
  qdiadd_delay_init(&d);
  d.seed = seed;
  d.min_delay = a.min_delay;
  d.max_delay = a.max_delay;
  if (a.mode == "random") d.mode = QDIADD_DELAY_RANDOM;
  if (a.mode == "table") d.mode = QDIADD_DELAY_TABLE;
  for (const auto& item : a.cell_delays) {
    const auto eq = item.find('=');
    bool found = false;
    if (eq != std::string::npos) {
      for (int k = 0; k < 12; ++k) {
        if (item.compare(0, eq, kKinds[k]) == 0) {
          d.table[k] = std::stod(item.substr(eq + 1));
          found = true;
        }
      }
    }
    if (!found) {
      throw CApiError{QDIADD_ERR_CONFIG, "bad --cell-delay '" + item + "'"};
    }
  }
  return d;
}

qdiadd_format make_format(const std::string& name) {
  qdiadd_format f;
  check(qdiadd_parse_format(name.c_str(), &f));
  return f;
}

int design_width(const DesignArgs& d, qdiadd_netlist* n) {
  size_t inputs = 0;
  check(qdiadd_netlist_shape(n, &inputs, nullptr, nullptr));
  // a<i>, b<i>, cin
  return inputs >= 3 ? static_cast<int>((inputs - 1) / 2) : d.width;
}

// Reads `key = value` lines into flags. "true"/"false" values toggle flags.
std::vector<std::string> config_args(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> out;
  std::string line;
  int line_no = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CApiError{QDIADD_ERR_CONFIG, path + ":" + std::to_string(line_no) +
                                             ": expected key = value"};
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty() || key == "config") {
      throw CApiError{QDIADD_ERR_CONFIG,
                      path + ":" + std::to_string(line_no) + ": bad key"};
    }
    if (value == "false") continue;
    out.push_back("--" + key);
    if (value != "true") out.push_back(value);
  }
  return out;
}

// argv with the settings of any --config file placed right after the
// subcommand name, so explicit flags override them.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty() || args.empty()) return args;
  const auto extra = config_args(path);
  args.insert(args.begin() + 1, extra.begin(), extra.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qdiadd: dual-rail early-output adder workbench", "qdiadd"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qdiadd_version()));
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  DesignArgs design;
  DelayArgs delay;
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 1;
  std::string config_file;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json", "structured"}))
        ->capture_default_str();
    sub->add_option("-o,--output", output, "output file (default stdout)");
    sub->add_option("--config", config_file,
                    "key = value file; flags given on the command line win");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "write a canonical netlist");
  add_design_options(gen, design, false);
  gen->add_option("-o,--output", output, "netlist file (default stdout)");
  gen->add_option("--config", config_file,
                  "key = value file; flags given on the command line win");

  // sim
  std::string vectors_file;
  std::size_t random_count = 0;
  bool exhaustive = false;
  std::string trace;
  auto* sim = app.add_subcommand("sim", "run DATA/RTZ handshake cycles");
  add_design_options(sim, design, true);
  add_delay_options(sim, delay);
  common(sim);
  sim->add_option("--seed", seed, "seed for delays and random vectors")
      ->capture_default_str();
  sim->add_option("--vectors", vectors_file, "a_hex,b_hex,cin_bit per line");
  sim->add_option("--random", random_count, "seeded random vectors");
  sim->add_flag("--exhaustive", exhaustive, "all vectors (width <= 12)");
  sim->add_option("--trace", trace,
                  "a_hex,b_hex,cin: write the event trace of one cycle");

  // verify
  std::size_t fuzz = 0;
  bool alias_check = false;
  unsigned threads = 0;
  std::string mutation;
  std::string mutation_target;
  std::string probe_data;
  std::string probe_rtz;
  std::string probe_vector = "0,0,0";
  auto* ver = app.add_subcommand("verify", "oracle, alias and fuzz checks");
  add_design_options(ver, design, true);
  common(ver);
  ver->add_option("--seed", seed, "seed for vectors and fuzz trials")
      ->capture_default_str();
  ver->add_option("--vectors", vectors_file, "a_hex,b_hex,cin_bit per line");
  ver->add_option("--random", random_count, "seeded random oracle vectors");
  ver->add_flag("--exhaustive", exhaustive, "all vectors (width <= 12)");
  ver->add_option("--fuzz", fuzz, "randomized-delay trials");
  ver->add_option("--min-delay", delay.min_delay, "fuzz delay lower bound")
      ->capture_default_str();
  ver->add_option("--max-delay", delay.max_delay, "fuzz delay upper bound")
      ->capture_default_str();
  ver->add_option("--threads", threads, "fuzz worker threads (0: all cores)");
  ver->add_flag("--alias-check", alias_check,
                "run the alias equivalence check (implied by --alias)");
  ver->add_option("--mutate", mutation,
                  "swap-sum-rails, drop-c-element or drop-or-term")
      ->check(CLI::IsMember(
          {"swap-sum-rails", "drop-c-element", "drop-or-term"}));
  ver->add_option("--mutate-target", mutation_target,
                  "output label or gate id for --mutate");
  ver->add_option("--probe-data", probe_data,
                  "inputs held NULL for an early-set probe (comma list)");
  ver->add_option("--probe-rtz", probe_rtz,
                  "inputs held valid for an early-reset probe (comma list)");
  ver->add_option("--probe-vector", probe_vector, "a_hex,b_hex,cin")
      ->capture_default_str();

  // bench
  bool group4 = false;
  std::size_t bench_random = 1000;
  auto* bench = app.add_subcommand("bench", "unit-delay latency matrix");
  add_delay_options(bench, delay);
  common(bench);
  bench->add_flag("--group4", group4, "only the four Group4 analogues");
  bench->add_option("--random", bench_random,
                    "random vectors added to the critical set")
      ->capture_default_str();
  bench->add_option("--seed", seed, "seed for vectors and delays")
      ->capture_default_str();

  // report
  std::string reference = "bundled";
  auto* rep = app.add_subcommand("report", "reproduce the reference percentages");
  common(rep);
  rep->add_option("--reference", reference, "bundled or a table file")
      ->capture_default_str();

  std::vector<std::string> args;
  try {
    args = expand_config(argc, argv);
  } catch (const CApiError& e) {
    std::cerr << "qdiadd: " << e.message << "\n";
    return kExitError;
  }
  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  auto parse_triplet = [](const std::string& s, std::uint64_t& a,
                          std::uint64_t& b, int& cin) {
    unsigned long long x = 0, y = 0;
    int c = 0;
    if (std::sscanf(s.c_str(), "%llx,%llx,%d", &x, &y, &c) != 3 ||
        (c != 0 && c != 1)) {
      throw CApiError{QDIADD_ERR_ARGUMENT,
                      "expected a_hex,b_hex,cin: '" + s + "'"};
    }
    a = x;
    b = y;
    cin = c;
  };

  try {
    if (gen->parsed()) {
      auto n = load_design(design);
      char* text = nullptr;
      check(qdiadd_emit(n.get(), &text));
      write_output(output, take(text));
      long transistors = 0;
      char* census = nullptr;
      check(qdiadd_census(n.get(), &transistors, nullptr, &census));
      auto& info = output.empty() || output == "-" ? std::cerr : std::cout;
      info << take(census) << "\n";
      return 0;
    }

    if (sim->parsed()) {
      auto n = load_design(design);
      const auto d = make_delay(delay, seed);
      if (!trace.empty()) {
        std::uint64_t a, b;
        int cin;
        parse_triplet(trace, a, b, cin);
        char* csv = nullptr;
        check(qdiadd_trace(n.get(), &d, a, b, cin, &csv));
        write_output(output, take(csv));
        return 0;
      }
      std::string vectors;
      if (!vectors_file.empty()) vectors += read_file(vectors_file);
      const int width = design_width(design, n.get());
      char* v = nullptr;
      if (exhaustive) {
        check(qdiadd_exhaustive_vectors(width, &v));
        vectors += take(v);
      }
      if (random_count) {
        check(qdiadd_random_vectors(width, random_count, seed, &v));
        vectors += take(v);
      }
      if (vectors.empty()) {
        throw CApiError{QDIADD_ERR_CONFIG,
                        "no vectors: give --vectors, --random or --exhaustive"};
      }
      char* report = nullptr;
      size_t failures = 0;
      check(qdiadd_simulate(n.get(), &d, vectors.c_str(), make_format(format),
                            &report, &failures));
      write_output(output, take(report));
      return failures ? kExitFailures : 0;
    }

    if (ver->parsed()) {
      auto n = load_design(design);
      if (!mutation.empty()) {
        const qdiadd_mutation m = mutation == "swap-sum-rails"
                                      ? QDIADD_MUT_SWAP_SUM_RAILS
                                  : mutation == "drop-c-element"
                                      ? QDIADD_MUT_DROP_C_ELEMENT
                                      : QDIADD_MUT_DROP_OR_TERM;
        qdiadd_netlist* mutated = nullptr;
        check(qdiadd_mutate(n.get(), m,
                            mutation_target.empty() ? nullptr
                                                    : mutation_target.c_str(),
                            &mutated));
        n.reset(mutated);
      }
      std::string probes;
      for (int phase = 0; phase < 2; ++phase) {
        const auto& held = phase == 0 ? probe_data : probe_rtz;
        if (held.empty()) continue;
        std::uint64_t a, b;
        int cin;
        parse_triplet(probe_vector, a, b, cin);
        int witness = 0;
        char* text = nullptr;
        check(qdiadd_probe(n.get(), phase, a, b, cin, held.c_str(), &witness,
                           &text));
        probes += take(text);
      }

      std::string vectors;
      if (!vectors_file.empty()) vectors = read_file(vectors_file);
      qdiadd_verify_options o;
      qdiadd_verify_options_init(&o);
      o.exhaustive = exhaustive ? 1 : 0;
      o.random = random_count;
      o.vectors = vectors.empty() ? nullptr : vectors.c_str();
      o.alias = (alias_check || (design.alias && design.netlist_file.empty()))
                    ? 1 : 0;
      o.fuzz_trials = fuzz;
      o.seed = seed;
      o.min_delay = delay.min_delay;
      o.max_delay = delay.max_delay;
      o.threads = threads;
      if (!o.exhaustive && !o.random && !o.vectors && !o.alias &&
          !o.fuzz_trials) {
        if (!probes.empty()) {
          write_output(output, probes);
          return 0;
        }
        o.random = 1000;
      }
      char* report = nullptr;
      size_t failures = 0;
      check(qdiadd_verify(n.get(), &o, make_format(format), &report,
                          &failures));
      write_output(output, take(report) + probes);
      return failures ? kExitFailures : 0;
    }

    if (bench->parsed()) {
      const auto d = make_delay(delay, seed);
      char* report = nullptr;
      size_t failures = 0;
      check(qdiadd_bench(group4 ? 1 : 0, bench_random, seed, &d,
                         make_format(format), &report, &failures));
      write_output(output, take(report));
      return failures ? kExitFailures : 0;
    }

    if (rep->parsed()) {
      std::string text;
      if (reference != "bundled") text = read_file(reference);
      char* report = nullptr;
      size_t failures = 0;
      check(qdiadd_report(text.empty() ? nullptr : text.c_str(),
                          make_format(format), &report, &failures));
      write_output(output, take(report));
      return failures ? kExitFailures : 0;
    }
  } catch (const CApiError& e) {
    std::cerr << "qdiadd: " << qdiadd_status_name(e.status) << ": "
              << e.message << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "qdiadd: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
