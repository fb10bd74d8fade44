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

#include "qdiadd/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "qdiadd/error.hpp"

namespace qdiadd {

namespace {

constexpr std::string_view kPlain = "SCBCLA (Without alias logic)";
constexpr std::string_view kHybridPlain =
    "SCBCLA-RCA hybrid (Without alias logic)";
constexpr std::string_view kAlias = "SCBCLA (With alias logic)";
constexpr std::string_view kHybridAlias =
    "SCBCLA-RCA hybrid (With alias logic)";
constexpr std::string_view kRcla = "RCLA";
constexpr std::string_view kRclaHybrid = "RCLA-RCA hybrid";

struct RowKey {
  int group;
  std::string_view design;
};

std::string key_text(const RowKey& k) {
  return "G" + std::to_string(k.group) + " " + std::string(k.design);
}

const ReferenceRow* find_row(std::span<const ReferenceRow> rows,
                             const RowKey& k) {
  for (const auto& r : rows) {
    if (r.group == k.group && r.design == k.design) return &r;
  }
  return nullptr;
}

double metric_of(const ReferenceRow& r, Metric m) {
  switch (m) {
    case Metric::Power: return r.power_uw;
    case Metric::Latency: return r.latency_ns;
    case Metric::Area: return r.area_um2;
  }
  return 0.0;
}

// Average of a metric over rows; nullopt when a row is missing.
std::optional<double> average(std::span<const ReferenceRow> rows,
                              const std::vector<RowKey>& keys, Metric m) {
  double sum = 0.0;
  for (const auto& k : keys) {
    const auto* r = find_row(rows, k);
    if (!r) return std::nullopt;
    sum += metric_of(*r, m);
  }
  return sum / static_cast<double>(keys.size());
}

double round1(double x) { return std::round(x * 10.0) / 10.0; }

bool same_config(const AdderConfig& a, const AdderConfig& b) {
  return a.architecture == b.architecture && a.width == b.width &&
         a.section == b.section && a.alias == b.alias &&
         a.hybrid_rca_width == b.hybrid_rca_width;
}

}  // namespace

ComposedArea compose_area(const AdderConfig& config,
                          const ComponentAreaTable& table) {
  check_config(config);
  ComposedArea out;
  std::ostringstream text;
  switch (config.architecture) {
    case Architecture::RCLA:
      out.breakdown = "unpriced: RCLA internals have no component area";
      return out;
    case Architecture::RCA:
      out.area = config.width * table.fa_eo;
      text << config.width << " x FA_eo";
      break;
    case Architecture::SCBCLA: {
      const int m = config.section;
      const int sections = (config.width - config.hybrid_rca_width) / m;
      const double clg = config.alias ? table.scbclg_alias : table.scbclg_plain;
      const int fas = sections * (m - 1) + config.hybrid_rca_width;
      out.area = sections * clg + fas * table.fa_eo + sections * table.sol_eo;
      text << sections << " x SCBCLG_" << (config.alias ? "alias" : "plain")
           << " + " << fas << " x FA_eo + " << sections << " x SOL_eo";
      break;
    }
  }
  out.priced = true;
  out.breakdown = text.str();
  return out;
}

const std::vector<ReferenceRow>& bundled_reference() {
  static const std::vector<ReferenceRow> rows = {
      {1, std::string(kPlain), 2191, 3.31, 2951.88},
      {1, std::string(kHybridPlain), 2189, 3.08, 2845.14},
      {1, std::string(kAlias), 2192, 2.46, 2992.55},
      {1, std::string(kHybridAlias), 2190, 2.38, 2880.72},
      {2, std::string(kPlain), 2188, 3.14, 2915.29},
      {2, std::string(kHybridPlain), 2186, 2.93, 2807.02},
      {2, std::string(kAlias), 2190, 2.32, 2955.95},
      {2, std::string(kHybridAlias), 2187, 2.25, 2842.60},
      {3, std::string(kRcla), 2177, 2.75, 2569.65},
      {3, std::string(kRclaHybrid), 2175, 2.53, 2455.80},
      {4, std::string(kPlain), 2178, 3.13, 2524.92},
      {4, std::string(kHybridPlain), 2175, 2.92, 2416.66},
      {4, std::string(kAlias), 2179, 2.31, 2565.58},
      {4, std::string(kHybridAlias), 2177, 2.23, 2452.24},
  };
  return rows;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
T parse_number(std::string_view tok, int line, const char* what) {
  tok = trim(tok);
  T value{};
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (tok.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError(line, std::string("bad ") + what + " '" +
                               std::string(tok) + "'");
  }
  return value;
}

}  // namespace

std::vector<ReferenceRow> parse_reference(std::string_view text) {
  std::vector<ReferenceRow> rows;
  bool header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 5) {
      throw ParseError(line_no, "expected 5 columns, found " +
                                    std::to_string(fields.size()));
    }
    if (!header) {
      if (fields[0] != "group" || fields[1] != "design" ||
          fields[2] != "power_uW" || fields[3] != "latency_ns" ||
          fields[4] != "area_um2") {
        throw ParseError(line_no,
                         "expected header group,design,power_uW,latency_ns,"
                         "area_um2");
      }
      header = true;
      continue;
    }
    ReferenceRow r;
    r.group = parse_number<int>(fields[0], line_no, "group");
    if (r.group < 1 || r.group > 4) {
      throw ParseError(line_no, "group must be 1..4");
    }
    if (fields[1].empty()) throw ParseError(line_no, "empty design label");
    r.design = std::string(fields[1]);
    r.power_uw = parse_number<double>(fields[2], line_no, "power");
    r.latency_ns = parse_number<double>(fields[3], line_no, "latency");
    r.area_um2 = parse_number<double>(fields[4], line_no, "area");
    rows.push_back(std::move(r));
  }
  if (!header) throw ParseError(line_no, "missing header");
  return rows;
}

std::string emit_reference(std::span<const ReferenceRow> rows) {
  std::ostringstream out;
  out << "group,design,power_uW,latency_ns,area_um2\n";
  for (const auto& r : rows) {
    out << r.group << "," << r.design << "," << fixed(r.power_uw, 0) << ","
        << fixed(r.latency_ns, 2) << "," << fixed(r.area_um2, 2) << "\n";
  }
  return out.str();
}

std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::Power: return "power";
    case Metric::Latency: return "latency";
    case Metric::Area: return "area";
  }
  return "?";
}

bool PercentClaim::passed() const {
  return complete && std::abs(round1(computed) - stated) <= tolerance + 1e-9;
}

std::string PercentClaim::formula() const {
  return reduction ? "(baseline - candidate) / baseline"
                   : "(candidate - baseline) / baseline";
}

std::vector<PercentClaim> compare_table(std::span<const ReferenceRow> rows) {
  struct Spec {
    const char* name;
    Metric metric;
    bool reduction;
    double stated;
    double tolerance;
    std::vector<RowKey> baseline;
    std::vector<RowKey> candidate;
  };
  const std::vector<RowKey> plain = {{1, kPlain}, {1, kHybridPlain},
                                     {2, kPlain}, {2, kHybridPlain},
                                     {4, kPlain}, {4, kHybridPlain}};
  const std::vector<RowKey> alias = {{1, kAlias}, {1, kHybridAlias},
                                     {2, kAlias}, {2, kHybridAlias},
                                     {4, kAlias}, {4, kHybridAlias}};
  const std::vector<RowKey> regular_plain = {
      {1, kPlain}, {2, kPlain}, {4, kPlain}, {3, kRcla}};
  const std::vector<RowKey> hybrid_plain = {
      {1, kHybridPlain}, {2, kHybridPlain}, {4, kHybridPlain}, {3, kRclaHybrid}};
  const std::vector<RowKey> regular_alias = {{1, kAlias}, {2, kAlias}, {4, kAlias}};
  const std::vector<RowKey> hybrid_alias = {
      {1, kHybridAlias}, {2, kHybridAlias}, {4, kHybridAlias}};

  const std::vector<Spec> specs = {
      {"alias latency reduction", Metric::Latency, true, 24.6, 0.1, plain, alias},
      {"alias area increase", Metric::Area, false, 1.4, 0.1, plain, alias},
      {"alias power increase", Metric::Power, false, 0.1, 0.05, plain, alias},
      {"hybrid latency reduction (without alias)", Metric::Latency, true, 7.0,
       1.0, regular_plain, hybrid_plain},
      {"hybrid area reduction (without alias)", Metric::Area, true, 4.0, 1.0,
       regular_plain, hybrid_plain},
      {"hybrid latency reduction (with alias)", Metric::Latency, true, 3.0, 1.0,
       regular_alias, hybrid_alias},
      {"hybrid area reduction (with alias)", Metric::Area, true, 4.0, 1.0,
       regular_alias, hybrid_alias},
      {"hybrid alias area increase", Metric::Area, false, 1.5, 0.2,
       {{4, kHybridPlain}}, {{4, kHybridAlias}}},
      {"hybrid alias power increase", Metric::Power, false, 0.1, 0.05,
       {{4, kHybridPlain}}, {{4, kHybridAlias}}},
      {"area vs weak-indication alias SCBCLA", Metric::Area, true, 13.0, 0.5,
       {{2, kAlias}}, {{4, kAlias}}},
      {"latency vs RCLA", Metric::Latency, true, 16.0, 0.5, {{3, kRcla}},
       {{4, kAlias}}},
  };

  std::vector<PercentClaim> claims;
  for (const auto& s : specs) {
    PercentClaim c;
    c.name = s.name;
    c.metric = s.metric;
    c.reduction = s.reduction;
    c.stated = s.stated;
    c.tolerance = s.tolerance;
    for (const auto& k : s.baseline) c.baseline_rows.push_back(key_text(k));
    for (const auto& k : s.candidate) c.candidate_rows.push_back(key_text(k));
    const auto base = average(rows, s.baseline, s.metric);
    const auto cand = average(rows, s.candidate, s.metric);
    if (base && cand && *base != 0.0) {
      c.complete = true;
      c.baseline = *base;
      c.candidate = *cand;
      c.computed = 100.0 * (s.reduction ? (*base - *cand) : (*cand - *base)) /
                   *base;
    }
    claims.push_back(std::move(c));
  }
  return claims;
}

bool AreaIdentity::passed() const {
  return complete && std::abs(reference - composed) <= tolerance + 1e-9;
}

std::vector<AreaIdentity> area_identities(std::span<const ReferenceRow> rows,
                                          const ComponentAreaTable& table) {
  const AdderConfig plain{Architecture::SCBCLA, 32, 4, false, 0};
  const AdderConfig hplain{Architecture::SCBCLA, 32, 4, false, 4};
  const AdderConfig alias{Architecture::SCBCLA, 32, 4, true, 0};
  const AdderConfig halias{Architecture::SCBCLA, 32, 4, true, 4};
  struct Spec {
    const char* name;
    RowKey minuend;
    RowKey subtrahend;
    AdderConfig a;
    AdderConfig b;
    double tolerance;
  };
  const std::vector<Spec> specs = {
      {"alias - plain", {4, kAlias}, {4, kPlain}, alias, plain, 0.05},
      {"regular - hybrid (plain)", {4, kPlain}, {4, kHybridPlain}, plain,
       hplain, 0.01},
      {"regular - hybrid (alias)", {4, kAlias}, {4, kHybridAlias}, alias,
       halias, 0.01},
      {"hybrid alias - hybrid plain", {4, kHybridAlias}, {4, kHybridPlain},
       halias, hplain, 0.05},
  };
  std::vector<AreaIdentity> out;
  for (const auto& s : specs) {
    AreaIdentity id;
    id.name = s.name;
    id.operands = key_text(s.minuend) + " - " + key_text(s.subtrahend);
    id.tolerance = s.tolerance;
    id.composed = compose_area(s.a, table).area - compose_area(s.b, table).area;
    const auto* m = find_row(rows, s.minuend);
    const auto* n = find_row(rows, s.subtrahend);
    if (m && n) {
      id.complete = true;
      id.reference = m->area_um2 - n->area_um2;
    }
    out.push_back(std::move(id));
  }
  return out;
}

ReportTable overhead_table(std::span<const ReferenceRow> rows,
                           const ComponentAreaTable& table) {
  ReportTable t;
  t.title = "area overhead (reference minus composed function block)";
  t.columns = {"design", "reference_um2", "composed_um2", "overhead_um2"};
  for (const auto& c : design_matrix(false)) {
    const auto label = design_label(c);
    const auto* r = find_row(rows, {4, label});
    if (!r) continue;
    const auto area = compose_area(c, table);
    t.add({"G4 " + label, fixed(r->area_um2, 2), fixed(area.area, 2),
           fixed(r->area_um2 - area.area, 2)});
  }
  return t;
}

// ---------------------------------------------------------------------------

std::vector<AdderConfig> design_matrix(bool include_rcla) {
  std::vector<AdderConfig> out = {
      {Architecture::SCBCLA, 32, 4, false, 0},
      {Architecture::SCBCLA, 32, 4, false, 4},
      {Architecture::SCBCLA, 32, 4, true, 0},
      {Architecture::SCBCLA, 32, 4, true, 4},
  };
  if (include_rcla) {
    out.push_back({Architecture::RCLA, 32, 4, false, 0});
    out.push_back({Architecture::RCLA, 32, 4, false, 4});
  }
  return out;
}

int reference_group(const AdderConfig& config) {
  return config.architecture == Architecture::RCLA ? 3 : 4;
}

std::vector<AdderVector> critical_vectors(int width, std::size_t random_count,
                                          std::uint64_t seed) {
  if (width < 1 || width > 63) throw ConfigError("vector width out of range");
  const std::uint64_t mask = (1ULL << width) - 1;
  std::vector<AdderVector> out;
  for (bool cin : {false, true}) {
    out.push_back({0, 0, cin});
    out.push_back({mask, mask, cin});
    out.push_back({mask, 0, cin});
    out.push_back({0, mask, cin});
    for (int k = 0; k < width; ++k) {
      const std::uint64_t bit = 1ULL << k;
      out.push_back({mask, bit, cin});         // generate at k, propagate above
      out.push_back({mask & ~bit, 0, cin});    // kill at k
    }
  }
  const auto rnd = random_vectors(width, random_count, seed);
  out.insert(out.end(), rnd.begin(), rnd.end());
  return out;
}

bool LatencyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const OrderingCheck& c) { return c.passed; });
}

LatencyReport latency_report(std::span<const AdderConfig> designs,
                             std::span<const AdderVector> vectors,
                             const DelayModel& delays,
                             std::span<const ReferenceRow> reference) {
  LatencyReport report;
  for (const auto& config : designs) {
    const auto netlist = generate(config);
    LatencyRow row;
    row.config = config;
    row.label = design_label(config);
    row.group = reference_group(config);
    const auto census = gate_census(netlist);
    row.transistors = census.transistors;
    row.gates = census.gates;
    row.area = compose_area(config);
    row.static_depth =
        static_longest_path(netlist, delays.mode == DelayMode::Table
                                         ? delays.table
                                         : unit_delay_table())
            .depth;
    const auto results = run_handshake_cycles(netlist, vectors, delays,
                                              default_monitors(netlist));
    const auto summary = summarize(results);
    row.worst_latency = summary.worst_data_latency;
    row.vectors = summary.cycles;
    row.errors = summary.error_findings;
    row.mean_transitions =
        summary.cycles ? static_cast<double>(summary.transitions) /
                             static_cast<double>(summary.cycles)
                       : 0.0;
    if (const auto* r = find_row(reference, {row.group, row.label})) {
      row.reference_latency_ns = r->latency_ns;
    }
    report.rows.push_back(std::move(row));
  }

  auto find = [&](const AdderConfig& c) -> const LatencyRow* {
    for (const auto& r : report.rows) {
      if (same_config(r.config, c)) return &r;
    }
    return nullptr;
  };
  const auto matrix = design_matrix(true);
  const auto* plain = find(matrix[0]);
  const auto* hplain = find(matrix[1]);
  const auto* alias = find(matrix[2]);
  const auto* halias = find(matrix[3]);
  const auto* rcla = find(matrix[4]);
  const auto* hrcla = find(matrix[5]);
  auto lat = [](const LatencyRow* r) { return fixed(r->worst_latency, 3); };

  if (plain && hplain && alias && halias) {
    OrderingCheck c;
    c.name = "Group4 order hybrid-alias < alias < hybrid-plain < plain";
    c.passed = halias->worst_latency < alias->worst_latency &&
               alias->worst_latency < hplain->worst_latency &&
               hplain->worst_latency < plain->worst_latency;
    c.detail = lat(halias) + " < " + lat(alias) + " < " + lat(hplain) +
               " < " + lat(plain) + " (reference 2.23 < 2.31 < 2.92 < 3.13)";
    report.checks.push_back(std::move(c));
  }
  if (rcla && alias) {
    OrderingCheck c;
    c.name = "RCLA slower than SCBCLA with alias";
    c.passed = rcla->worst_latency > alias->worst_latency;
    c.detail = lat(rcla) + " > " + lat(alias) + " (reference 2.75 > 2.31)";
    report.checks.push_back(std::move(c));
  }
  if (rcla && hrcla) {
    OrderingCheck c;
    c.name = "RCLA-RCA hybrid faster than RCLA";
    c.passed = hrcla->worst_latency < rcla->worst_latency;
    c.detail = lat(hrcla) + " < " + lat(rcla) + " (reference 2.53 < 2.75)";
    report.checks.push_back(std::move(c));
  }
  if (plain && alias && alias->worst_latency > 0) {
    OrderingCheck c;
    const double ratio = plain->worst_latency / alias->worst_latency;
    c.name = "plain/alias latency ratio in [1.15, 1.60]";
    c.passed = ratio >= 1.15 && ratio <= 1.60;
    c.detail = fixed(ratio, 3) + " (reference 3.13/2.31 = 1.355)";
    report.checks.push_back(std::move(c));
  }
  {
    OrderingCheck c;
    c.name = "no monitor errors";
    std::size_t errors = 0;
    for (const auto& r : report.rows) errors += r.errors;
    c.passed = errors == 0;
    c.detail = std::to_string(errors) + " error findings";
    report.checks.push_back(std::move(c));
  }
  if (delays.mode == DelayMode::Unit) {
    OrderingCheck c;
    c.name = "simulated worst latency equals static depth";
    c.passed = true;
    for (const auto& r : report.rows) {
      if (r.worst_latency != r.static_depth) {
        c.passed = false;
        c.detail += r.label + " " + lat(&r) + " vs " + fixed(r.static_depth, 0) +
                    "; ";
      }
    }
    if (c.passed) c.detail = "all designs";
    report.checks.push_back(std::move(c));
  }
  return report;
}

ReportTable LatencyReport::table() const {
  ReportTable t;
  t.title = "unit-delay latency";
  t.columns = {"design",        "group",         "transistors",
               "gates",         "composed_um2",  "static_depth",
               "worst_latency", "vectors",       "mean_transitions",
               "errors",        "reference_ns"};
  for (const auto& r : rows) {
    t.add({r.label, std::to_string(r.group), std::to_string(r.transistors),
           std::to_string(r.gates),
           r.area.priced ? fixed(r.area.area, 2) : "unpriced",
           fixed(r.static_depth, 3), fixed(r.worst_latency, 3),
           std::to_string(r.vectors), fixed(r.mean_transitions, 1),
           std::to_string(r.errors),
           r.reference_latency_ns ? fixed(*r.reference_latency_ns, 2) : "-"});
  }
  return t;
}

ReportTable LatencyReport::checks_table() const {
  ReportTable t;
  t.title = "latency checks";
  t.columns = {"check", "verdict", "detail"};
  for (const auto& c : checks) {
    t.add({c.name, c.passed ? "PASS" : "FAIL", c.detail});
  }
  return t;
}

// ---------------------------------------------------------------------------

std::vector<HopReport> section_hops(const Netlist& netlist) {
  std::vector<HopReport> hops;
  const auto unit = unit_delay_table();
  for (int j = 0; j < 64; ++j) {
    const std::string stem = "sec" + std::to_string(j) + ".clg.";
    const auto h1 = netlist.find_gate(stem + "H1");
    const auto h0 = netlist.find_gate(stem + "H0");
    if (!h1 || !h0) continue;
    auto a1 = netlist.find_gate(stem + "C41alias");
    auto a0 = netlist.find_gate(stem + "C40alias");
    if (!a1 || !a0) {
      a1 = netlist.find_gate(stem + "C41");
      a0 = netlist.find_gate(stem + "C40");
    }
    if (!a1 || !a0) continue;
    const auto& gates = netlist.gates();
    const NetId from[2] = {gates[*h1].inputs.at(1), gates[*h0].inputs.at(1)};
    const NetId to[2] = {gates[*a1].output, gates[*a0].output};
    const auto path = longest_path_between(netlist, from, to, unit);
    HopReport hop;
    hop.section = j;
    hop.from = path.from_net;
    hop.to = path.to_net;
    hop.kinds = path.census;
    hop.depth = path.depth;
    for (const auto& [kind, n] : path.census) {
      hop.transistors += static_cast<long>(n) * cell_spec(kind).transistors;
    }
    hops.push_back(std::move(hop));
  }
  return hops;
}

// ---------------------------------------------------------------------------

ReportTable claims_table(std::span<const PercentClaim> claims) {
  ReportTable t;
  t.title = "percentage claims";
  t.columns = {"claim",    "computed", "verdict",  "stated",
               "tolerance", "metric",  "baseline", "candidate", "formula"};
  for (const auto& c : claims) {
    auto join = [](const std::vector<std::string>& v) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
      return s;
    };
    t.add({c.name, c.complete ? fixed(round1(c.computed), 1) + "%" : "-",
           c.complete ? (c.passed() ? "PASS" : "FAIL") : "INCOMPLETE",
           fixed(c.stated, 1) + "%", "+/-" + fixed(c.tolerance, 2),
           std::string(metric_name(c.metric)),
           join(c.baseline_rows) + " (avg " + fixed(c.baseline, 4) + ")",
           join(c.candidate_rows) + " (avg " + fixed(c.candidate, 4) + ")",
           c.formula()});
  }
  return t;
}

ReportTable identities_table(std::span<const AreaIdentity> ids) {
  ReportTable t;
  t.title = "area identities";
  t.columns = {"identity",  "reference_um2", "composed_um2",
               "tolerance", "verdict",       "operands"};
  for (const auto& i : ids) {
    t.add({i.name, i.complete ? fixed(i.reference, 2) : "-",
           fixed(i.composed, 2), fixed(i.tolerance, 2),
           i.complete ? (i.passed() ? "PASS" : "FAIL") : "INCOMPLETE",
           i.operands});
  }
  return t;
}

ReportTable reference_table(std::span<const ReferenceRow> rows) {
  ReportTable t;
  t.title = "reference rows";
  t.columns = {"group", "design", "power_uW", "latency_ns", "area_um2"};
  for (const auto& r : rows) {
    t.add({std::to_string(r.group), r.design, fixed(r.power_uw, 0),
           fixed(r.latency_ns, 2), fixed(r.area_um2, 2)});
  }
  return t;
}

}  // namespace qdiadd
