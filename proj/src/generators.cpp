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

#include "qdiadd/generators.hpp"

#include <algorithm>
#include <map>

#include "qdiadd/error.hpp"

namespace qdiadd {

namespace {

struct Rails {
  NetId t;  // rail 1
  NetId f;  // rail 0
};

using Bindings = std::map<std::string, Rails>;

// Adds gates under a name prefix; each gate's id equals its output net name.
class Builder {
 public:
  Builder(Netlist& netlist, std::string prefix)
      : netlist_(netlist), prefix_(std::move(prefix)) {}

  std::string name(const std::string& local) const {
    return prefix_.empty() ? local : prefix_ + "." + local;
  }

  NetId gate(CellKind kind, const std::string& out, std::vector<NetId> ins) {
    const auto full = name(out);
    const NetId net = netlist_.net(full);
    netlist_.add_gate(full, kind, std::move(ins), net);
    return net;
  }

  Rails input(const std::string& label) {
    const Rails r{netlist_.net(name(label + ".1")),
                  netlist_.net(name(label + ".0"))};
    netlist_.add_input(label, r.t, r.f);
    return r;
  }

  void output(const std::string& label, Rails r) {
    netlist_.add_output(label, r.t, r.f);
  }

  Netlist& netlist() { return netlist_; }

 private:
  Netlist& netlist_;
  std::string prefix_;
};

// Copies `child` into `parent` under `prefix`. Child input pairs are
// replaced by the bound parent rails; returns the child's output pairs.
Bindings instantiate(Netlist& parent, const Netlist& child,
                     const std::string& prefix, const Bindings& bindings) {
  std::vector<NetId> map(child.net_count(), kNoNet);
  for (const auto& p : child.inputs()) {
    auto it = bindings.find(p.label);
    if (it == bindings.end()) {
      throw ConfigError("unbound port '" + p.label + "' of " + child.name());
    }
    map[p.rail1] = it->second.t;
    map[p.rail0] = it->second.f;
  }
  auto resolve = [&](NetId id) {
    if (map[id] == kNoNet) {
      map[id] = parent.net(prefix + "." + child.net_name(id));
    }
    return map[id];
  };
  for (const auto& g : child.gates()) {
    std::vector<NetId> ins;
    ins.reserve(g.inputs.size());
    for (NetId in : g.inputs) ins.push_back(resolve(in));
    parent.add_gate(prefix + "." + g.id, g.kind, std::move(ins),
                    resolve(g.output));
  }
  Bindings outs;
  for (const auto& p : child.outputs()) {
    outs[p.label] = {resolve(p.rail1), resolve(p.rail0)};
  }
  return outs;
}

struct BitSignals {
  std::vector<NetId> g, k, p;  // generate, kill, propagate per bit
};

BitSignals bit_signals(Builder& b, const std::vector<Rails>& a,
                       const std::vector<Rails>& bb) {
  BitSignals s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto n = std::to_string(i);
    s.g.push_back(b.gate(CellKind::AND2, "g" + n, {a[i].t, bb[i].t}));
    s.k.push_back(b.gate(CellKind::AND2, "k" + n, {a[i].f, bb[i].f}));
    s.p.push_back(
        b.gate(CellKind::AO22, "p" + n, {a[i].t, bb[i].f, a[i].f, bb[i].t}));
  }
  return s;
}

CellKind or_of(std::size_t n) {
  switch (n) {
    case 2:
      return CellKind::OR2;
    case 3:
      return CellKind::OR3;
    case 4:
      return CellKind::OR4;
  }
  throw ConfigError("no OR gate with " + std::to_string(n) + " inputs");
}

CellKind and_of(std::size_t n) {
  switch (n) {
    case 2:
      return CellKind::AND2;
    case 3:
      return CellKind::AND3;
    case 4:
      return CellKind::AND4;
  }
  throw ConfigError("no AND gate with " + std::to_string(n) + " inputs");
}

struct Lookahead {
  NetId generate;   // carry set inside the span, independent of cin
  NetId kill;       // carry cleared inside the span
  NetId propagate;  // every bit propagates: carry equals cin
  Rails carry;
};

// Lookahead carry out of bits [0, j). Terms are disjoint products: g_{j-1},
// p_{j-1} g_{j-2}, p_{j-1} p_{j-2} g_{j-3}, ... with the propagate prefix
// built as a chain of C-elements so each product indicates its operands.
// The final stage is OR2(G, C2(N, cin)) on each rail.
Lookahead lookahead_carry(Builder& b, const BitSignals& s, std::size_t j,
                          Rails cin, const std::string& tag) {
  std::vector<NetId> gen_terms{s.g[j - 1]};
  std::vector<NetId> kill_terms{s.k[j - 1]};
  NetId prefix = s.p[j - 1];
  std::string prefix_name = std::to_string(j - 1);
  for (std::size_t i = j - 1; i-- > 0;) {
    const auto n = std::to_string(i);
    gen_terms.push_back(
        b.gate(CellKind::C2, "T" + n + tag, {prefix, s.g[i]}));
    kill_terms.push_back(
        b.gate(CellKind::C2, "U" + n + tag, {prefix, s.k[i]}));
    if (i > 0) {
      prefix_name += n;
      prefix = b.gate(CellKind::C2, "Q" + prefix_name + tag, {prefix, s.p[i]});
    }
  }

  Lookahead la{};
  if (j == 1) {
    la.generate = s.g[0];
    la.kill = s.k[0];
    la.propagate = s.p[0];
  } else {
    la.generate = b.gate(or_of(gen_terms.size()), "G" + tag, gen_terms);
    la.kill = b.gate(or_of(kill_terms.size()), "K" + tag, kill_terms);
    std::vector<NetId> props(s.p.begin(),
                             s.p.begin() + static_cast<long>(j));
    std::reverse(props.begin(), props.end());
    la.propagate = b.gate(and_of(j), "N" + tag, props);
  }
  const NetId h1 = b.gate(CellKind::C2, "H1" + tag, {la.propagate, cin.t});
  const NetId h0 = b.gate(CellKind::C2, "H0" + tag, {la.propagate, cin.f});
  la.carry.t = b.gate(CellKind::OR2, "C" + std::to_string(j) + "1" + tag,
                      {la.generate, h1});
  la.carry.f = b.gate(CellKind::OR2, "C" + std::to_string(j) + "0" + tag,
                      {la.kill, h0});
  return la;
}

void require_section(int section) {
  if (section != 4) {
    throw ConfigError("unsupported section size " + std::to_string(section) +
                      " (only 4-bit sections are available)");
  }
}

std::vector<Rails> bus_inputs(Builder& b, const std::string& stem, int n) {
  std::vector<Rails> bus;
  for (int i = 0; i < n; ++i) bus.push_back(b.input(stem + std::to_string(i)));
  return bus;
}

// m-bit early output ripple stage: FAs with the most significant bit as SOL
// when `sol_msb` is set. Returns the carry out of the last FA (or none).
Rails ripple_bits(Netlist& top, const std::string& prefix,
                  const std::vector<Rails>& a, const std::vector<Rails>& b,
                  int first_bit, int bits, Rails cin, bool sol_msb,
                  std::vector<Rails>& sums) {
  static const Netlist fa = gen_full_adder_eo();
  static const Netlist sol = gen_sol_eo();
  Rails carry = cin;
  for (int i = 0; i < bits; ++i) {
    const auto bit = static_cast<std::size_t>(first_bit + i);
    const bool last_sol = sol_msb && i == bits - 1;
    const auto inst = prefix + (last_sol ? "sol" : "fa" + std::to_string(i));
    auto outs = instantiate(top, last_sol ? sol : fa, inst,
                            {{"a", a[bit]}, {"b", b[bit]}, {"cin", carry}});
    sums[bit] = outs.at("sum");
    if (!last_sol) carry = outs.at("cout");
  }
  return carry;
}

struct AdderFrame {
  Netlist netlist;
  std::vector<Rails> a, b, sums;
  Rails cin{};
};

AdderFrame adder_frame(const std::string& name, int width) {
  AdderFrame f{Netlist(name), {}, {}, {}, {}};
  Builder top(f.netlist, "");
  f.a = bus_inputs(top, "a", width);
  f.b = bus_inputs(top, "b", width);
  f.cin = top.input("cin");
  f.sums.resize(static_cast<std::size_t>(width));
  return f;
}

void finish_adder(AdderFrame& f, Rails cout) {
  for (std::size_t i = 0; i < f.sums.size(); ++i) {
    f.netlist.add_output("s" + std::to_string(i), f.sums[i].t, f.sums[i].f);
  }
  f.netlist.add_output("cout", cout.t, cout.f);
}

Bindings section_bindings(const AdderFrame& f, int first_bit, int bits,
                          Rails cin) {
  Bindings bind{{"cin", cin}};
  for (int i = 0; i < bits; ++i) {
    const auto bit = static_cast<std::size_t>(first_bit + i);
    bind["a" + std::to_string(i)] = f.a[bit];
    bind["b" + std::to_string(i)] = f.b[bit];
  }
  return bind;
}

Netlist rcla_section();

std::string hybrid_suffix(int rca_width) {
  return rca_width > 0 ? "_rca" + std::to_string(rca_width) : "";
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view architecture_name(Architecture arch) {
  switch (arch) {
    case Architecture::RCA:
      return "rca";
    case Architecture::SCBCLA:
      return "scbcla";
    case Architecture::RCLA:
      return "rcla";
  }
  return "?";
}

void check_config(const AdderConfig& c) {
  if (c.width < 1) throw ConfigError("width must be at least 1");
  if (c.width > 63) throw ConfigError("width must be at most 63");
  if (c.architecture == Architecture::RCA) {
    if (c.alias) throw ConfigError("ripple-carry adders have no alias logic");
    if (c.hybrid_rca_width != 0) {
      throw ConfigError("hybrid RCA width applies to lookahead adders only");
    }
    return;
  }
  if (c.section < 1 || c.width % c.section != 0) {
    throw ConfigError("section size " + std::to_string(c.section) +
                      " does not divide width " + std::to_string(c.width));
  }
  require_section(c.section);
  if (c.architecture == Architecture::RCLA && c.alias) {
    throw ConfigError(
        "RCLA sections feed their lookahead carry straight into the next "
        "section; no alias carry output exists");
  }
  if (c.hybrid_rca_width < 0 || c.hybrid_rca_width % c.section != 0 ||
      c.hybrid_rca_width >= c.width) {
    throw ConfigError("hybrid RCA width " + std::to_string(c.hybrid_rca_width) +
                      " must be a multiple of the section size and below the "
                      "width");
  }
}

std::string design_label(const AdderConfig& c) {
  const bool hybrid = c.hybrid_rca_width > 0;
  switch (c.architecture) {
    case Architecture::RCA:
      return "RCA";
    case Architecture::RCLA:
      return hybrid ? "RCLA-RCA hybrid" : "RCLA";
    case Architecture::SCBCLA:
      break;
  }
  std::string label = hybrid ? "SCBCLA-RCA hybrid" : "SCBCLA";
  label += c.alias ? " (With alias logic)" : " (Without alias logic)";
  return label;
}

Netlist gen_full_adder_eo() {
  Netlist n("fa_eo");
  Builder b(n, "");
  const Rails a = b.input("a");
  const Rails bb = b.input("b");
  const Rails c = b.input("cin");
  const NetId p1 = b.gate(CellKind::AO22, "P1", {a.t, bb.f, a.f, bb.t});
  const NetId p0 = b.gate(CellKind::AO22, "P0", {a.t, bb.t, a.f, bb.f});
  const NetId s1 = b.gate(CellKind::AO22, "S1", {p1, c.f, p0, c.t});
  const NetId s0 = b.gate(CellKind::AO22, "S0", {p0, c.f, p1, c.t});
  const NetId co1 = b.gate(CellKind::AO22, "CO1", {a.t, bb.t, p1, c.t});
  const NetId co0 = b.gate(CellKind::AO22, "CO0", {a.f, bb.f, p1, c.f});
  b.output("sum", {s1, s0});
  b.output("cout", {co1, co0});
  return n;
}

Netlist gen_sol_eo() {
  Netlist n("sol_eo");
  Builder b(n, "");
  const Rails a = b.input("a");
  const Rails bb = b.input("b");
  const Rails c = b.input("cin");
  const NetId p1 = b.gate(CellKind::AO22, "P1", {a.t, bb.f, a.f, bb.t});
  const NetId p0 = b.gate(CellKind::AO22, "P0", {a.t, bb.t, a.f, bb.f});
  const NetId s1 = b.gate(CellKind::AO22, "S1", {p1, c.f, p0, c.t});
  const NetId s0 = b.gate(CellKind::AO22, "S0", {p0, c.f, p1, c.t});
  b.output("sum", {s1, s0});
  return n;
}

Netlist gen_rca(int width) {
  if (width < 1) throw ConfigError("RCA width must be at least 1");
  check_config({Architecture::RCA, width, 1, false, 0});
  auto f = adder_frame("rca" + std::to_string(width), width);
  const Rails cout =
      ripple_bits(f.netlist, "", f.a, f.b, 0, width, f.cin, false, f.sums);
  finish_adder(f, cout);
  return std::move(f.netlist);
}

Netlist gen_scbclg(int section, bool alias) {
  require_section(section);
  Netlist n(alias ? "scbclg4_alias" : "scbclg4");
  Builder b(n, "");
  const auto a = bus_inputs(b, "a", section);
  const auto bb = bus_inputs(b, "b", section);
  const Rails cin = b.input("cin");
  const auto s = bit_signals(b, a, bb);
  const auto la =
      lookahead_carry(b, s, static_cast<std::size_t>(section), cin, "");
  n.add_probe("N", la.propagate);
  b.output("c4", la.carry);
  if (alias) {
    // Y = A.B + C.D with G on both legs of the second product: N.cin + G.
    const NetId y1 = b.gate(CellKind::ALIAS, "C41alias",
                            {la.propagate, cin.t, la.generate, la.generate});
    const NetId y0 = b.gate(CellKind::ALIAS, "C40alias",
                            {la.propagate, cin.f, la.kill, la.kill});
    b.output("c4alias", {y1, y0});
  }
  return n;
}

namespace {

Netlist rcla_section() {
  Netlist n("rcla4");
  Builder b(n, "");
  const auto a = bus_inputs(b, "a", 4);
  const auto bb = bus_inputs(b, "b", 4);
  const Rails cin = b.input("cin");
  const auto s = bit_signals(b, a, bb);
  std::vector<Rails> carries{cin};
  for (std::size_t j = 1; j <= 4; ++j) {
    carries.push_back(
        lookahead_carry(b, s, j, cin, "_" + std::to_string(j)).carry);
  }
  static const Netlist sol = gen_sol_eo();
  std::vector<Rails> sums;
  for (std::size_t i = 0; i < 4; ++i) {
    auto outs = instantiate(n, sol, "sol" + std::to_string(i),
                            {{"a", a[i]}, {"b", bb[i]}, {"cin", carries[i]}});
    sums.push_back(outs.at("sum"));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    b.output("s" + std::to_string(i), sums[i]);
  }
  b.output("c4", carries[4]);
  return n;
}

Netlist scbcla_impl(int width, int section, bool alias, int rca_width) {
  check_config({Architecture::SCBCLA, width, section, alias, rca_width});
  auto f = adder_frame(
      "scbcla" + std::to_string(width) + (alias ? "_alias" : "") +
          hybrid_suffix(rca_width),
      width);
  Rails carry = f.cin;
  if (rca_width > 0) {
    carry = ripple_bits(f.netlist, "rca.", f.a, f.b, 0, rca_width, carry,
                        false, f.sums);
  }
  const Netlist clg = gen_scbclg(section, alias);
  Rails cout{};
  for (int first = rca_width, j = rca_width / section; first < width;
       first += section, ++j) {
    const auto prefix = "sec" + std::to_string(j);
    auto outs = instantiate(f.netlist, clg, prefix + ".clg",
                            section_bindings(f, first, section, carry));
    ripple_bits(f.netlist, prefix + ".", f.a, f.b, first, section, carry,
                true, f.sums);
    cout = outs.at("c4");
    carry = alias ? outs.at("c4alias") : outs.at("c4");
  }
  finish_adder(f, cout);
  return std::move(f.netlist);
}

Netlist rcla_impl(int width, int section, int rca_width) {
  check_config({Architecture::RCLA, width, section, false, rca_width});
  auto f = adder_frame(
      "rcla" + std::to_string(width) + hybrid_suffix(rca_width), width);
  Rails carry = f.cin;
  if (rca_width > 0) {
    carry = ripple_bits(f.netlist, "rca.", f.a, f.b, 0, rca_width, carry,
                        false, f.sums);
  }
  static const Netlist block = rcla_section();
  for (int first = rca_width, j = rca_width / section; first < width;
       first += section, ++j) {
    auto outs = instantiate(f.netlist, block, "sec" + std::to_string(j),
                            section_bindings(f, first, section, carry));
    for (int i = 0; i < section; ++i) {
      f.sums[static_cast<std::size_t>(first + i)] =
          outs.at("s" + std::to_string(i));
    }
    carry = outs.at("c4");
  }
  finish_adder(f, carry);
  return std::move(f.netlist);
}

}  // namespace

Netlist gen_scbcla(int width, int section, bool alias) {
  return scbcla_impl(width, section, alias, 0);
}

Netlist gen_scbcla_rca_hybrid(int width, int section, bool alias,
                              int rca_width) {
  if (rca_width <= 0) {
    throw ConfigError("hybrid RCA width must be positive");
  }
  return scbcla_impl(width, section, alias, rca_width);
}

Netlist gen_rcla(int width, int section) { return rcla_impl(width, section, 0); }

Netlist gen_rcla_rca_hybrid(int width, int section, int rca_width) {
  if (rca_width <= 0) {
    throw ConfigError("hybrid RCA width must be positive");
  }
  return rcla_impl(width, section, rca_width);
}

Netlist gen_completion_detector(int pair_count) {
  if (pair_count < 1) {
    throw ConfigError("completion detector needs at least one pair");
  }
  Netlist n("cd" + std::to_string(pair_count));
  Builder b(n, "");
  std::vector<NetId> level;
  for (int i = 0; i < pair_count; ++i) {
    const auto label = "d" + std::to_string(i);
    const Rails r = b.input(label);
    level.push_back(b.gate(CellKind::OR2,
                           pair_count == 1 ? "done" : "v" + std::to_string(i),
                           {r.t, r.f}));
  }
  for (int depth = 0; level.size() > 1; ++depth) {
    std::vector<NetId> next;
    std::size_t i = 0;
    int idx = 0;
    while (i < level.size()) {
      const auto remaining = level.size() - i;
      const bool last_level = level.size() <= 3;
      const auto out = last_level ? std::string("done")
                                  : "t" + std::to_string(depth) + "_" +
                                        std::to_string(idx);
      if (remaining >= 3 && remaining != 4) {
        next.push_back(b.gate(CellKind::C3, out,
                              {level[i], level[i + 1], level[i + 2]}));
        i += 3;
      } else if (remaining >= 2) {
        next.push_back(b.gate(CellKind::C2, out, {level[i], level[i + 1]}));
        i += 2;
      } else {
        next.push_back(level[i]);
        i += 1;
      }
      ++idx;
    }
    level = std::move(next);
  }
  n.add_probe("done", level.front());
  return n;
}

Netlist generate(const AdderConfig& c) {
  check_config(c);
  switch (c.architecture) {
    case Architecture::RCA:
      return gen_rca(c.width);
    case Architecture::SCBCLA:
      return c.hybrid_rca_width > 0
                 ? gen_scbcla_rca_hybrid(c.width, c.section, c.alias,
                                         c.hybrid_rca_width)
                 : gen_scbcla(c.width, c.section, c.alias);
    case Architecture::RCLA:
      return c.hybrid_rca_width > 0
                 ? gen_rcla_rca_hybrid(c.width, c.section, c.hybrid_rca_width)
                 : gen_rcla(c.width, c.section);
  }
  throw ConfigError("unknown architecture");
}

}  // namespace qdiadd
