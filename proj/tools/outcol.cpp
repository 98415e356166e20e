// Copyright 2026 The outcol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// outcol: command-line front end for the out-colouring library.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

#include "outcol/catalog.hpp"
#include "outcol/error.hpp"
#include "outcol/formula.hpp"
#include "outcol/isomorphism.hpp"
#include "outcol/kpartition.hpp"
#include "outcol/oracle.hpp"
#include "outcol/outcolour.hpp"
#include "outcol/reductions.hpp"
#include "outcol/structure.hpp"

#ifndef OUTCOL_VERSION
#define OUTCOL_VERSION "0.0.0"
#endif

namespace {

using nlohmann::json;
using namespace outcol;

constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitError = 2;

struct Globals {
  std::string format = "json";
  int threads = 0;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int thread_count(const Globals& g) { return g.threads > 0 ? g.threads : oracle::default_threads(); }

json colouring_json(const Colouring& c) { return c.colour; }

json partition_json(const TwoPartition& p) {
  std::vector<int> side(static_cast<std::size_t>(p.order()));
  for (int v = 0; v < p.order(); ++v) side[static_cast<std::size_t>(v)] = p.side_of(v) + 1;
  return side;
}

json certificate_json(const Certificate& c) {
  json j;
  j["kind"] = certificate_kind_name(c.kind);
  if (c.vertex >= 0) j["vertex"] = c.vertex;
  if (!c.class_name.empty()) j["class"] = c.class_name;
  if (c.g1) j["g1"] = {{"w", c.g1->w}, {"cycle", c.g1->cycle}, {"z", c.g1->z}};
  if (c.g2) j["g2"] = {{"cycle", c.g2->cycle}, {"cycle2", c.g2->cycle2}, {"z", c.g2->z}};
  if (!c.component.empty()) j["component"] = c.component;
  return j;
}

json diagnostics_json(const SolveDiagnostics& d) {
  return {{"arcs_stripped", d.arcs_stripped},   {"candidates_tried", d.candidates_tried},
          {"lift_searches", d.lift_searches},   {"oracle_fallbacks", d.oracle_fallbacks},
          {"proof_gaps", d.proof_gaps},         {"small_set_fallbacks", d.small_set_fallbacks}};
}

void print_plain(std::ostream& out, const json& report) {
  for (const auto& [key, value] : report.items()) {
    if (key == "timing") continue;
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  if (report.contains("timing")) out << "elapsed_ms: " << report["timing"]["elapsed_ms"].dump() << '\n';
}

// Fills in the common fields and prints; returns the exit code for `status`.
int emit(const Globals& g, json report, const std::string& command, std::chrono::steady_clock::time_point start) {
  report["command"] = command;
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report["timing"] = {{"elapsed_ms", ms}};
  if (g.format == "plain")
    print_plain(std::cout, report);
  else
    std::cout << report.dump(2) << '\n';
  const std::string status = report.value("status", "ok");
  return status == "ok" ? kExitOk : status == "no-solution" ? kExitNoSolution : kExitError;
}

std::uint64_t parse_seed(const std::string& s) {
  if (s == "random") return std::random_device{}() ^ (static_cast<std::uint64_t>(std::random_device{}()) << 32);
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::BadParameter, "seed must be a non-negative integer or 'random'");
  }
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::vector<std::string> name;
  std::string out_dir;
  bool derive = false;
};

int run_gen(const Globals& g, const GenArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  std::string name = a.name.at(0);
  if (name == "exceptions" || name == "unbalanceable6") {
    if (a.out_dir.empty()) throw Error(Errc::BadParameter, "catalog generation needs --out");
    const ExceptionCatalog cat = name == "exceptions" ? (a.derive ? derive_exceptions_delta2(5, thread_count(g)) : exceptions_delta2())
                                                      : (a.derive ? derive_unbalanceable6(thread_count(g)) : unbalanceable6());
    save_catalog(cat, a.out_dir);
    json names = json::array();
    for (const auto& c : cat.classes) names.push_back(c.name);
    return emit(g, {{"status", "ok"}, {"catalog", name}, {"classes", names}, {"derived", a.derive}, {"out", a.out_dir}},
                "gen", start);
  }
  if (a.name.size() > 1) {
    name += "(";
    for (std::size_t i = 1; i < a.name.size(); ++i) name += (i > 1 ? "," : "") + a.name[i];
    name += ")";
  }
  write_digraph(std::cout, build(name));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::string file;
  bool balanced = false;
  int colours = 2;
  bool certify = false;
};

bool is_two_out_regular(const Digraph& d) {
  for (int v = 0; v < d.order(); ++v)
    if (d.out_degree(v) != 2) return false;
  return d.order() > 0;
}

int run_solve(const Globals& g, const SolveArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = read_input(a.file);
  const Digraph d = parse_digraph(text);
  json report;
  report["input_digest"] = form_hash(text);
  report["balanced"] = a.balanced;
  report["colours"] = a.colours;

  std::optional<Colouring> colouring;
  std::optional<Certificate> certificate;
  std::string method;
  const bool semicomplete = is_semicomplete(d);

  if (a.colours == 3) {
    if (semicomplete && d.order() > 0 && d.min_out_degree() >= 2 && !a.balanced) {
      colouring = three_out_colouring(d);
      method = "three-out-colouring";
    } else {
      colouring = oracle::brute_force_out_colouring(d, 3, a.balanced);
      method = "oracle";
    }
  } else if (semicomplete) {
    SolveOutcome s = solve_semicomplete(d);
    method = "semicomplete";
    report["diagnostics"] = diagnostics_json(s.diagnostics);
    colouring = s.colouring;
    certificate = s.certificate;
    if (colouring && a.balanced) {
      RebalanceOutcome r = rebalance(d, *colouring);
      colouring = r.colouring;
      certificate = r.certificate;
      report["rebalance"] = {{"generic_steps", r.stats.generic_steps}, {"moves", r.stats.moves},
                             {"proof_exchanges", r.stats.proof_exchanges}};
    }
  } else if (is_two_out_regular(d) && !a.balanced) {
    TwoOutRegularOutcome s = solve_2outregular(d);
    method = "two-out-regular";
    colouring = s.colouring;
    if (!colouring) report["odd_cycle"] = s.odd_cycle;
  } else {
    colouring = oracle::brute_force_out_colouring(d, 2, a.balanced);
    method = "oracle";
  }

  report["method"] = method;
  if (colouring) {
    const bool verified = !verify_out_colouring(d, *colouring) && (!a.balanced || colouring->balanced());
    if (!verified) throw Error(Errc::InvalidArgument, "internal error: produced colouring failed verification");
    report["status"] = "ok";
    report["colouring"] = colouring_json(*colouring);
    report["verified"] = true;
  } else {
    report["status"] = "no-solution";
    report["verified"] = false;
    if (certificate) {
      report["certificate"] = certificate_json(*certificate);
      if (a.certify) report["certificate_valid"] = validate_certificate(d, *certificate);
    }
  }
  return emit(g, std::move(report), "solve", start);
}

// ---------------------------------------------------------------------------
// partition

struct PartitionArgs {
  std::string file;
  int k = 1;
  int r = 2;
  bool inout = false;
  std::string seed = "0";
  int max_retries = 50;
  bool force = false;
  bool shuffle = false;
  double epsilon = 0.1;
  std::string stats;
};

void write_stats(const std::string& path, const std::vector<AttemptStat>& attempts) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << "attempt,failing_vertices,worst_deficit\n";
  for (const auto& s : attempts) out << s.attempt << ',' << s.failing_vertices << ',' << s.worst_deficit << '\n';
}

int run_partition(const Globals& g, const PartitionArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = read_input(a.file);
  const Digraph d = parse_digraph(text);
  PartitionConfig cfg;
  cfg.k = a.k;
  cfg.epsilon = a.epsilon;
  cfg.max_retries = a.max_retries;
  cfg.seed = parse_seed(a.seed);
  cfg.force = a.force;
  cfg.shuffle = a.shuffle;

  json report;
  report["input_digest"] = form_hash(text);
  report["k"] = a.k;
  report["seed"] = cfg.seed;

  if (a.r != 2) {
    if (a.inout) throw Error(Errc::BadParameter, "--inout applies to 2-partitions only");
    report["r"] = a.r;
    try {
      RPartition p = partition_r(d, a.r, cfg);
      if (!r_partition_violations(d, p.part, a.r, a.k).empty())
        throw Error(Errc::InvalidArgument, "internal error: produced partition failed verification");
      report["status"] = "ok";
      report["part"] = p.part;
      report["attempts"] = p.attempts.size();
      report["verified"] = true;
      if (!a.stats.empty()) write_stats(a.stats, p.attempts);
    } catch (const Error& e) {
      if (e.code() != Errc::Exhausted) throw;
      report["status"] = "no-solution";
      report["reason"] = e.what();
    }
    return emit(g, std::move(report), "partition", start);
  }

  PartitionResult r = a.inout ? partition_k_inout(d, cfg) : partition_k(d, cfg);
  if (!a.stats.empty()) write_stats(a.stats, r.attempts);
  report["attempts"] = r.attempts.size();
  report["inout"] = a.inout;
  if (r.partition) {
    bool ok = !verify_kpartition(d, *r.partition, a.k) && r.partition->balanced();
    for (int v = 0; a.inout && ok && v < d.order(); ++v)
      for (int side = 0; side < 2; ++side)
        if (d.in(v).count_common(r.partition->part(side)) < a.k) ok = false;
    if (!ok) throw Error(Errc::InvalidArgument, "internal error: produced partition failed verification");
    report["status"] = "ok";
    report["partition"] = partition_json(*r.partition);
    report["verified"] = true;
  } else {
    report["status"] = "no-solution";
    report["reason"] = "retries exhausted";
  }
  return emit(g, std::move(report), "partition", start);
}

// ---------------------------------------------------------------------------
// reduce

struct ReduceArgs {
  std::string kind;
  std::string file;
  std::string map;
};

int run_reduce(const Globals&, const ReduceArgs& a) {
  std::istringstream in(read_input(a.file));
  Digraph out;
  json map;
  map["reduction"] = a.kind;
  if (a.kind == "nae2bt") {
    const auto r = nae_to_bipartite_tournament(read_nae(in));
    out = r.digraph;
    std::vector<int> vars(static_cast<std::size_t>(r.n_vars));
    for (int i = 0; i < r.n_vars; ++i) vars[static_cast<std::size_t>(i)] = r.var_vertex(i);
    map["variable_vertex"] = vars;
    map["clause_order"] = r.clause_order;
    map["clause_vertex"] = r.clause_vertex;
    map["star"] = r.star;
    map["double_star"] = r.double_star;
  } else if (a.kind == "nae2nice") {
    const auto r = nae_to_nice_partition_digraph(read_nae(in));
    out = r.digraph;
    static const char* const names[] = {"a", "b", "v", "v'", "vbar", "vbar'"};
    json gadgets = json::array();
    for (int i = 0; i < r.n_vars; ++i) {
      json gj;
      for (int k = 0; k < kGadgetSize; ++k) gj[names[k]] = r.gadget(i, static_cast<GadgetVertex>(k));
      gadgets.push_back(gj);
    }
    map["gadgets"] = gadgets;
    std::vector<int> ds, cs;
    for (int j = 0; j < r.n_clauses; ++j) {
      ds.push_back(r.d_vertex(j));
      cs.push_back(r.c_vertex(j));
    }
    map["d_vertex"] = ds;
    map["c_vertex"] = cs;
  } else if (a.kind == "hyp2sym") {
    const auto r = hypergraph_to_symmetric_digraph(read_hypergraph(in));
    out = r.digraph;
    map["points"] = r.n_points;
    map["edge_vertex_offset"] = r.n_points;
    map["apex"] = r.apex;
  } else if (a.kind == "tds") {
    out = total_domination_bridge(read_undirected(in));
    map["identity"] = true;
  } else {
    throw Error(Errc::BadParameter, "unknown reduction " + a.kind);
  }
  if (!a.map.empty()) {
    std::ofstream m(a.map);
    if (!m) throw Error(Errc::InvalidArgument, "cannot write " + a.map);
    m << map.dump(2) << '\n';
  }
  write_digraph(std::cout, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
  std::string file;
  int colours = 2;
  bool balanced = false;
  int partition_k = -1;
};

int run_oracle(const Globals& g, const OracleArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = read_input(a.file);
  const Digraph d = parse_digraph(text);
  json report;
  report["input_digest"] = form_hash(text);
  report["balanced"] = a.balanced;
  if (a.partition_k >= 0) {
    report["partition_k"] = a.partition_k;
    const auto p = oracle::brute_force_partition_k(d, a.partition_k, a.balanced);
    report["status"] = p ? "ok" : "no-solution";
    if (p) report["partition"] = partition_json(*p);
  } else {
    report["colours"] = a.colours;
    const auto c = oracle::brute_force_out_colouring(d, a.colours, a.balanced);
    report["status"] = c ? "ok" : "no-solution";
    if (c) report["colouring"] = colouring_json(*c);
  }
  return emit(g, std::move(report), "oracle", start);
}

// ---------------------------------------------------------------------------
// scan

struct ScanArgs {
  std::string cls;
  int n = 0;
  std::string predicate = "all";
  std::string out_dir;
};

std::function<bool(const oracle::SmallDigraph&)> scan_predicate(const std::string& p) {
  if (p == "all") return {};
  if (p == "delta2") return [](const oracle::SmallDigraph& s) { return s.min_out_degree() >= 2; };
  if (p == "no-colouring")
    return [](const oracle::SmallDigraph& s) {
      return s.min_out_degree() >= 2 && !oracle::mask_two_out_colourable(s.out.data(), s.n);
    };
  if (p == "unbalanceable")
    return [](const oracle::SmallDigraph& s) { return oracle::mask_colourability(s.out.data(), s.n) == 1U; };
  if (p == "strong") return [](const oracle::SmallDigraph& s) { return is_strong(s.to_digraph()); };
  throw Error(Errc::BadParameter, "unknown predicate " + p + " (all, delta2, no-colouring, unbalanceable, strong, exceptions)");
}

int run_scan(const Globals& g, const ScanArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  oracle::GraphClass cls;
  if (a.cls == "tournaments")
    cls = oracle::GraphClass::Tournament;
  else if (a.cls == "semicomplete")
    cls = oracle::GraphClass::Semicomplete;
  else
    throw Error(Errc::BadParameter, "class must be tournaments or semicomplete");
  oracle::check_enumeration_guard(a.n, cls);

  ExceptionCatalog cat;
  cat.source = CatalogSource::Derived;
  json report;
  report["class"] = a.cls;
  report["n"] = a.n;
  report["predicate"] = a.predicate;
  if (a.predicate == "exceptions") {
    if (cls != oracle::GraphClass::Semicomplete) throw Error(Errc::BadParameter, "exceptions are derived over semicomplete digraphs");
    for (const auto& c : derive_exceptions_delta2(a.n, thread_count(g)).classes)
      if (digraph_from_form(c.form).order() == a.n) cat.classes.push_back(c);
    report["labelled"] = oracle::class_size(a.n, cls);
  } else {
    oracle::EnumerationSpec spec;
    spec.n = a.n;
    spec.cls = cls;
    spec.predicate = scan_predicate(a.predicate);
    spec.dedup_canonical = true;
    const auto stats = oracle::enumerate(spec, {}, thread_count(g));
    report["labelled"] = stats.labelled;
    report["accepted"] = stats.accepted;
    for (std::size_t i = 0; i < stats.classes.size(); ++i)
      cat.classes.push_back({"scan-" + a.predicate + "-" + std::to_string(a.n) + "-" + std::to_string(i + 1), stats.classes[i]});
  }
  json classes = json::array();
  for (const auto& c : cat.classes) classes.push_back({{"name", c.name}, {"form", form_to_hex(c.form)}});
  report["classes"] = classes;
  report["class_count"] = cat.classes.size();
  if (!a.out_dir.empty()) {
    save_catalog(cat, a.out_dir);
    report["out"] = a.out_dir;
  }
  report["status"] = "ok";
  return emit(g, std::move(report), "scan", start);
}

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumArgs {
  int q = 0;
  bool discrepancy = false;
};

int run_spectrum(const Globals& g, const SpectrumArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const PaleySpectrum s = paley_spectrum(a.q);
  json report;
  report["q"] = s.q;
  report["identity_holds"] = s.identity_holds;
  json ev = json::array();
  for (const auto& [value, mult] : s.eigenvalues) ev.push_back({{"value", value}, {"multiplicity", mult}});
  report["eigenvalues_of_AtA"] = ev;
  if (a.discrepancy) {
    const Discrepancy disc = discrepancy_exhaustive(paley(a.q));
    report["discrepancy"] = disc.value;
    report["discrepancy_sign"] = disc.sign;
  }
  report["status"] = s.identity_holds ? "ok" : "error";
  return emit(g, std::move(report), "spectrum", start);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Out-colourings and k-partitions of tournaments and semicomplete digraphs"};
  app.set_version_flag("--version", std::string("outcol ") + OUTCOL_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"json", "plain"}));
  app.add_option("--threads", globals.threads, "Worker threads (overrides OUTCOL_THREADS)")->check(CLI::PositiveNumber);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a named digraph, or persist a catalog");
  gen_cmd->add_option("name", gen.name, "rt5 | t7 | p7 | cd3 | w4 | paley Q | bkr K R | transitive N | cycle N | exceptions | unbalanceable6")
      ->required();
  gen_cmd->add_option("--out", gen.out_dir, "Catalog directory");
  gen_cmd->add_flag("--derive", gen.derive, "Re-derive the catalog by exhaustive search");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Find a 2- or 3-out-colouring or a certificate");
  solve_cmd->add_option("file", solve.file, "Digraph file, - for stdin")->required();
  solve_cmd->add_flag("--balanced", solve.balanced);
  solve_cmd->add_option("--colours", solve.colours)->check(CLI::IsMember({2, 3}));
  solve_cmd->add_flag("--certify", solve.certify, "Re-validate the certificate");

  PartitionArgs part;
  auto* part_cmd = app.add_subcommand("partition", "Randomized k-partition");
  part_cmd->add_option("file", part.file, "Digraph file, - for stdin")->required();
  part_cmd->add_option("--k", part.k)->required()->check(CLI::NonNegativeNumber);
  part_cmd->add_option("--r", part.r, "Number of parts")->check(CLI::PositiveNumber);
  part_cmd->add_flag("--inout", part.inout, "Require k in- and out-neighbours in each part");
  part_cmd->add_option("--seed", part.seed, "Integer seed or 'random'");
  part_cmd->add_option("--max-retries", part.max_retries)->check(CLI::PositiveNumber);
  part_cmd->add_option("--epsilon", part.epsilon)->check(CLI::NonNegativeNumber);
  part_cmd->add_flag("--force", part.force, "Run below the degree threshold");
  part_cmd->add_flag("--shuffle", part.shuffle, "Shuffle the matching order");
  part_cmd->add_option("--stats", part.stats, "Per-attempt CSV output");

  ReduceArgs red;
  auto* red_cmd = app.add_subcommand("reduce", "Build a reduction gadget digraph");
  red_cmd->add_option("kind", red.kind)->required()->check(CLI::IsMember({"nae2bt", "nae2nice", "hyp2sym", "tds"}));
  red_cmd->add_option("file", red.file, "Input file, - for stdin")->required();
  red_cmd->add_option("--map", red.map, "JSON index-map sidecar");

  OracleArgs orc;
  auto* orc_cmd = app.add_subcommand("oracle", "Exhaustive search");
  orc_cmd->add_option("file", orc.file, "Digraph file, - for stdin")->required();
  orc_cmd->add_option("--colours", orc.colours)->check(CLI::Range(1, 8));
  orc_cmd->add_flag("--balanced", orc.balanced);
  orc_cmd->add_option("--partition-k", orc.partition_k)->check(CLI::NonNegativeNumber);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Enumerate a class and collect canonical classes");
  scan_cmd->add_option("class", scan.cls)->required()->check(CLI::IsMember({"tournaments", "semicomplete"}));
  scan_cmd->add_option("--n", scan.n)->required()->check(CLI::Range(1, 7));
  scan_cmd->add_option("--predicate", scan.predicate, "all | delta2 | no-colouring | unbalanceable | strong | exceptions");
  scan_cmd->add_option("--out", scan.out_dir, "Catalog directory");

  SpectrumArgs spec;
  auto* spec_cmd = app.add_subcommand("spectrum", "Paley tournament spectrum check");
  spec_cmd->add_option("q", spec.q)->required();
  spec_cmd->add_flag("--discrepancy", spec.discrepancy, "Exhaustive discrepancy (q <= 23)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*gen_cmd) return run_gen(globals, gen);
    if (*solve_cmd) return run_solve(globals, solve);
    if (*part_cmd) return run_partition(globals, part);
    if (*red_cmd) return run_reduce(globals, red);
    if (*orc_cmd) return run_oracle(globals, orc);
    if (*scan_cmd) return run_scan(globals, scan);
    if (*spec_cmd) return run_spectrum(globals, spec);
  } catch (const std::exception& e) {
    std::cerr << "outcol: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
