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

// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is 0 when the set of failing criteria equals --expect-fail
// (default: none), so a known failure stays visible in the output while an
// unexpected pass or failure breaks the run.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "outcol/catalog.hpp"
#include "outcol/isomorphism.hpp"
#include "outcol/kpartition.hpp"
#include "outcol/oracle.hpp"
#include "outcol/outcolour.hpp"
#include "outcol/reductions.hpp"
#include "outcol/structure.hpp"
#include "support.hpp"

using namespace outcol;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

int g_threads = 1;

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

// ---------------------------------------------------------------------------

Result tournament_characterization() {
  struct Tally {
    std::uint64_t instances = 0, decision = 0, characterization = 0, certificates = 0, uncoloured = 0, gaps = 0, oracle = 0;
  };
  std::vector<std::string> per_n;
  Tally all;
  for (int n = 3; n <= 7; ++n) {
    const Tally t = oracle::parallel_scan(
        n, oracle::GraphClass::Tournament, g_threads, Tally{},
        [](Tally& acc, const oracle::SmallDigraph& g, std::uint64_t) {
          if (g.min_out_degree() < 2) return;
          ++acc.instances;
          const bool colourable = oracle::mask_two_out_colourable(g.out.data(), g.n);
          const Digraph d = g.to_digraph();
          const SolveOutcome o = solve_semicomplete(d);
          if (o.colourable() != colourable) ++acc.decision;
          if (o.colouring && verify_out_colouring(d, *o.colouring)) ++acc.decision;
          if (o.certificate && !validate_certificate(d, *o.certificate)) ++acc.certificates;
          const auto name = terminal_exception_name(d.induced(terminal_component(d)));
          const bool named = name && (*name == "rt5" || *name == "t7" || *name == "p7");
          if (!o.colourable() != (named || recognize_G1_tournament(d).has_value())) ++acc.characterization;
          acc.uncoloured += o.colourable() ? 0 : 1;
          acc.gaps += static_cast<std::uint64_t>(o.diagnostics.proof_gaps);
          acc.oracle += static_cast<std::uint64_t>(o.diagnostics.oracle_fallbacks);
        },
        [](Tally& a, Tally&& b) {
          a.instances += b.instances;
          a.decision += b.decision;
          a.characterization += b.characterization;
          a.certificates += b.certificates;
          a.uncoloured += b.uncoloured;
          a.gaps += b.gaps;
          a.oracle += b.oracle;
        });
    per_n.push_back("n=" + std::to_string(n) + ": " + std::to_string(t.instances) + " with delta>=2, " +
                    std::to_string(t.uncoloured) + " uncolourable");
    all.instances += t.instances;
    all.decision += t.decision;
    all.characterization += t.characterization;
    all.certificates += t.certificates;
    all.gaps += t.gaps;
    all.oracle += t.oracle;
  }
  const bool ok = all.decision == 0 && all.characterization == 0 && all.certificates == 0;
  return {ok, join(per_n) + "; decision mismatches " + std::to_string(all.decision) + ", characterization mismatches " +
                  std::to_string(all.characterization) + ", invalid certificates " + std::to_string(all.certificates) +
                  "; proof gaps " + std::to_string(all.gaps) + ", oracle fallbacks " + std::to_string(all.oracle)};
}

Result semicomplete_exceptions() {
  const ExceptionCatalog cat = derive_exceptions_delta2(5, g_threads);
  std::map<int, int> by_order;
  bool cd3 = false, rt5 = false;
  for (const auto& c : cat.classes) {
    const Digraph d = digraph_from_form(c.form);
    ++by_order[d.order()];
    cd3 = cd3 || is_isomorphic(d, complete_digraph(3));
    rt5 = rt5 || is_isomorphic(d, rotational_tournament5());
  }
  const bool ok = by_order[3] == 1 && cd3 && by_order[4] == 0 && by_order[5] == 5 && rt5;
  return {ok, "classes n=3: " + std::to_string(by_order[3]) + (cd3 ? " (CD3)" : "") + ", n=4: " +
                  std::to_string(by_order[4]) + ", n=5: " + std::to_string(by_order[5]) + (rt5 ? " (incl. RT5)" : "") +
                  "; expected 1, 0, 5"};
}

Result balanced_colourings() {
  const ExceptionCatalog cat = derive_unbalanceable6(g_threads);
  int bad_members = 0;
  for (const auto& c : cat.classes) {
    const Digraph d = digraph_from_form(c.form);
    const bool any = oracle::brute_force_out_colouring(d, 2, false).has_value();
    const bool balanced = oracle::brute_force_out_colouring(d, 2, true).has_value();
    if (!any || balanced) ++bad_members;
  }
  struct Tally {
    std::uint64_t colourable = 0, failures = 0, unbalanceable_small = 0, certified = 0, generic = 0;
  };
  Tally all;
  for (int n = 3; n <= 6; ++n) {
    const Tally t = oracle::parallel_scan(
        n, oracle::GraphClass::Semicomplete, g_threads, Tally{},
        [&cat, n](Tally& acc, const oracle::SmallDigraph& g, std::uint64_t) {
          if (g.min_out_degree() < 2) return;
          const unsigned m = oracle::mask_colourability(g.out.data(), g.n);
          if ((m & 1U) == 0) return;
          ++acc.colourable;
          if (m == 1U && n <= 5) ++acc.unbalanceable_small;
          const Digraph d = g.to_digraph();
          const SolveOutcome o = solve_semicomplete(d);
          if (!o.colouring) {
            ++acc.failures;
            return;
          }
          const RebalanceOutcome r = rebalance(d, *o.colouring);
          acc.generic += static_cast<std::uint64_t>(r.stats.generic_steps);
          if (r.certificate) {
            ++acc.certified;
            if (m != 1U || !cat.find(d) || !validate_certificate(d, *r.certificate)) ++acc.failures;
          } else if (!r.colouring || !r.colouring->balanced() || verify_out_colouring(d, *r.colouring)) {
            ++acc.failures;
          }
        },
        [](Tally& a, Tally&& b) {
          a.colourable += b.colourable;
          a.failures += b.failures;
          a.unbalanceable_small += b.unbalanceable_small;
          a.certified += b.certified;
          a.generic += b.generic;
        });
    all.colourable += t.colourable;
    all.failures += t.failures;
    all.unbalanceable_small += t.unbalanceable_small;
    all.certified += t.certified;
    all.generic += t.generic;
  }
  const bool ok = !cat.classes.empty() && bad_members == 0 && all.failures == 0 && all.unbalanceable_small == 0;
  return {ok, "catalog " + std::to_string(cat.classes.size()) + " classes (" + std::to_string(bad_members) +
                  " unverified); " + std::to_string(all.colourable) + " colourable instances n<=6, " +
                  std::to_string(all.certified) + " certified unbalanceable, " + std::to_string(all.failures) +
                  " failures, " + std::to_string(all.unbalanceable_small) + " unbalanceable at n<=5, " +
                  std::to_string(all.generic) + " generic rebalance steps"};
}

Result paley_identity() {
  std::vector<std::string> bad;
  for (int q : {7, 11, 19, 23, 31, 43}) {
    const Digraph p = paley(q);
    bool identity = true;
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) {
        int common = 0;
        for (int x = 0; x < q; ++x) common += p.has_arc(x, i) && p.has_arc(x, j) ? 1 : 0;
        if (4 * common != (q + 1) * (i == j ? 1 : 0) + (q - 3)) identity = false;
      }
    const PaleySpectrum s = paley_spectrum(q);
    const std::vector<std::pair<std::int64_t, int>> want = {{static_cast<std::int64_t>(q - 1) * (q - 1) / 4, 1},
                                                            {(q + 1) / 4, q - 1}};
    auto got = s.eigenvalues;
    std::sort(got.begin(), got.end(), std::greater<>());
    if (!identity || !s.identity_holds || got != want) bad.push_back(std::to_string(q));
  }
  return {bad.empty(), bad.empty() ? "identity and eigenvalues exact for q in {7,11,19,23,31,43}" : "failed q: " + join(bad)};
}

Result paley_discrepancy() {
  std::vector<std::string> parts;
  bool ok = true;
  for (int q : {7, 11, 19}) {
    const Digraph p = paley(q);
    const Discrepancy disc = discrepancy_exhaustive(p);
    int achieved = 0;
    for (int v = 0; v < q; ++v) {
      int sum = 0;
      for (int w : p.out(v)) sum += disc.sign[static_cast<std::size_t>(w)];
      achieved = std::max(achieved, std::abs(sum));
    }
    const bool pass = achieved == disc.value && disc.value > std::sqrt(static_cast<double>(q)) / 2 && (q == 19 || disc.value >= 3);
    ok = ok && pass;
    parts.push_back("q=" + std::to_string(q) + ": " + std::to_string(disc.value));
  }
  return {ok, join(parts)};
}

Result two_case_strategy() {
  std::mt19937_64 rng(20260601);
  int failures = 0, max_attempts = 0;
  std::uint64_t draws = 0;
  for (int run = 0; run < 1000; ++run) {
    const int n = 9 + static_cast<int>(rng() % 7);
    Digraph t;
    do {
      t = testing::random_tournament(n, rng);
      ++draws;
    } while (t.min_out_degree() < 4);
    PartitionConfig cfg;
    cfg.k = 1;
    cfg.seed = static_cast<std::uint64_t>(run);
    cfg.max_retries = 50;
    const PartitionResult r = partition_k(t, cfg);
    max_attempts = std::max(max_attempts, static_cast<int>(r.attempts.size()));
    if (!r.partition || !r.partition->balanced() || verify_kpartition(t, *r.partition, 1)) ++failures;
  }
  return {failures == 0, "1000 tournaments n in [9,15], " + std::to_string(failures) + " failures, max attempts " +
                             std::to_string(max_attempts) + ", " + std::to_string(draws) + " draws"};
}

// Random relabelling of the rotational tournament on n vertices, with a
// fraction of its arcs reversed.
Digraph near_regular_tournament(int n, double flip, std::mt19937_64& rng) {
  const auto p = testing::random_permutation(n, rng);
  std::bernoulli_distribution coin(flip);
  Digraph t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= n / 2; ++j) {
      int u = p[static_cast<std::size_t>(i)], v = p[static_cast<std::size_t>((i + j) % n)];
      if (coin(rng)) std::swap(u, v);
      t.add_arc(u, v);
    }
  return t;
}

int max_k(int delta, const std::function<double(int)>& need) {
  int k = 1;
  while (need(k + 1) <= delta) ++k;
  return k;
}

Result large_tournaments() {
  std::mt19937_64 rng(20260602);
  std::vector<int> attempts;
  int failures = 0, k_lo = 1 << 30, k_hi = 0, d_lo = 1 << 30, d_hi = 0;
  std::vector<Digraph> corpus;
  for (int run = 0; run < 100; ++run) {
    const Digraph t = near_regular_tournament(401, 0.02, rng);
    const int k = max_k(t.min_out_degree(), [](int k) {
      return 2.0 * k + 1.1 * std::sqrt(2.0 * k * std::log(static_cast<double>(k)));
    });
    d_lo = std::min(d_lo, t.min_out_degree());
    d_hi = std::max(d_hi, t.min_out_degree());
    k_lo = std::min(k_lo, k);
    k_hi = std::max(k_hi, k);
    PartitionConfig cfg;
    cfg.k = k;
    cfg.seed = static_cast<std::uint64_t>(run);
    cfg.max_retries = 50;
    const PartitionResult r = partition_k(t, cfg);
    attempts.push_back(static_cast<int>(r.attempts.size()));
    if (!r.partition || !r.partition->balanced() || verify_kpartition(t, *r.partition, k)) ++failures;
    if (run < 20) corpus.push_back(t);
  }
  std::sort(attempts.begin(), attempts.end());
  const double median = (attempts[49] + attempts[50]) / 2.0;
  const bool ok = failures == 0 && median <= 3 && attempts.back() <= 50;
  std::ostringstream out;
  out << "min out-degree in [" << d_lo << "," << d_hi << "], k in [" << k_lo << "," << k_hi << "], failures " << failures << ", median attempts " << median
      << ", max attempts " << attempts.back();

  // Supplementary: forced runs below the gate, threshold 2k + c sqrt(k).
  for (int c : {2, 4, 8}) {
    int ok_runs = 0, total_attempts = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Digraph& t = corpus[i];
      const int k = max_k(t.min_out_degree(), [c](int k) { return 2.0 * k + c * std::sqrt(static_cast<double>(k)); });
      PartitionConfig cfg;
      cfg.k = k;
      cfg.seed = 1000 + i;
      cfg.max_retries = 50;
      cfg.force = true;
      const PartitionResult r = partition_k(t, cfg);
      ok_runs += r.partition ? 1 : 0;
      total_attempts += static_cast<int>(r.attempts.size());
    }
    out << "; c=" << c << ": " << ok_runs << "/" << corpus.size() << " succeeded, " << total_attempts << " attempts";
  }
  return {ok, out.str()};
}

Result reduction_round_trips() {
  std::mt19937_64 rng(20260603);
  int mismatches = 0, sat = 0;
  for (int done = 0; done < 50;) {
    NaeFormula f;
    f.n_vars = 6 + static_cast<int>(rng() % 3);
    const int m = 2 + static_cast<int>(rng() % 5);
    for (int j = 0; j < m; ++j) {
      const auto p = testing::random_permutation(f.n_vars, rng);
      f.clauses.push_back({Literal{p[0], false}, Literal{p[1], false}, Literal{p[2], false}});
    }
    if (!first_disjoint_clause_pair(f)) continue;
    ++done;
    const auto r = nae_to_bipartite_tournament(f);
    const auto a = oracle::nae_brute_force(f);
    const auto c = oracle::brute_force_out_colouring(r.digraph, 2, false);
    if (a.has_value() != c.has_value()) ++mismatches;
    if (a && verify_out_colouring(r.digraph, colouring_from_assignment(r, *a))) ++mismatches;
    if (c && !f.satisfied_by(assignment_from_colouring(r, *c))) ++mismatches;
    sat += a ? 1 : 0;
  }
  int nice_sat = 0;
  for (int done = 0; done < 20; ++done) {
    NaeFormula f;
    f.n_vars = 3 + static_cast<int>(rng() % 2);
    const int m = 1 + static_cast<int>(rng() % 5);
    for (int j = 0; j < m; ++j) {
      const auto p = testing::random_permutation(f.n_vars, rng);
      Clause cl;
      for (std::size_t i = 0; i < 3; ++i) cl[i] = Literal{p[i], (rng() & 1U) != 0};
      f.clauses.push_back(cl);
    }
    const auto r = nae_to_nice_partition_digraph(f);
    const auto a = oracle::nae_brute_force(f);
    const auto p = oracle::brute_force_nice_partition(r.digraph);
    if (a.has_value() != p.has_value()) ++mismatches;
    if (a && !is_nice_partition(r.digraph, nice_partition_from_assignment(r, *a))) ++mismatches;
    if (p && !f.satisfied_by(assignment_from_nice_partition(r, *p))) ++mismatches;
    nice_sat += a ? 1 : 0;
  }
  const auto gadget = oracle::all_nice_partitions(gadget_x());
  int with_v = 0;
  for (const auto& v1 : gadget) with_v += v1.contains(kGadgetV) && v1.contains(kGadgetVp) ? 1 : 0;
  const bool gadget_ok = !gadget.empty() && with_v == static_cast<int>(gadget.size());
  return {mismatches == 0 && gadget_ok,
          "B(F): 50 instances, " + std::to_string(sat) + " satisfiable; R(F): 20 instances, " + std::to_string(nice_sat) +
              " satisfiable; mismatches " + std::to_string(mismatches) + "; gadget X: " + std::to_string(gadget.size()) +
              " nice partitions, " + std::to_string(with_v) + " with v,v' in V1"};
}

// G_D joins the two out-neighbours of every vertex.
bool auxiliary_graph_bipartite(const Digraph& d) {
  const int n = d.order();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto o = d.out(v).to_vector();
    adj[static_cast<std::size_t>(o[0])].push_back(o[1]);
    adj[static_cast<std::size_t>(o[1])].push_back(o[0]);
  }
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (side[static_cast<std::size_t>(w)] < 0) {
          side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

Result two_out_regular() {
  std::mt19937_64 rng(20260604);
  int mismatches = 0, colourable = 0;
  for (int run = 0; run < 1000; ++run) {
    const Digraph d = testing::random_two_out_regular(3 + static_cast<int>(rng() % 8), rng);
    const TwoOutRegularOutcome o = solve_2outregular(d);
    const bool oracle_says = oracle::brute_force_out_colouring(d, 2, false).has_value();
    const bool bipartite = auxiliary_graph_bipartite(d);
    if (o.colouring.has_value() != oracle_says || oracle_says != bipartite) ++mismatches;
    if (o.colouring && verify_out_colouring(d, *o.colouring)) ++mismatches;
    if (!o.colouring && o.odd_cycle.size() % 2 == 0) ++mismatches;
    colourable += oracle_says ? 1 : 0;
  }
  return {mismatches == 0, "1000 digraphs n in [3,10], " + std::to_string(colourable) + " colourable, mismatches " +
                               std::to_string(mismatches)};
}

Result three_colouring() {
  std::uint64_t instances = 0, failures = 0;
  for (int n = 3; n <= 5; ++n) {
    oracle::EnumerationSpec spec{n, oracle::GraphClass::Semicomplete,
                                 [](const oracle::SmallDigraph& g) { return g.min_out_degree() >= 2; }, false};
    oracle::enumerate(spec, [&](const oracle::SmallDigraph& g) {
      const Digraph d = g.to_digraph();
      ++instances;
      try {
        if (verify_out_colouring(d, three_out_colouring(d))) ++failures;
      } catch (const Error&) {
        ++failures;
      }
    });
  }
  return {failures == 0, std::to_string(instances) + " semicomplete digraphs n<=5, " + std::to_string(failures) + " failures"};
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return b;
}

// Strong after deleting any set of fewer than k vertices.
bool k_strong(const Digraph& d, int k) {
  const int n = d.order();
  if (n <= k) return false;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) >= k) continue;
    if (!is_strong(d.induced(VertexSet::from_mask(n, m).complement()))) return false;
  }
  return true;
}

Result bipartite_family() {
  const Digraph b12 = bkr(1, 2);
  const Digraph b22 = bkr(2, 2);
  const bool none12 = !oracle::brute_force_out_colouring(b12, 2, false);
  const bool none22 = !oracle::brute_force_out_colouring(b22, 2, false);
  const int v_side = b22.order() - 4;
  const bool strong2 = k_strong(b22, 2);
  const bool ok = none12 && none22 && static_cast<std::uint64_t>(v_side) == binomial(4, 2) && strong2;
  return {ok, std::string("B(1,2) ") + (none12 ? "uncolourable" : "colourable") + ", B(2,2) " +
                  (none22 ? "uncolourable" : "colourable") + ", |V| = " + std::to_string(v_side) + " (C(4,2) = 6), " +
                  (strong2 ? "2-strong" : "not 2-strong")};
}

struct Criterion {
  int id;
  const char* title;
  Result (*run)();
};

const std::vector<Criterion> kCriteria = {
    {1, "tournament characterization, n<=7", tournament_characterization},
    {2, "semicomplete delta=2 exceptions", semicomplete_exceptions},
    {3, "balanced colourings, n<=6", balanced_colourings},
    {4, "Paley A^T A identity", paley_identity},
    {5, "Paley discrepancy", paley_discrepancy},
    {6, "two-case k=1 partitions", two_case_strategy},
    {7, "k-partitions of near-regular 401-tournaments", large_tournaments},
    {8, "reduction round trips", reduction_round_trips},
    {9, "2-out-regular digraphs", two_out_regular},
    {10, "3-out-colourings, n<=5", three_colouring},
    {11, "bipartite tournaments B(k,r)", bipartite_family},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"outcol acceptance suite"};
  std::vector<int> only;
  std::vector<int> expect_fail;
  g_threads = oracle::default_threads();
  app.add_option("--only", only, "Run only these criteria");
  app.add_option("--expect-fail", expect_fail, "Criteria known to fail");
  app.add_option("--threads", g_threads, "Worker threads for exhaustive scans")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::set<int> failed;
  for (const auto& c : kCriteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!r.pass) failed.insert(c.id);
    std::printf("criterion %2d: %s  %s: %s [%.1f s]\n", c.id, r.pass ? "PASS" : "FAIL", c.title, r.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::set<int> expected;
  for (int id : expect_fail)
    if (only.empty() || std::find(only.begin(), only.end(), id) != only.end()) expected.insert(id);
  std::printf("acceptance: %zu failed", failed.size());
  for (int id : failed) std::printf(" %d", id);
  std::printf("; expected failures:");
  for (int id : expected) std::printf(" %d", id);
  std::printf("\n");
  return failed == expected ? 0 : 1;
}
