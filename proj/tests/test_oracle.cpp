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

#include <doctest.h>

#include <atomic>
#include <random>
#include <set>

#include "outcol/catalog.hpp"
#include "outcol/error.hpp"
#include "outcol/isomorphism.hpp"
#include "outcol/oracle.hpp"
#include "outcol/structure.hpp"
#include "support.hpp"

using namespace outcol;

namespace {

template <class Fn>
Errc error_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an outcol::Error");
  return Errc::Parse;
}

bool vector_balanced(const std::vector<int>& c, int k) {
  std::vector<int> size(static_cast<std::size_t>(k) + 1, 0);
  for (int x : c) ++size[static_cast<std::size_t>(x)];
  int lo = size[1], hi = size[1];
  for (int i = 1; i <= k; ++i) {
    lo = std::min(lo, size[static_cast<std::size_t>(i)]);
    hi = std::max(hi, size[static_cast<std::size_t>(i)]);
  }
  return hi - lo <= 1;
}

std::optional<std::vector<int>> naive_first(const Digraph& d, int k, bool balanced) {
  const int n = d.order();
  std::vector<int> c(static_cast<std::size_t>(n), 1);
  while (true) {
    if ((!balanced || vector_balanced(c, k)) && testing::naive_is_out_colouring(d, c)) return c;
    int i = n - 1;
    while (i >= 1 && c[static_cast<std::size_t>(i)] == k) c[static_cast<std::size_t>(i--)] = 1;
    if (i < 1) return std::nullopt;
    ++c[static_cast<std::size_t>(i)];
  }
}

bool naive_partition_k(const Digraph& d, int k, bool balanced) {
  const int n = d.order();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n) - 1; ++m) {
    if (balanced && std::abs(2 * std::popcount(m) - n) > 1) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      int in1 = 0, in2 = 0;
      for (int w : d.out(v)) (((m >> w) & 1U) ? in1 : in2)++;
      ok = in1 >= k && in2 >= k;
    }
    if (ok) return true;
  }
  return false;
}

// D[V1] and D(V1, V2) both have minimum out-degree at least one.
bool naive_nice(const Digraph& d, std::uint64_t m) {
  for (int v = 0; v < d.order(); ++v) {
    const bool in1 = ((m >> v) & 1U) != 0;
    bool inside = false, across = false;
    for (int w : d.out(v)) {
      const bool w1 = ((m >> w) & 1U) != 0;
      if (in1 && w1) inside = true;
      if (in1 != w1) across = true;
    }
    if (!across || (in1 && !inside)) return false;
  }
  return true;
}

Digraph random_digraph(std::mt19937_64& rng, int n) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng() % 2 == 0) d.add_arc(u, v);
  return d;
}

}  // namespace

TEST_CASE("brute-force out-colouring examples") {
  const Digraph rt5 = rotational_tournament5();
  CHECK(!oracle::brute_force_out_colouring(rt5, 2, false));
  const auto three = oracle::brute_force_out_colouring(rt5, 3, false);
  REQUIRE(three.has_value());
  CHECK(!verify_out_colouring(rt5, *three));

  Digraph p = paley7();
  p.add_arc(1, 0);
  const auto b = oracle::brute_force_out_colouring(p, 2, true);
  REQUIRE(b.has_value());
  CHECK(b->balanced());
  CHECK(!verify_out_colouring(p, *b));

  CHECK(!oracle::brute_force_out_colouring(Digraph(0), 2, false));
  CHECK(error_code([] { oracle::brute_force_out_colouring(Digraph(33), 2, false); }) == Errc::SearchSpaceTooLarge);
  CHECK(error_code([] { oracle::brute_force_out_colouring(Digraph(21), 3, false); }) == Errc::SearchSpaceTooLarge);
  CHECK(error_code([] { oracle::brute_force_out_colouring(Digraph(3), 0, false); }) == Errc::InvalidArgument);
}

TEST_CASE("brute-force out-colouring agrees with a naive lexicographic scan") {
  std::mt19937_64 rng(101);
  for (int it = 0; it < 600; ++it) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int k = 2 + static_cast<int>(rng() % 2);
    const bool balanced = rng() % 2 == 0;
    const Digraph d = random_digraph(rng, n);
    const auto got = oracle::brute_force_out_colouring(d, k, balanced);
    const auto want = naive_first(d, k, balanced);
    REQUIRE(got.has_value() == want.has_value());
    if (got) REQUIRE(got->colour == *want);
  }
}

TEST_CASE("balanced colourings are colourings") {
  std::mt19937_64 rng(103);
  for (int it = 0; it < 500; ++it) {
    const Digraph d = testing::random_semicomplete(5 + static_cast<int>(rng() % 6), rng);
    const bool any = oracle::brute_force_out_colouring(d, 2, false).has_value();
    const bool bal = oracle::brute_force_out_colouring(d, 2, true).has_value();
    REQUIRE((!bal || any));
    const unsigned naive = testing::naive_two_colourability(d);
    REQUIRE(any == ((naive & 1U) != 0));
    REQUIRE(bal == ((naive & 2U) != 0));
  }
}

TEST_CASE("brute-force k-partition") {
  CHECK(!oracle::brute_force_partition_k(paley7(), 1, false));
  const auto p = oracle::brute_force_partition_k(paley(11), 1, true);
  REQUIRE(p.has_value());
  CHECK(p->balanced());
  CHECK(!verify_kpartition(paley(11), *p, 1));
  CHECK(oracle::brute_force_partition_k(Digraph(3), 0, false).has_value());
  CHECK(!oracle::brute_force_partition_k(Digraph(1), 0, false));

  std::mt19937_64 rng(107);
  for (int it = 0; it < 400; ++it) {
    const Digraph d = random_digraph(rng, 3 + static_cast<int>(rng() % 7));
    const int k = static_cast<int>(rng() % 3);
    const bool balanced = rng() % 2 == 0;
    const auto got = oracle::brute_force_partition_k(d, k, balanced);
    REQUIRE(got.has_value() == naive_partition_k(d, k, balanced));
    if (got) {
      REQUIRE(!verify_kpartition(d, *got, k));
      REQUIRE(got->part1().contains(0));
      if (balanced) REQUIRE(got->balanced());
    }
  }
}

TEST_CASE("NAE and hypergraph brute force") {
  NaeFormula one;
  one.n_vars = 3;
  one.clauses = {{Literal{0, false}, Literal{1, false}, Literal{2, false}}};
  const auto a = oracle::nae_brute_force(one);
  REQUIRE(a.has_value());
  CHECK(one.satisfied_by(*a));

  NaeFormula bad = one;
  for (int s = 1; s < 4; ++s) bad.clauses.push_back({Literal{0, s == 3}, Literal{1, s == 2}, Literal{2, s == 1}});
  CHECK(!oracle::nae_brute_force(bad));

  Hypergraph h;
  h.n_vertices = 3;
  h.edges = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(!oracle::hypergraph_2colourable(h));
  h.edges = {{0, 1}, {1, 2}};
  const auto c = oracle::hypergraph_2colourable(h);
  REQUIRE(c.has_value());
  CHECK(h.properly_coloured_by(*c));
  h.edges = {{0}};
  CHECK(!oracle::hypergraph_2colourable(h));
}

TEST_CASE("nice partition search agrees with a naive scan") {
  std::mt19937_64 rng(109);
  int found = 0;
  for (int it = 0; it < 400; ++it) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Digraph d = random_digraph(rng, n);
    std::vector<std::uint64_t> naive;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      if (naive_nice(d, m)) naive.push_back(m);
    const auto all = oracle::all_nice_partitions(d);
    REQUIRE(all.size() == naive.size());
    std::set<std::uint64_t> a, b(naive.begin(), naive.end());
    for (const auto& s : all) a.insert(s.mask());
    REQUIRE(a == b);
    const auto first = oracle::brute_force_nice_partition(d);
    REQUIRE(first.has_value() == !naive.empty());
    if (first) REQUIRE(first->mask() == all.front().mask());
    found += naive.empty() ? 0 : 1;
  }
  CHECK(found > 0);
}

TEST_CASE("enumeration counts") {
  CHECK(oracle::class_size(3, oracle::GraphClass::Tournament) == 8);
  CHECK(oracle::class_size(2, oracle::GraphClass::Semicomplete) == 3);
  CHECK(oracle::class_size(4, oracle::GraphClass::Semicomplete) == 729);

  oracle::EnumerationSpec t3{3, oracle::GraphClass::Tournament, {}, true};
  const auto s3 = oracle::enumerate(t3);
  CHECK(s3.labelled == 8);
  CHECK(s3.accepted == 8);
  CHECK(s3.classes.size() == 2);  // transitive and cyclic

  oracle::EnumerationSpec sc2{2, oracle::GraphClass::Semicomplete, {}, true};
  const auto s2 = oracle::enumerate(sc2);
  CHECK(s2.labelled == 3);
  CHECK(s2.classes.size() == 2);

  // Tournaments on 4 and 5 vertices: 4 and 12 classes.
  CHECK(oracle::enumerate({4, oracle::GraphClass::Tournament, {}, true}).classes.size() == 4);
  CHECK(oracle::enumerate({5, oracle::GraphClass::Tournament, {}, true}).classes.size() == 12);

  oracle::EnumerationSpec reg{5, oracle::GraphClass::Tournament,
                              [](const oracle::SmallDigraph& g) { return g.min_out_degree() == 2; }, true};
  const auto r5 = oracle::enumerate(reg);
  CHECK(r5.accepted == 24);
  REQUIRE(r5.classes.size() == 1);
  CHECK(r5.classes.front() == canonical_form(rotational_tournament5()));

  std::atomic<std::uint64_t> seen{0};
  oracle::enumerate(reg, [&](const oracle::SmallDigraph& g) {
    CHECK(g.to_digraph().min_out_degree() == 2);
    ++seen;
  });
  CHECK(seen == 24);
}

TEST_CASE("odometer order") {
  std::vector<std::uint64_t> idx;
  std::vector<Digraph> graphs;
  oracle::for_each_in_range(3, oracle::GraphClass::Semicomplete, 0, 27, [&](const oracle::SmallDigraph& g, std::uint64_t i) {
    idx.push_back(i);
    graphs.push_back(g.to_digraph());
  });
  REQUIRE(idx.size() == 27);
  // Index 0: every pair i -> j. Index 1: last pair (1,2) flipped.
  CHECK(graphs[0] == transitive_tournament(3));
  CHECK(graphs[1].has_arc(2, 1));
  CHECK(!graphs[1].has_arc(1, 2));
  CHECK(graphs[2].has_arc(1, 2));
  CHECK(graphs[2].has_arc(2, 1));
  // Resuming mid-range gives the same digraph.
  oracle::for_each_in_range(3, oracle::GraphClass::Semicomplete, 14, 15,
                            [&](const oracle::SmallDigraph& g, std::uint64_t) { CHECK(g.to_digraph() == graphs[14]); });
  for (const auto& d : graphs) CHECK(oracle::SmallDigraph::from(d).to_digraph() == d);
}

TEST_CASE("enumeration does not depend on the thread count") {
  oracle::EnumerationSpec spec{6, oracle::GraphClass::Tournament,
                               [](const oracle::SmallDigraph& g) {
                                 return !oracle::mask_two_out_colourable(g.out.data(), g.n) || g.min_out_degree() >= 2;
                               },
                               true};
  const auto one = oracle::enumerate(spec, {}, 1);
  for (int threads : {2, 3, 4}) {
    const auto many = oracle::enumerate(spec, {}, threads);
    CHECK(many.labelled == one.labelled);
    CHECK(many.accepted == one.accepted);
    CHECK(many.classes == one.classes);
  }
  const auto sum = oracle::parallel_scan(
      5, oracle::GraphClass::Semicomplete, 3, std::uint64_t{0},
      [](std::uint64_t& acc, const oracle::SmallDigraph& g, std::uint64_t) { acc += static_cast<std::uint64_t>(g.min_out_degree()); },
      [](std::uint64_t& a, std::uint64_t b) { a += b; });
  const auto serial = oracle::parallel_scan(
      5, oracle::GraphClass::Semicomplete, 1, std::uint64_t{0},
      [](std::uint64_t& acc, const oracle::SmallDigraph& g, std::uint64_t) { acc += static_cast<std::uint64_t>(g.min_out_degree()); },
      [](std::uint64_t& a, std::uint64_t b) { a += b; });
  CHECK(sum == serial);
}

TEST_CASE("mask kernels agree with naive checks") {
  std::mt19937_64 rng(113);
  for (int it = 0; it < 1000; ++it) {
    const Digraph d = random_digraph(rng, 1 + static_cast<int>(rng() % 8));
    const auto s = oracle::SmallDigraph::from(d);
    const unsigned naive = testing::naive_two_colourability(d);
    REQUIRE(oracle::mask_two_out_colourable(s.out.data(), s.n) == ((naive & 1U) != 0));
    REQUIRE(oracle::mask_colourability(s.out.data(), s.n) == naive);
  }
}

TEST_CASE("enumeration guards") {
  CHECK_NOTHROW(oracle::check_enumeration_guard(7, oracle::GraphClass::Tournament));
  CHECK_NOTHROW(oracle::check_enumeration_guard(6, oracle::GraphClass::Semicomplete));
  CHECK(error_code([] { oracle::check_enumeration_guard(8, oracle::GraphClass::Tournament); }) == Errc::SearchSpaceTooLarge);
  CHECK(error_code([] { oracle::check_enumeration_guard(7, oracle::GraphClass::Semicomplete); }) == Errc::SearchSpaceTooLarge);
  CHECK(error_code([] { oracle::brute_force_nice_partition(Digraph(65)); }) == Errc::TooLarge);
  CHECK(error_code([] { oracle::all_nice_partitions(Digraph(25)); }) == Errc::TooLarge);
  CHECK(error_code([] { oracle::SmallDigraph::from(Digraph(9)); }) == Errc::TooLarge);
  CHECK(error_code([] {
          NaeFormula f;
          f.n_vars = 26;
          oracle::nae_brute_force(f);
        }) == Errc::TooLarge);
  CHECK(error_code([] {
          Hypergraph h;
          h.n_vertices = 26;
          oracle::hypergraph_2colourable(h);
        }) == Errc::TooLarge);
}
