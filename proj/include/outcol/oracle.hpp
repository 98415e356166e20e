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

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "outcol/digraph.hpp"
#include "outcol/formula.hpp"

/// Exhaustive ground truth for every constructive solver.
namespace outcol::oracle {

/// First valid colouring in lexicographic order with vertex 0 coloured 1.
/// Throws SearchSpaceTooLarge when colours^n exceeds 2^32.
std::optional<Colouring> brute_force_out_colouring(const Digraph& d, int colours, bool balanced);

/// First partition (vertex 0 in part1, both parts non-empty) in which every
/// vertex has at least k out-neighbours in each part.
std::optional<TwoPartition> brute_force_partition_k(const Digraph& d, int k, bool balanced);

std::optional<std::vector<bool>> nae_brute_force(const NaeFormula& f);
std::optional<std::vector<int>> hypergraph_2colourable(const Hypergraph& h);

/// First V1 of a nice 2-partition (D(V1,V2) and D[V1] have minimum out-degree
/// at least one), trying V1 before V2 vertex by vertex. Backtracking, n <= 64.
std::optional<VertexSet> brute_force_nice_partition(const Digraph& d);
/// Every V1 of a nice 2-partition in the same search order; n <= 24.
std::vector<VertexSet> all_nice_partitions(const Digraph& d);

/// Mask kernels for n <= 64. out[v] is the out-neighbourhood of v.
bool mask_two_out_colourable(const std::uint64_t* out, int n);
/// Bit 0 of the result: some 2-out-colouring exists; bit 1: a balanced one exists.
unsigned mask_colourability(const std::uint64_t* out, int n);

// ---------------------------------------------------------------------------
// Labelled enumeration

enum class GraphClass { Tournament, Semicomplete };

const char* class_name(GraphClass cls) noexcept;

inline constexpr int kMaxSmallOrder = 8;

/// Fixed-capacity digraph used by the enumeration kernels.
struct SmallDigraph {
  int n = 0;
  std::array<std::uint64_t, kMaxSmallOrder> out{};

  Digraph to_digraph() const;
  static SmallDigraph from(const Digraph& d);
  int min_out_degree() const noexcept;
};

/// 2^C(n,2) for tournaments, 3^C(n,2) for semicomplete digraphs.
std::uint64_t class_size(int n, GraphClass cls);
/// Guards of the documented cost model: n <= 7 for tournaments, n <= 6 for semicomplete.
void check_enumeration_guard(int n, GraphClass cls);

/**
 * Visits the labelled digraphs with odometer indices in [begin, end).
 *
 * Unordered pairs are ordered (0,1), (0,2), ..., (n-2,n-1) and the last pair
 * varies fastest. Pair states: 0 = i->j, 1 = j->i, 2 = both (semicomplete only).
 */
template <class Fn>
void for_each_in_range(int n, GraphClass cls, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  const int pairs = n * (n - 1) / 2;
  const unsigned base = cls == GraphClass::Tournament ? 2U : 3U;
  std::array<int, 32> pi{};
  std::array<int, 32> pj{};
  std::array<unsigned, 32> state{};
  {
    int p = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++p) {
        pi[static_cast<std::size_t>(p)] = i;
        pj[static_cast<std::size_t>(p)] = j;
      }
  }
  SmallDigraph g;
  g.n = n;
  auto apply = [&](int p, unsigned s, bool on) {
    const auto i = static_cast<std::size_t>(pi[static_cast<std::size_t>(p)]);
    const auto j = static_cast<std::size_t>(pj[static_cast<std::size_t>(p)]);
    const std::uint64_t bi = std::uint64_t{1} << i;
    const std::uint64_t bj = std::uint64_t{1} << j;
    if (on) {
      if (s != 1) g.out[i] |= bj;
      if (s != 0) g.out[j] |= bi;
    } else {
      if (s != 1) g.out[i] &= ~bj;
      if (s != 0) g.out[j] &= ~bi;
    }
  };
  std::uint64_t rem = begin;
  for (int p = pairs - 1; p >= 0; --p) {
    state[static_cast<std::size_t>(p)] = static_cast<unsigned>(rem % base);
    rem /= base;
  }
  for (int p = 0; p < pairs; ++p) apply(p, state[static_cast<std::size_t>(p)], true);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    fn(static_cast<const SmallDigraph&>(g), idx);
    for (int p = pairs - 1; p >= 0; --p) {
      auto& s = state[static_cast<std::size_t>(p)];
      apply(p, s, false);
      if (++s < base) {
        apply(p, s, true);
        break;
      }
      s = 0;
      apply(p, s, true);
    }
  }
}

/**
 * Splits the odometer range into `threads` contiguous slices, each folded
 * into its own copy of `init`; slice results are merged in slice order, so
 * the outcome does not depend on scheduling.
 */
template <class Acc, class Visit, class Merge>
Acc parallel_scan(int n, GraphClass cls, int threads, const Acc& init, Visit visit, Merge merge) {
  const std::uint64_t total = class_size(n, cls);
  if (threads < 1) threads = 1;
  const auto slices = static_cast<std::uint64_t>(threads);
  std::vector<Acc> partial(slices, init);
  auto run = [&](std::uint64_t s) {
    const std::uint64_t lo = total * s / slices;
    const std::uint64_t hi = total * (s + 1) / slices;
    Acc& acc = partial[s];
    for_each_in_range(n, cls, lo, hi, [&](const SmallDigraph& g, std::uint64_t idx) { visit(acc, g, idx); });
  };
  if (slices == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t s = 0; s < slices; ++s) pool.emplace_back(run, s);
    for (auto& t : pool) t.join();
  }
  Acc result = std::move(partial[0]);
  for (std::uint64_t s = 1; s < slices; ++s) merge(result, std::move(partial[s]));
  return result;
}

struct EnumerationSpec {
  int n = 0;
  GraphClass cls = GraphClass::Tournament;
  /// Accept-all when empty. Must be safe to call concurrently.
  std::function<bool(const SmallDigraph&)> predicate;
  bool dedup_canonical = false;
};

struct EnumerationStats {
  std::uint64_t labelled = 0;
  std::uint64_t accepted = 0;
  /// Sorted canonical forms of the accepted digraphs (dedup only).
  std::vector<std::string> classes;
};

/// Enumerates the class; `visitor` (optional) sees accepted digraphs and is
/// called from worker threads when threads > 1.
EnumerationStats enumerate(const EnumerationSpec& spec,
                           const std::function<void(const SmallDigraph&)>& visitor = {}, int threads = 1);

/// Thread count from OUTCOL_THREADS, or 1.
int default_threads();

}  // namespace outcol::oracle
