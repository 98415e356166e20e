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

// Generators and deliberately naive checkers shared by the test binaries.
// The checkers only use the Digraph accessors so they stay independent of
// the library's search kernels.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "outcol/digraph.hpp"

namespace outcol::testing {

inline Digraph random_tournament(int n, std::mt19937_64& rng) {
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng() & 1U)
        d.add_arc(i, j);
      else
        d.add_arc(j, i);
    }
  return d;
}

/// Each pair becomes i->j, j->i or a 2-cycle; `two_cycle_weight` out of 8.
inline Digraph random_semicomplete(int n, std::mt19937_64& rng, unsigned two_cycle_weight = 3) {
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const unsigned r = static_cast<unsigned>(rng() % 8);
      if (r < two_cycle_weight) {
        d.add_arc(i, j);
        d.add_arc(j, i);
      } else if ((r - two_cycle_weight) % 2 == 0) {
        d.add_arc(i, j);
      } else {
        d.add_arc(j, i);
      }
    }
  return d;
}

/// Every vertex gets two distinct random out-neighbours.
inline Digraph random_two_out_regular(int n, std::mt19937_64& rng) {
  Digraph d(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> others;
    for (int u = 0; u < n; ++u)
      if (u != v) others.push_back(u);
    std::shuffle(others.begin(), others.end(), rng);
    d.add_arc(v, others[0]);
    d.add_arc(v, others[1]);
  }
  return d;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline bool naive_good(const Digraph& d, const std::vector<int>& colour, int v) {
  int first = 0;
  for (int u = 0; u < d.order(); ++u) {
    if (!d.has_arc(v, u)) continue;
    const int c = colour[static_cast<std::size_t>(u)];
    if (first == 0)
      first = c;
    else if (c != first)
      return true;
  }
  return false;
}

inline bool naive_is_out_colouring(const Digraph& d, const std::vector<int>& colour) {
  for (int v = 0; v < d.order(); ++v)
    if (!naive_good(d, colour, v)) return false;
  return true;
}

/// Bit 0: some 2-out-colouring; bit 1: a balanced one. Full 2^n scan.
inline unsigned naive_two_colourability(const Digraph& d) {
  const int n = d.order();
  unsigned found = 0;
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    int ones = 0;
    for (int v = 0; v < n; ++v) {
      colour[static_cast<std::size_t>(v)] = ((m >> v) & 1U) ? 1 : 2;
      ones += ((m >> v) & 1U) ? 1 : 0;
    }
    if (!naive_is_out_colouring(d, colour)) continue;
    found |= 1U;
    if (std::abs(2 * ones - n) <= 1) found |= 2U;
    if (found == 3U) break;
  }
  return found;
}

inline bool naive_k_colourable(const Digraph& d, int k) {
  const int n = d.order();
  std::vector<int> colour(static_cast<std::size_t>(n), 1);
  while (true) {
    if (naive_is_out_colouring(d, colour)) return true;
    int i = 0;
    while (i < n && colour[static_cast<std::size_t>(i)] == k) colour[static_cast<std::size_t>(i++)] = 1;
    if (i == n) return false;
    ++colour[static_cast<std::size_t>(i)];
  }
}

}  // namespace outcol::testing
