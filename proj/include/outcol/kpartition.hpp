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

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "outcol/digraph.hpp"

namespace outcol {

/// How partition_k builds its matching.
enum class SplitStrategy {
  /// Two-case matching for k = 1 on tournaments with minimum out-degree 4, plain otherwise.
  Auto,
  Plain,
};

struct PartitionConfig {
  int k = 1;
  double epsilon = 0.1;
  int max_retries = 50;
  std::uint64_t seed = 0;
  /// Vertex pairs that the matching must contain (and hence split).
  std::vector<std::pair<int, int>> required_edges;
  /// Skip the minimum-degree gate.
  bool force = false;
  /// Shuffle the vertex order before consecutive pairing.
  bool shuffle = false;
  SplitStrategy strategy = SplitStrategy::Auto;
};

/// Throws BadParameter unless k >= 0, epsilon >= 0 and max_retries >= 1.
void validate(const PartitionConfig& cfg);

/**
 * Generator for attempt `attempt` of a run seeded with `seed`: a
 * std::mt19937_64 whose seed is splitmix64(seed ^ splitmix64(attempt + 1)).
 * Attempts are reproducible in isolation.
 */
std::mt19937_64 attempt_stream(std::uint64_t seed, std::uint64_t attempt);

/// Uniform integer in [0, bound) from raw generator output (Lemire's method).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Ceiling of 2k + (1 + epsilon) sqrt(2k ln k); 2k for k <= 1.
int degree_threshold(int k, double epsilon);

/// Required edges first, then remaining vertices paired consecutively by id
/// (after a shuffle drawn from stream 0 when cfg.shuffle). Throws RequiredEdgesOverlap.
std::vector<std::pair<int, int>> near_perfect_matching(int n, const PartitionConfig& cfg);

/// One random split of each pair of the matching; an odd leftover vertex
/// picks its side with a fair coin.
TwoPartition matching_split(const Digraph& d, const PartitionConfig& cfg, std::uint64_t attempt = 0);

struct AttemptStat {
  int attempt = 0;
  int failing_vertices = 0;
  /// Largest shortfall below k over all vertices and parts.
  int worst_deficit = 0;
};

struct PartitionResult {
  std::optional<TwoPartition> partition;
  std::vector<AttemptStat> attempts;
  /// Matching used by every attempt.
  std::vector<std::pair<int, int>> matching;

  bool exhausted() const noexcept { return !partition; }
};

/// Las Vegas loop: split, verify, retry. Throws BelowThreshold unless cfg.force.
PartitionResult partition_k(const Digraph& d, const PartitionConfig& cfg);

/// Same loop with k out- and k in-neighbours required in both parts.
PartitionResult partition_k_inout(const Digraph& d, const PartitionConfig& cfg);

/// Matching edges {x,y}, {x1,x2} in N+(x), {y1,y2} in N+(y) for two vertices of
/// out-degree 4, or one edge inside N+(v) for a unique such v.
std::vector<std::pair<int, int>> two_case_required_edges(const Digraph& t);

struct RPartition {
  std::vector<int> part;  // 0..r-1
  int r = 1;
  std::vector<AttemptStat> attempts;
};

/// Throws BelowThreshold (unless cfg.force) when the minimum out-degree is
/// below ceil((1 + epsilon) r k); Exhausted after cfg.max_retries failures.
RPartition partition_r(const Digraph& d, int r, const PartitionConfig& cfg);

/// Vertices with fewer than k out-neighbours in some part.
std::vector<int> r_partition_violations(const Digraph& d, const std::vector<int>& part, int r, int k);

struct ChernoffBound {
  /// Sum over vertices of 2 exp(-(d - 2k)^2 / (2d)).
  double union_bound = 0;
  /// (2 d0 + 1) p(d0) + sum over d >= d0 of 2 p(d + 1), d0 the minimum degree.
  double aggregate_bound = 0;
  /// Values of at least 1 give no guarantee.
  bool guaranteed() const noexcept { return union_bound < 1; }
};

/// Throws DegreeBelow2k.
ChernoffBound chernoff_failure_bound(const std::vector<int>& degrees, int k);

struct PaleySpectrum {
  int q = 0;
  /// (A^T A) == ((q+1)/4) I + ((q-3)/4) J, checked entry by entry.
  bool identity_holds = false;
  std::vector<std::pair<std::int64_t, int>> eigenvalues;  // (value, multiplicity)
};

/// Throws BadParameter unless q is a prime congruent to 3 mod 4.
PaleySpectrum paley_spectrum(int q);

struct Discrepancy {
  int value = 0;
  std::vector<int> sign;  // +1 / -1 per vertex
};

/// min over f of max over v of |sum of f over N+(v)|, f(0) = +1 by symmetry.
/// Throws TooLarge for more than 24 vertices.
Discrepancy discrepancy_exhaustive(const Digraph& d);

}  // namespace outcol
