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

#include <optional>
#include <variant>
#include <vector>

#include "outcol/digraph.hpp"

namespace outcol {

enum class DigraphKind { Tournament, Semicomplete, Oriented, General };

const char* kind_name(DigraphKind kind) noexcept;

struct Classification {
  DigraphKind kind = DigraphKind::General;
  int min_out = 0;
  int min_in = 0;

  bool semicomplete() const noexcept {
    return kind == DigraphKind::Tournament || kind == DigraphKind::Semicomplete;
  }
};

/// Tournament: exactly one arc per unordered pair. Semicomplete: at least one.
/// Oriented: no 2-cycles. A single vertex is a tournament.
Classification classify(const Digraph& d);
bool is_tournament(const Digraph& d);
bool is_semicomplete(const Digraph& d);

struct StrongComponents {
  /// Components in a topological order of the condensation; members sorted.
  std::vector<VertexSet> components;
  std::vector<int> component_of;
  /// Indices into `components` of the components with no leaving arc.
  std::vector<int> terminal;

  std::size_t count() const noexcept { return components.size(); }
  bool strong() const noexcept { return components.size() == 1; }
};

/// Tarjan's algorithm, roots and neighbours visited in increasing id order.
StrongComponents strong_components(const Digraph& d);
bool is_strong(const Digraph& d);
/// Vertex set of the unique terminal component of a semicomplete digraph
/// (the first terminal component for other digraphs).
VertexSet terminal_component(const Digraph& d);

/// Directed cycle of exactly `len` vertices through `v` in a strong
/// tournament, grown one vertex at a time from a 3-cycle.
std::vector<int> cycle_through(const Digraph& d, int v, int len);

/// Result of in_dominating: a single vertex dominated by every other vertex,
/// or a directed cycle every outside vertex has an arc into.
struct InDominating {
  std::optional<int> vertex;
  std::vector<int> cycle;

  bool is_vertex() const noexcept { return vertex.has_value(); }
};

/// Every tournament on at least five vertices has an in-dominating vertex or
/// an in-dominating cycle on at most n-2 vertices.
InDominating in_dominating(const Digraph& d);
/// True if every vertex outside `x` has an out-neighbour in `x`.
bool is_in_dominating(const Digraph& d, const VertexSet& x);
/// True if `cycle` lists distinct vertices with consecutive arcs, closing back.
bool is_directed_cycle(const Digraph& d, const std::vector<int>& cycle);

/// First vertex whose out-neighbourhood is monochromatic (or empty), if any.
std::optional<int> verify_out_colouring(const Digraph& d, const Colouring& c);

enum class PartitionSide { InducedPart1, InducedPart2, Crossing };

struct PartitionViolation {
  int vertex = -1;
  PartitionSide which = PartitionSide::Crossing;
};

/// Checks that every vertex has at least k out-neighbours in each part.
std::optional<PartitionViolation> verify_kpartition(const Digraph& d, const TwoPartition& p, int k);

}  // namespace outcol
