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
#include <optional>
#include <vector>

#include "outcol/digraph.hpp"
#include "outcol/formula.hpp"

namespace outcol {

/// One edge per vertex, equal to its out-neighbourhood. Empty edges are kept.
Hypergraph out_neighbourhood_hypergraph(const Digraph& d);

/// Incidence digraph of a hypergraph with an apex, every edge a 2-cycle.
/// Vertices: X as 0..n-1, then one vertex per hyperedge, then the apex.
struct SymmetricReduction {
  Digraph digraph;
  int n_points = 0;
  int n_edges = 0;
  int apex = 0;

  int edge_vertex(int e) const noexcept { return n_points + e; }
};

/// Throws EmptyEdge.
SymmetricReduction hypergraph_to_symmetric_digraph(const Hypergraph& h);
/// Keeps the colours on X, edge vertices get 1 and the apex 2.
Colouring lift_hypergraph_colouring(const SymmetricReduction& r, const std::vector<int>& colours);
std::vector<int> project_to_hypergraph(const SymmetricReduction& r, const Colouring& c);

/**
 * Bipartite tournament B(F) for a monotone NAE-3-SAT formula.
 *
 * Vertices: u_0..u_{n-1}, then c_1, c*_1, c**_1, c_2, c*_2, c**_2, c_3, ..., c_m
 * where clauses are taken in `clause_order`. The first two clauses share no
 * variable.
 */
struct BipartiteTournamentReduction {
  Digraph digraph;
  int n_vars = 0;
  /// clause_order[p] is the input clause placed at position p.
  std::vector<int> clause_order;
  /// clause_vertex[j] is the vertex c of input clause j.
  std::vector<int> clause_vertex;
  /// Copies c*_1, c*_2 and c**_1, c**_2.
  std::array<int, 2> star{};
  std::array<int, 2> double_star{};

  int var_vertex(int i) const noexcept { return i; }
};

/// First pair (i, j), i < j in lexicographic order, of clauses with no common variable.
std::optional<std::pair<int, int>> first_disjoint_clause_pair(const NaeFormula& f);
/// Throws NotMonotone, ArityViolation, NoDisjointClausePair.
BipartiteTournamentReduction nae_to_bipartite_tournament(const NaeFormula& f);
/// x_i is true iff u_i has colour 1.
std::vector<bool> assignment_from_colouring(const BipartiteTournamentReduction& r, const Colouring& c);
Colouring colouring_from_assignment(const BipartiteTournamentReduction& r, const std::vector<bool>& assignment);

/// Local names of the six gadget vertices, in layout order.
enum GadgetVertex : int { kGadgetA, kGadgetB, kGadgetV, kGadgetVp, kGadgetVbar, kGadgetVbarp, kGadgetSize };

/// The gadget X: 6 vertices and 12 arcs.
Digraph gadget_x();

/**
 * R(F): copy i of the gadget occupies 6i..6i+5 in GadgetVertex order; clause j
 * adds d_j = 6n+2j and c_j = 6n+2j+1.
 */
struct NicePartitionReduction {
  Digraph digraph;
  int n_vars = 0;
  int n_clauses = 0;

  int gadget(int i, GadgetVertex g) const noexcept { return kGadgetSize * i + g; }
  int literal_vertex(const Literal& l) const noexcept { return gadget(l.var, l.negated ? kGadgetVbar : kGadgetV); }
  int d_vertex(int j) const noexcept { return kGadgetSize * n_vars + 2 * j; }
  int c_vertex(int j) const noexcept { return kGadgetSize * n_vars + 2 * j + 1; }
};

/// Both D(V1,V2) and D[V1] have minimum out-degree at least one.
bool is_nice_partition(const Digraph& d, const VertexSet& v1);
/// Throws ArityViolation.
NicePartitionReduction nae_to_nice_partition_digraph(const NaeFormula& f);
/// x_i is true iff v_i lies in V1.
std::vector<bool> assignment_from_nice_partition(const NicePartitionReduction& r, const VertexSet& v1);
/// Returns V1.
VertexSet nice_partition_from_assignment(const NicePartitionReduction& r, const std::vector<bool>& assignment);

/// Each undirected edge becomes a 2-cycle.
Digraph total_domination_bridge(const UndirectedGraph& g);
/// Both parts dominate every vertex through its neighbours.
bool is_total_dominating_partition(const UndirectedGraph& g, const std::vector<int>& side);
/// Sides are 0 and 1; colour c maps to side c-1.
std::vector<int> tds_partition_from_colouring(const Colouring& c);
Colouring colouring_from_tds_partition(const std::vector<int>& side);

}  // namespace outcol
