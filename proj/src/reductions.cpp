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

#include "outcol/reductions.hpp"

#include <string>

#include "outcol/error.hpp"

namespace outcol {

Hypergraph out_neighbourhood_hypergraph(const Digraph& d) {
  Hypergraph h;
  h.n_vertices = d.order();
  for (int v = 0; v < d.order(); ++v) h.edges.push_back(d.out(v).to_vector());
  return h;
}

SymmetricReduction hypergraph_to_symmetric_digraph(const Hypergraph& h) {
  h.validate();
  SymmetricReduction r;
  r.n_points = h.n_vertices;
  r.n_edges = static_cast<int>(h.edges.size());
  r.apex = r.n_points + r.n_edges;
  r.digraph = Digraph(r.apex + 1);
  for (int e = 0; e < r.n_edges; ++e) {
    if (h.edges[static_cast<std::size_t>(e)].empty())
      throw Error(Errc::EmptyEdge, "hyperedge " + std::to_string(e) + " is empty");
    for (int x : h.edges[static_cast<std::size_t>(e)]) {
      r.digraph.add_arc(x, r.edge_vertex(e));
      r.digraph.add_arc(r.edge_vertex(e), x);
    }
  }
  for (int x = 0; x < r.n_points; ++x) {
    r.digraph.add_arc(x, r.apex);
    r.digraph.add_arc(r.apex, x);
  }
  return r;
}

Colouring lift_hypergraph_colouring(const SymmetricReduction& r, const std::vector<int>& colours) {
  if (static_cast<int>(colours.size()) != r.n_points) throw Error(Errc::SizeMismatch, "colouring size differs from the hypergraph order");
  std::vector<int> c(colours);
  c.resize(static_cast<std::size_t>(r.apex + 1), 1);
  c[static_cast<std::size_t>(r.apex)] = 2;
  return Colouring(std::move(c), 2);
}

std::vector<int> project_to_hypergraph(const SymmetricReduction& r, const Colouring& c) {
  return {c.colour.begin(), c.colour.begin() + r.n_points};
}

namespace {

bool share_variable(const Clause& a, const Clause& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (x.var == y.var) return true;
  return false;
}

}  // namespace

std::optional<std::pair<int, int>> first_disjoint_clause_pair(const NaeFormula& f) {
  const int m = static_cast<int>(f.clauses.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!share_variable(f.clauses[static_cast<std::size_t>(i)], f.clauses[static_cast<std::size_t>(j)])) return std::pair{i, j};
  return std::nullopt;
}

BipartiteTournamentReduction nae_to_bipartite_tournament(const NaeFormula& f) {
  f.validate();
  if (!f.monotone()) throw Error(Errc::NotMonotone, "formula contains a negated literal");
  const auto pair = first_disjoint_clause_pair(f);
  if (!pair) throw Error(Errc::NoDisjointClausePair, "no two clauses are variable-disjoint");
  const int m = static_cast<int>(f.clauses.size());

  BipartiteTournamentReduction r;
  r.n_vars = f.n_vars;
  r.clause_order = {pair->first, pair->second};
  for (int j = 0; j < m; ++j)
    if (j != pair->first && j != pair->second) r.clause_order.push_back(j);
  r.clause_vertex.assign(static_cast<std::size_t>(m), -1);
  r.digraph = Digraph(f.n_vars + m + 4);

  int next = f.n_vars;
  auto add_clause_vertex = [&](const Clause& cl) {
    const int c = next++;
    VertexSet lits(r.digraph.order());
    for (const auto& l : cl) lits.insert(l.var);
    for (int u = 0; u < f.n_vars; ++u) {
      if (lits.contains(u))
        r.digraph.add_arc(c, u);
      else
        r.digraph.add_arc(u, c);
    }
    return c;
  };
  for (int p = 0; p < m; ++p) {
    const int j = r.clause_order[static_cast<std::size_t>(p)];
    const Clause& cl = f.clauses[static_cast<std::size_t>(j)];
    r.clause_vertex[static_cast<std::size_t>(j)] = add_clause_vertex(cl);
    if (p < 2) {
      r.star[static_cast<std::size_t>(p)] = add_clause_vertex(cl);
      r.double_star[static_cast<std::size_t>(p)] = add_clause_vertex(cl);
    }
  }
  return r;
}

std::vector<bool> assignment_from_colouring(const BipartiteTournamentReduction& r, const Colouring& c) {
  std::vector<bool> a(static_cast<std::size_t>(r.n_vars));
  for (int i = 0; i < r.n_vars; ++i) a[static_cast<std::size_t>(i)] = c.colour[static_cast<std::size_t>(r.var_vertex(i))] == 1;
  return a;
}

Colouring colouring_from_assignment(const BipartiteTournamentReduction& r, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != r.n_vars) throw Error(Errc::SizeMismatch, "assignment size differs from the variable count");
  std::vector<int> c(static_cast<std::size_t>(r.digraph.order()), 1);
  for (int i = 0; i < r.n_vars; ++i) c[static_cast<std::size_t>(r.var_vertex(i))] = assignment[static_cast<std::size_t>(i)] ? 1 : 2;
  for (int v : r.double_star) c[static_cast<std::size_t>(v)] = 2;
  return Colouring(std::move(c), 2);
}

Digraph gadget_x() {
  return Digraph::from_arcs(kGadgetSize, {{kGadgetA, kGadgetB},
                                          {kGadgetB, kGadgetA},
                                          {kGadgetA, kGadgetVp},
                                          {kGadgetB, kGadgetVbarp},
                                          {kGadgetV, kGadgetVp},
                                          {kGadgetVp, kGadgetV},
                                          {kGadgetVbar, kGadgetVbarp},
                                          {kGadgetVbarp, kGadgetVbar},
                                          {kGadgetV, kGadgetVbar},
                                          {kGadgetVbar, kGadgetVp},
                                          {kGadgetVp, kGadgetVbarp},
                                          {kGadgetVbarp, kGadgetV}});
}

bool is_nice_partition(const Digraph& d, const VertexSet& v1) {
  const VertexSet v2 = v1.complement();
  for (int v = 0; v < d.order(); ++v) {
    const bool first = v1.contains(v);
    if (!d.out(v).intersects(first ? v2 : v1)) return false;
    if (first && !d.out(v).intersects(v1)) return false;
  }
  return true;
}

NicePartitionReduction nae_to_nice_partition_digraph(const NaeFormula& f) {
  f.validate();
  NicePartitionReduction r;
  r.n_vars = f.n_vars;
  r.n_clauses = static_cast<int>(f.clauses.size());
  r.digraph = Digraph(kGadgetSize * r.n_vars + 2 * r.n_clauses);
  const Digraph x = gadget_x();
  for (int i = 0; i < r.n_vars; ++i)
    for (const auto& [u, v] : x.arcs()) r.digraph.add_arc(kGadgetSize * i + u, kGadgetSize * i + v);
  for (int j = 0; j < r.n_clauses; ++j) {
    r.digraph.add_arc(r.d_vertex(j), r.c_vertex(j));
    for (const auto& l : f.clauses[static_cast<std::size_t>(j)]) r.digraph.add_arc(r.c_vertex(j), r.literal_vertex(l));
  }
  return r;
}

std::vector<bool> assignment_from_nice_partition(const NicePartitionReduction& r, const VertexSet& v1) {
  std::vector<bool> a(static_cast<std::size_t>(r.n_vars));
  for (int i = 0; i < r.n_vars; ++i) a[static_cast<std::size_t>(i)] = v1.contains(r.gadget(i, kGadgetV));
  return a;
}

VertexSet nice_partition_from_assignment(const NicePartitionReduction& r, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != r.n_vars) throw Error(Errc::SizeMismatch, "assignment size differs from the variable count");
  VertexSet v1(r.digraph.order());
  for (int i = 0; i < r.n_vars; ++i) {
    const bool t = assignment[static_cast<std::size_t>(i)];
    v1.insert(r.gadget(i, t ? kGadgetA : kGadgetB));
    v1.insert(r.gadget(i, t ? kGadgetV : kGadgetVbar));
    v1.insert(r.gadget(i, t ? kGadgetVp : kGadgetVbarp));
  }
  for (int j = 0; j < r.n_clauses; ++j) v1.insert(r.c_vertex(j));
  return v1;
}

Digraph total_domination_bridge(const UndirectedGraph& g) {
  Digraph d(g.n);
  for (auto [u, v] : g.edges) {
    if (u == v) throw Error(Errc::InvalidArgument, "self-loop in undirected graph");
    if (!d.has_arc(u, v)) d.add_arc(u, v);
    if (!d.has_arc(v, u)) d.add_arc(v, u);
  }
  return d;
}

bool is_total_dominating_partition(const UndirectedGraph& g, const std::vector<int>& side) {
  if (static_cast<int>(side.size()) != g.n) return false;
  std::vector<unsigned> seen(static_cast<std::size_t>(g.n), 0);
  for (auto [u, v] : g.edges) {
    seen[static_cast<std::size_t>(u)] |= 1U << side[static_cast<std::size_t>(v)];
    seen[static_cast<std::size_t>(v)] |= 1U << side[static_cast<std::size_t>(u)];
  }
  for (unsigned s : seen)
    if (s != 3U) return false;
  return true;
}

std::vector<int> tds_partition_from_colouring(const Colouring& c) {
  std::vector<int> side(c.colour);
  for (int& s : side) s -= 1;
  return side;
}

Colouring colouring_from_tds_partition(const std::vector<int>& side) {
  std::vector<int> c(side);
  for (int& s : c) s += 1;
  return Colouring(std::move(c), 2);
}

}  // namespace outcol
