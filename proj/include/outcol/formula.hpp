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
#include <iosfwd>
#include <string>
#include <vector>

#include "outcol/digraph.hpp"

namespace outcol {

struct Literal {
  int var = 0;  ///< 0-based variable id
  bool negated = false;
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// NAE-3-SAT instance: every clause wants a true and a false literal.
struct NaeFormula {
  int n_vars = 0;
  std::vector<Clause> clauses;

  bool monotone() const noexcept;
  /// Throws ArityViolation for repeated or out-of-range variables in a clause.
  void validate() const;
  /// Evaluates the NAE condition; `assignment[i]` is the value of variable i.
  bool satisfied_by(const std::vector<bool>& assignment) const;
};

struct Hypergraph {
  int n_vertices = 0;
  std::vector<std::vector<int>> edges;

  void validate() const;
  /// True when no edge is monochromatic; colours are 1 or 2.
  bool properly_coloured_by(const std::vector<int>& colours) const;
};

/// Simple undirected graph for the total-domination bridge.
struct UndirectedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

/// DIMACS-style `p nae <vars> <clauses>` followed by clause lines of three
/// signed 1-based literals with an optional trailing 0; `c` lines are comments.
NaeFormula read_nae(std::istream& in);
void write_nae(std::ostream& out, const NaeFormula& f);
/// `p hyp <vertices> <edges>` followed by edge lines of 1-based vertex ids.
Hypergraph read_hypergraph(std::istream& in);
/// DIMACS graph format: `p edge <n> <m>` followed by `e u v` lines (1-based).
UndirectedGraph read_undirected(std::istream& in);

}  // namespace outcol
