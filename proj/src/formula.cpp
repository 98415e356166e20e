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

#include "outcol/formula.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace outcol {

bool NaeFormula::monotone() const noexcept {
  for (const Clause& c : clauses)
    for (const Literal& l : c)
      if (l.negated) return false;
  return true;
}

void NaeFormula::validate() const {
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    const Clause& c = clauses[j];
    for (std::size_t a = 0; a < 3; ++a) {
      if (c[a].var < 0 || c[a].var >= n_vars)
        throw Error(Errc::ArityViolation, "clause " + std::to_string(j) + " uses variable out of range");
      for (std::size_t b = a + 1; b < 3; ++b)
        if (c[a].var == c[b].var)
          throw Error(Errc::ArityViolation, "clause " + std::to_string(j) + " repeats a variable");
    }
  }
}

bool NaeFormula::satisfied_by(const std::vector<bool>& assignment) const {
  for (const Clause& c : clauses) {
    bool seen_true = false;
    bool seen_false = false;
    for (const Literal& l : c) {
      const bool value = assignment[static_cast<std::size_t>(l.var)] != l.negated;
      (value ? seen_true : seen_false) = true;
    }
    if (!seen_true || !seen_false) return false;
  }
  return true;
}

void Hypergraph::validate() const {
  for (const auto& e : edges)
    for (int v : e)
      if (v < 0 || v >= n_vertices) throw Error(Errc::InvalidArgument, "hyperedge vertex out of range");
}

bool Hypergraph::properly_coloured_by(const std::vector<int>& colours) const {
  for (const auto& e : edges) {
    bool one = false;
    bool two = false;
    for (int v : e) (colours[static_cast<std::size_t>(v)] == 1 ? one : two) = true;
    if (!one || !two) return false;
  }
  return true;
}

namespace {

// Yields non-comment, non-blank lines.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == 'c' || line[pos] == '#') continue;
    return true;
  }
  return false;
}

std::pair<long long, long long> read_problem_line(std::istream& in, const std::string& tag) {
  std::string line;
  if (!next_content_line(in, line)) throw Error(Errc::Parse, "missing 'p " + tag + "' line");
  std::istringstream ls(line);
  std::string p;
  std::string kind;
  long long a = -1;
  long long b = -1;
  if (!(ls >> p >> kind >> a >> b) || p != "p" || kind != tag || a < 0 || b < 0)
    throw Error(Errc::Parse, "bad problem line '" + line + "'");
  return {a, b};
}

std::vector<long long> read_ints(const std::string& line) {
  std::istringstream ls(line);
  std::vector<long long> v;
  long long x = 0;
  while (ls >> x) v.push_back(x);
  if (!ls.eof()) throw Error(Errc::Parse, "non-integer token in '" + line + "'");
  if (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

NaeFormula read_nae(std::istream& in) {
  auto [n, m] = read_problem_line(in, "nae");
  NaeFormula f;
  f.n_vars = static_cast<int>(n);
  std::string line;
  for (long long j = 0; j < m; ++j) {
    if (!next_content_line(in, line)) throw Error(Errc::Parse, "expected " + std::to_string(m) + " clauses");
    auto lits = read_ints(line);
    if (lits.size() != 3) throw Error(Errc::ArityViolation, "clause '" + line + "' does not have 3 literals");
    Clause c;
    for (std::size_t i = 0; i < 3; ++i) {
      const long long x = lits[i];
      if (x == 0 || (x < 0 ? -x : x) > n) throw Error(Errc::Parse, "literal out of range in '" + line + "'");
      c[i] = Literal{static_cast<int>((x < 0 ? -x : x) - 1), x < 0};
    }
    f.clauses.push_back(c);
  }
  f.validate();
  return f;
}

void write_nae(std::ostream& out, const NaeFormula& f) {
  out << "p nae " << f.n_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c) out << (l.negated ? "-" : "") << (l.var + 1) << ' ';
    out << "0\n";
  }
}

Hypergraph read_hypergraph(std::istream& in) {
  auto [n, m] = read_problem_line(in, "hyp");
  Hypergraph h;
  h.n_vertices = static_cast<int>(n);
  std::string line;
  for (long long j = 0; j < m; ++j) {
    if (!next_content_line(in, line)) throw Error(Errc::Parse, "expected " + std::to_string(m) + " edges");
    std::vector<int> e;
    for (long long x : read_ints(line)) {
      if (x < 1 || x > n) throw Error(Errc::Parse, "vertex out of range in '" + line + "'");
      e.push_back(static_cast<int>(x - 1));
    }
    h.edges.push_back(std::move(e));
  }
  return h;
}

UndirectedGraph read_undirected(std::istream& in) {
  auto [n, m] = read_problem_line(in, "edge");
  UndirectedGraph g;
  g.n = static_cast<int>(n);
  std::string line;
  for (long long j = 0; j < m; ++j) {
    if (!next_content_line(in, line)) throw Error(Errc::Parse, "expected " + std::to_string(m) + " edges");
    std::istringstream ls(line);
    std::string e;
    long long u = 0;
    long long v = 0;
    if (!(ls >> e >> u >> v) || e != "e" || u < 1 || v < 1 || u > n || v > n || u == v)
      throw Error(Errc::Parse, "bad edge line '" + line + "'");
    g.edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  return g;
}

}  // namespace outcol
