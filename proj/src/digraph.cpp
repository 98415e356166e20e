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

#include "outcol/digraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace outcol {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::NotTournament: return "NotTournament";
    case Errc::NotSemicomplete: return "NotSemicomplete";
    case Errc::NotStrong: return "NotStrong";
    case Errc::LenOutOfRange: return "LenOutOfRange";
    case Errc::TooSmall: return "TooSmall";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::BadParameter: return "BadParameter";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InputNotValidColouring: return "InputNotValidColouring";
    case Errc::NotTwoOutRegular: return "NotTwoOutRegular";
    case Errc::BelowThreshold: return "BelowThreshold";
    case Errc::DegreeBelow2k: return "DegreeBelow2k";
    case Errc::RequiredEdgesOverlap: return "RequiredEdgesOverlap";
    case Errc::Exhausted: return "Exhausted";
    case Errc::EmptyEdge: return "EmptyEdge";
    case Errc::NoDisjointClausePair: return "NoDisjointClausePair";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::ArityViolation: return "ArityViolation";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~Word{0};
  if (int tail = universe % kWordBits; tail != 0) s.words_.back() = (Word{1} << tail) - 1;
  return s;
}

VertexSet VertexSet::from_mask(int universe, Word mask) {
  VertexSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

int VertexSet::next(int after) const noexcept {
  int start = after + 1;
  if (start >= universe_) return -1;
  std::size_t wi = static_cast<std::size_t>(start) / kWordBits;
  Word w = words_[wi] & (~Word{0} << (start % kWordBits));
  while (true) {
    if (w != 0) return static_cast<int>(wi) * kWordBits + std::countr_zero(w);
    if (++wi >= words_.size()) return -1;
    w = words_[wi];
  }
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

bool lex_less(const VertexSet& a, const VertexSet& b) noexcept {
  int x = a.first();
  int y = b.first();
  while (x != -1 && y != -1) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x == -1 && y != -1;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first_member = true;
  for (int v : *this) {
    if (!first_member) s += ',';
    s += std::to_string(v);
    first_member = false;
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(int n) : n_(n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative vertex count");
  out_.assign(static_cast<std::size_t>(n), VertexSet(n));
  in_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Digraph Digraph::from_arcs(int n, const std::vector<Arc>& arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw Error(Errc::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
}

void Digraph::add_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(Errc::InvalidArgument, "self-loop at " + std::to_string(u));
  if (has_arc(u, v)) return;
  out_[static_cast<std::size_t>(u)].insert(v);
  in_[static_cast<std::size_t>(v)].insert(u);
  ++arcs_;
}

void Digraph::remove_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!has_arc(u, v)) return;
  out_[static_cast<std::size_t>(u)].erase(v);
  in_[static_cast<std::size_t>(v)].erase(u);
  --arcs_;
}

int Digraph::min_out_degree() const noexcept {
  int m = n_ == 0 ? 0 : n_;
  for (const auto& s : out_) m = std::min(m, s.size());
  return m;
}

int Digraph::min_in_degree() const noexcept {
  int m = n_ == 0 ? 0 : n_;
  for (const auto& s : in_) m = std::min(m, s.size());
  return m;
}

VertexSet Digraph::out_of(const VertexSet& s) const {
  VertexSet r(n_);
  for (int v : s) r |= out(v);
  return r;
}

bool Digraph::dominates(const VertexSet& a, const VertexSet& b) const {
  for (int v : a)
    if (!b.is_subset_of(out(v))) return false;
  return true;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> r;
  r.reserve(arcs_);
  for (int u = 0; u < n_; ++u)
    for (int v : out(u)) r.emplace_back(u, v);
  return r;
}

Digraph Digraph::induced(const VertexSet& keep, std::vector<int>* to_original) const {
  std::vector<int> members = keep.to_vector();
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < members.size(); ++i) index[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  Digraph h(static_cast<int>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (int v : out(members[i]) & keep) h.add_arc(static_cast<int>(i), index[static_cast<std::size_t>(v)]);
  if (to_original) *to_original = std::move(members);
  return h;
}

Digraph Digraph::relabelled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw Error(Errc::SizeMismatch, "permutation size");
  Digraph h(n_);
  for (int u = 0; u < n_; ++u)
    for (int v : out(u)) h.add_arc(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return h;
}

// ---------------------------------------------------------------------------
// Colouring / TwoPartition

Colouring::Colouring(std::vector<int> colours, int k_colours) : colour(std::move(colours)), k(k_colours) {
  if (k < 1) throw Error(Errc::InvalidArgument, "colour count must be positive");
  for (int c : colour)
    if (c < 1 || c > k) throw Error(Errc::InvalidArgument, "colour " + std::to_string(c) + " out of range");
}

Colouring Colouring::defined_by(const VertexSet& first_class) {
  std::vector<int> c(static_cast<std::size_t>(first_class.universe()), 2);
  for (int v : first_class) c[static_cast<std::size_t>(v)] = 1;
  return Colouring(std::move(c), 2);
}

VertexSet Colouring::class_of(int c) const {
  VertexSet s(order());
  for (int v = 0; v < order(); ++v)
    if (colour[static_cast<std::size_t>(v)] == c) s.insert(v);
  return s;
}

int Colouring::class_size(int c) const noexcept {
  return static_cast<int>(std::count(colour.begin(), colour.end(), c));
}

bool Colouring::balanced() const noexcept {
  int lo = order();
  int hi = 0;
  for (int c = 1; c <= k; ++c) {
    lo = std::min(lo, class_size(c));
    hi = std::max(hi, class_size(c));
  }
  return hi - lo <= 1;
}

TwoPartition::TwoPartition(const VertexSet& part1, const VertexSet& part2) : part1_(part1), part2_(part2) {
  if (part1.universe() != part2.universe()) throw Error(Errc::NotAPartition, "parts over different universes");
  if (part1.intersects(part2)) throw Error(Errc::NotAPartition, "parts overlap");
  if ((part1 | part2) != VertexSet::full(part1.universe())) throw Error(Errc::NotAPartition, "parts do not cover");
}

TwoPartition TwoPartition::from_sides(const std::vector<int>& side) {
  const int n = static_cast<int>(side.size());
  VertexSet a(n);
  VertexSet b(n);
  for (int v = 0; v < n; ++v) (side[static_cast<std::size_t>(v)] == 0 ? a : b).insert(v);
  return TwoPartition(a, b);
}

bool TwoPartition::balanced() const noexcept {
  int d = part1_.size() - part2_.size();
  return d >= -1 && d <= 1;
}

// ---------------------------------------------------------------------------
// Text format

Digraph read_digraph(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out_line) {
    while (std::getline(in, out_line)) {
      auto pos = out_line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || out_line[pos] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line)) throw Error(Errc::Parse, "missing header line");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m) || n < 0 || m < 0) throw Error(Errc::Parse, "bad header '" + line + "'");
  }
  Digraph d(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) throw Error(Errc::Parse, "expected " + std::to_string(m) + " arcs, got " + std::to_string(i));
    std::istringstream ls(line);
    long long u = -1;
    long long v = -1;
    if (!(ls >> u >> v)) throw Error(Errc::Parse, "bad arc line '" + line + "'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error(Errc::Parse, "arc endpoint out of range in '" + line + "'");
    if (u == v) throw Error(Errc::Parse, "self-loop in '" + line + "'");
    if (d.has_arc(static_cast<int>(u), static_cast<int>(v))) throw Error(Errc::Parse, "duplicate arc '" + line + "'");
    d.add_arc(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line(line)) throw Error(Errc::Parse, "trailing content '" + line + "'");
  return d;
}

Digraph parse_digraph(const std::string& text) {
  std::istringstream is(text);
  return read_digraph(is);
}

void write_digraph(std::ostream& out, const Digraph& d) {
  out << d.order() << ' ' << d.arc_count() << '\n';
  for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

std::string format_digraph(const Digraph& d) {
  std::ostringstream os;
  write_digraph(os, d);
  return os.str();
}

}  // namespace outcol
