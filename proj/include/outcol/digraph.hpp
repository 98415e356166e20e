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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "outcol/error.hpp"

namespace outcol {

/**
 * Set of vertex ids drawn from a fixed universe 0..n-1, stored as a bit-set.
 *
 * Universes of up to 64 vertices live in a single inline word, which is what
 * the enumeration workloads hit; larger universes spill to the heap.
 */
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }
  template <class Range>
  static VertexSet from_range(int universe, const Range& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }
  static VertexSet full(int universe);
  /// Low 64 bits only; `universe` must be at most 64.
  static VertexSet from_mask(int universe, Word mask);

  int universe() const noexcept { return universe_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  Word word(std::size_t i) const noexcept { return words_[i]; }
  /// The single word of a universe of at most 64 vertices.
  Word mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  bool contains(int v) const noexcept {
    return (words_[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(int v) noexcept { words_[static_cast<std::size_t>(v) / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(int v) noexcept { words_[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

  int size() const noexcept {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const noexcept {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }
  /// Smallest member, or -1.
  int first() const noexcept { return next(-1); }
  /// Smallest member strictly greater than `after`, or -1.
  int next(int after) const noexcept;

  bool intersects(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  int count_common(const VertexSet& o) const noexcept {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }
  VertexSet complement() const;
  VertexSet with(int v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(int v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  /// Compares member lists lexicographically (smallest ids first).
  friend bool lex_less(const VertexSet& a, const VertexSet& b) noexcept;

  std::vector<int> to_vector() const;
  std::string to_string() const;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    int operator*() const noexcept { return v_; }
    iterator& operator++() noexcept {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) noexcept {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.v_ == b.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };
  iterator begin() const noexcept { return {this, first()}; }
  iterator end() const noexcept { return {this, -1}; }

 private:
  static std::size_t word_count(int universe) {
    return static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits);
  }

  int universe_ = 0;
  boost::container::small_vector<Word, 1> words_;
};

using Arc = std::pair<int, int>;

/**
 * Directed graph on dense vertex ids 0..n-1 with bit-set out- and
 * in-adjacency. Self-loops are rejected; 2-cycles are allowed.
 */
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  static Digraph from_arcs(int n, const std::vector<Arc>& arcs);

  int order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_; }

  bool has_arc(int u, int v) const noexcept { return out_[static_cast<std::size_t>(u)].contains(v); }
  /// Adds u->v; a no-op if present.
  void add_arc(int u, int v);
  /// Removes u->v; a no-op if absent.
  void remove_arc(int u, int v);

  const VertexSet& out(int v) const noexcept { return out_[static_cast<std::size_t>(v)]; }
  const VertexSet& in(int v) const noexcept { return in_[static_cast<std::size_t>(v)]; }
  int out_degree(int v) const noexcept { return out(v).size(); }
  int in_degree(int v) const noexcept { return in(v).size(); }
  int min_out_degree() const noexcept;
  int min_in_degree() const noexcept;
  /// Union of the out-neighbourhoods of `s`.
  VertexSet out_of(const VertexSet& s) const;
  /// True if every vertex of `a` dominates every vertex of `b`.
  bool dominates(const VertexSet& a, const VertexSet& b) const;

  VertexSet all() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  /// Arcs in lexicographic order.
  std::vector<Arc> arcs() const;
  /// Subdigraph induced by `keep`; vertex i of the result is the i-th
  /// smallest member of `keep`, recorded in `to_original` if given.
  Digraph induced(const VertexSet& keep, std::vector<int>* to_original = nullptr) const;
  /// Same digraph with vertex v renamed to perm[v].
  Digraph relabelled(const std::vector<int>& perm) const;

  friend bool operator==(const Digraph& a, const Digraph& b) noexcept {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::size_t arcs_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// Vertex colouring with colours 1..k.
struct Colouring {
  std::vector<int> colour;
  int k = 2;

  Colouring() = default;
  Colouring(std::vector<int> colours, int k_colours);
  /// 2-colouring defined by `first_class`: its members get colour 1, the rest colour 2.
  static Colouring defined_by(const VertexSet& first_class);

  int order() const noexcept { return static_cast<int>(colour.size()); }
  VertexSet class_of(int c) const;
  int class_size(int c) const noexcept;
  /// Class sizes differ by at most one.
  bool balanced() const noexcept;
  friend bool operator==(const Colouring&, const Colouring&) = default;
};

/// Ordered pair of disjoint covering vertex sets.
class TwoPartition {
 public:
  TwoPartition() = default;
  /// Throws NotAPartition unless `part1`, `part2` are disjoint and cover 0..n-1.
  TwoPartition(const VertexSet& part1, const VertexSet& part2);
  /// side[v] is 0 for part1 and 1 for part2.
  static TwoPartition from_sides(const std::vector<int>& side);

  int order() const noexcept { return part1_.universe(); }
  const VertexSet& part1() const noexcept { return part1_; }
  const VertexSet& part2() const noexcept { return part2_; }
  const VertexSet& part(int i) const noexcept { return i == 0 ? part1_ : part2_; }
  int side_of(int v) const noexcept { return part1_.contains(v) ? 0 : 1; }
  bool balanced() const noexcept;
  friend bool operator==(const TwoPartition&, const TwoPartition&) = default;

 private:
  VertexSet part1_;
  VertexSet part2_;
};

/// Reads the plain arc-list format: `n m`, then m lines `u v`; `#` lines are comments.
Digraph read_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);
/// Writes the arc-list format with arcs in lexicographic order.
void write_digraph(std::ostream& out, const Digraph& d);
std::string format_digraph(const Digraph& d);

}  // namespace outcol
