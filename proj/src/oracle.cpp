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

#include "outcol/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <mutex>

#include "outcol/isomorphism.hpp"
#include "outcol/structure.hpp"

namespace outcol::oracle {

namespace {

constexpr std::uint64_t kSearchLimit = std::uint64_t{1} << 32;

// colours^n, saturating at kSearchLimit + 1.
std::uint64_t search_space(int colours, int n) {
  std::uint64_t s = 1;
  for (int i = 0; i < n; ++i) {
    s *= static_cast<std::uint64_t>(colours);
    if (s > kSearchLimit) return kSearchLimit + 1;
  }
  return s;
}

std::vector<std::uint64_t> masks_of(const Digraph& d) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(d.order()));
  for (int v = 0; v < d.order(); ++v) out[static_cast<std::size_t>(v)] = d.out(v).mask();
  return out;
}

// Colour-2 mask of the m-th colour vector in lexicographic order with vertex 0
// fixed to colour 1: vertex i (i >= 1) is bit n-1-i of m.
std::uint64_t lex_second_class(std::uint64_t m, int n) {
  std::uint64_t s = 0;
  for (int i = 1; i < n; ++i)
    if ((m >> (n - 1 - i)) & 1U) s |= std::uint64_t{1} << i;
  return s;
}

bool two_colouring_ok(const std::uint64_t* out, int n, std::uint64_t second) {
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t first = full & ~second;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t o = out[v];
    if (!(o & second) || !(o & first)) return false;
  }
  return true;
}

}  // namespace

bool mask_two_out_colourable(const std::uint64_t* out, int n) { return (mask_colourability(out, n) & 1U) != 0; }

unsigned mask_colourability(const std::uint64_t* out, int n) {
  for (int v = 0; v < n; ++v)
    if (std::popcount(out[v]) < 2) return 0;
  unsigned result = 0;
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 0; m < limit; ++m) {
    const std::uint64_t second = m << 1;  // vertex 0 stays in the first class
    if (!two_colouring_ok(out, n, second)) continue;
    result |= 1U;
    const int s = std::popcount(second);
    if (s == n / 2 || s == (n + 1) / 2) return 3U;
  }
  return result;
}

std::optional<Colouring> brute_force_out_colouring(const Digraph& d, int colours, bool balanced) {
  const int n = d.order();
  if (colours < 1) throw Error(Errc::InvalidArgument, "colour count must be positive");
  if (search_space(colours, n) > kSearchLimit)
    throw Error(Errc::SearchSpaceTooLarge, std::to_string(colours) + "^" + std::to_string(n) + " exceeds 2^32");
  if (n == 0) return std::nullopt;
  if (colours == 2) {
    const auto out = masks_of(d);
    const std::uint64_t limit = std::uint64_t{1} << (n - 1);
    for (std::uint64_t m = 0; m < limit; ++m) {
      const std::uint64_t second = lex_second_class(m, n);
      if (balanced) {
        const int s = std::popcount(second);
        if (s != n / 2 && s != (n + 1) / 2) continue;
      }
      if (two_colouring_ok(out.data(), n, second)) return Colouring::defined_by(VertexSet::from_mask(n, second).complement());
    }
    return std::nullopt;
  }
  // Odometer over colour vectors, vertex n-1 fastest, vertex 0 pinned to 1.
  std::vector<int> c(static_cast<std::size_t>(n), 1);
  while (true) {
    Colouring col(c, colours);
    if ((!balanced || col.balanced()) && !verify_out_colouring(d, col)) return col;
    int i = n - 1;
    while (i >= 1 && c[static_cast<std::size_t>(i)] == colours) c[static_cast<std::size_t>(i--)] = 1;
    if (i < 1) return std::nullopt;
    ++c[static_cast<std::size_t>(i)];
  }
}

std::optional<TwoPartition> brute_force_partition_k(const Digraph& d, int k, bool balanced) {
  const int n = d.order();
  if (search_space(2, n) > kSearchLimit) throw Error(Errc::SearchSpaceTooLarge, "2^" + std::to_string(n) + " exceeds 2^32");
  if (n < 2) return std::nullopt;
  const auto out = masks_of(d);
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t m = 0; m < limit; ++m) {
    const std::uint64_t second = lex_second_class(m, n);
    if (second == 0) continue;
    const int s = std::popcount(second);
    if (balanced && s != n / 2 && s != (n + 1) / 2) continue;
    const std::uint64_t first = full & ~second;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      const std::uint64_t o = out[static_cast<std::size_t>(v)];
      ok = std::popcount(o & first) >= k && std::popcount(o & second) >= k;
    }
    if (ok) return TwoPartition(VertexSet::from_mask(n, first), VertexSet::from_mask(n, second));
  }
  return std::nullopt;
}

std::optional<std::vector<bool>> nae_brute_force(const NaeFormula& f) {
  const int n = f.n_vars;
  if (n > 25) throw Error(Errc::TooLarge, "more than 25 variables");
  f.validate();
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> neg;
  for (const Clause& c : f.clauses) {
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    for (const Literal& l : c) (l.negated ? q : p) |= std::uint32_t{1} << l.var;
    pos.push_back(p);
    neg.push_back(q);
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < limit; ++m) {
    // Variable 0 is the most significant position of the lexicographic order.
    std::uint32_t truth = 0;
    for (int i = 0; i < n; ++i)
      if ((m >> (n - 1 - i)) & 1U) truth |= std::uint32_t{1} << i;
    bool ok = true;
    for (std::size_t j = 0; j < pos.size() && ok; ++j) {
      const bool some_true = (pos[j] & truth) || (neg[j] & ~truth);
      const bool some_false = (pos[j] & ~truth) || (neg[j] & truth);
      ok = some_true && some_false;
    }
    if (ok) {
      std::vector<bool> a(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = (truth >> i) & 1U;
      return a;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> hypergraph_2colourable(const Hypergraph& h) {
  const int n = h.n_vertices;
  if (n > 25) throw Error(Errc::TooLarge, "more than 25 vertices");
  h.validate();
  std::vector<std::uint32_t> edges;
  for (const auto& e : h.edges) {
    std::uint32_t m = 0;
    for (int v : e) m |= std::uint32_t{1} << v;
    if (std::popcount(m) < 2) return std::nullopt;
    edges.push_back(m);
  }
  if (n == 0) return std::vector<int>{};
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 0; m < limit; ++m) {
    std::uint32_t second = 0;
    for (int i = 1; i < n; ++i)
      if ((m >> (n - 1 - i)) & 1U) second |= std::uint32_t{1} << i;
    bool ok = true;
    for (std::uint32_t e : edges)
      if (!(e & second) || !(e & ~second)) {
        ok = false;
        break;
      }
    if (ok) {
      std::vector<int> c(static_cast<std::size_t>(n), 1);
      for (int i = 0; i < n; ++i)
        if ((second >> i) & 1U) c[static_cast<std::size_t>(i)] = 2;
      return c;
    }
  }
  return std::nullopt;
}

namespace {

// Backtracks over sides in vertex order; a vertex is checked once it and all
// its out-neighbours are placed.
class NiceSearch {
 public:
  explicit NiceSearch(const Digraph& d) : n_(d.order()), out_(static_cast<std::size_t>(n_)), due_(static_cast<std::size_t>(n_)) {
    for (int v = 0; v < n_; ++v) {
      out_[static_cast<std::size_t>(v)] = d.out(v).mask();
      const int last = d.out(v).empty() ? v : std::max(v, 63 - std::countl_zero(d.out(v).mask()));
      due_[static_cast<std::size_t>(last)].push_back(v);
    }
  }

  template <class Fn>
  void run(Fn&& fn) {
    if (n_ == 0) return;
    stop_ = false;
    descend(0, 0, fn);
  }

 private:
  template <class Fn>
  void descend(int t, std::uint64_t v1, Fn& fn) {
    if (t == n_) {
      if (!fn(v1)) stop_ = true;
      return;
    }
    for (int side = 0; side < 2 && !stop_; ++side) {
      const std::uint64_t next = side == 0 ? v1 | (std::uint64_t{1} << t) : v1;
      const std::uint64_t placed = t == 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (t + 1)) - 1;
      bool ok = true;
      for (int u : due_[static_cast<std::size_t>(t)]) {
        const std::uint64_t o = out_[static_cast<std::size_t>(u)];
        const bool first = (next >> u) & 1U;
        const std::uint64_t other = first ? placed & ~next : next;
        if (!(o & other) || (first && !(o & next))) {
          ok = false;
          break;
        }
      }
      if (ok) descend(t + 1, next, fn);
    }
  }

  int n_;
  std::vector<std::uint64_t> out_;
  std::vector<std::vector<int>> due_;
  bool stop_ = false;
};

}  // namespace

std::optional<VertexSet> brute_force_nice_partition(const Digraph& d) {
  if (d.order() > 64) throw Error(Errc::TooLarge, "more than 64 vertices");
  std::optional<VertexSet> found;
  NiceSearch(d).run([&](std::uint64_t v1) {
    found = VertexSet::from_mask(d.order(), v1);
    return false;
  });
  return found;
}

std::vector<VertexSet> all_nice_partitions(const Digraph& d) {
  if (d.order() > 24) throw Error(Errc::TooLarge, "more than 24 vertices");
  std::vector<VertexSet> all;
  NiceSearch(d).run([&](std::uint64_t v1) {
    all.push_back(VertexSet::from_mask(d.order(), v1));
    return true;
  });
  return all;
}

// ---------------------------------------------------------------------------

const char* class_name(GraphClass cls) noexcept {
  return cls == GraphClass::Tournament ? "tournaments" : "semicomplete";
}

Digraph SmallDigraph::to_digraph() const {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (std::uint64_t m = out[static_cast<std::size_t>(u)]; m; m &= m - 1) d.add_arc(u, std::countr_zero(m));
  return d;
}

SmallDigraph SmallDigraph::from(const Digraph& d) {
  if (d.order() > kMaxSmallOrder) throw Error(Errc::TooLarge, "small digraphs have at most 8 vertices");
  SmallDigraph g;
  g.n = d.order();
  for (int v = 0; v < g.n; ++v) g.out[static_cast<std::size_t>(v)] = d.out(v).mask();
  return g;
}

int SmallDigraph::min_out_degree() const noexcept {
  int m = n;
  for (int v = 0; v < n; ++v) m = std::min(m, std::popcount(out[static_cast<std::size_t>(v)]));
  return m;
}

std::uint64_t class_size(int n, GraphClass cls) {
  const int pairs = n * (n - 1) / 2;
  std::uint64_t s = 1;
  for (int p = 0; p < pairs; ++p) s *= cls == GraphClass::Tournament ? 2 : 3;
  return s;
}

void check_enumeration_guard(int n, GraphClass cls) {
  const int limit = cls == GraphClass::Tournament ? 7 : 6;
  if (n < 1 || n > limit)
    throw Error(Errc::SearchSpaceTooLarge, std::string(class_name(cls)) + " scans support 1 <= n <= " + std::to_string(limit));
}

EnumerationStats enumerate(const EnumerationSpec& spec, const std::function<void(const SmallDigraph&)>& visitor,
                           int threads) {
  check_enumeration_guard(spec.n, spec.cls);
  struct Acc {
    std::uint64_t labelled = 0;
    std::uint64_t accepted = 0;
    std::vector<std::string> forms;
  };
  Acc total = parallel_scan(
      spec.n, spec.cls, threads, Acc{},
      [&](Acc& acc, const SmallDigraph& g, std::uint64_t) {
        ++acc.labelled;
        if (spec.predicate && !spec.predicate(g)) return;
        ++acc.accepted;
        if (visitor) visitor(g);
        if (spec.dedup_canonical) {
          std::string f = canonical_form(g.to_digraph());
          auto it = std::lower_bound(acc.forms.begin(), acc.forms.end(), f);
          if (it == acc.forms.end() || *it != f) acc.forms.insert(it, std::move(f));
        }
      },
      [](Acc& into, Acc&& from) {
        into.labelled += from.labelled;
        into.accepted += from.accepted;
        std::vector<std::string> merged;
        std::set_union(into.forms.begin(), into.forms.end(), from.forms.begin(), from.forms.end(),
                       std::back_inserter(merged));
        into.forms = std::move(merged);
      });
  return EnumerationStats{total.labelled, total.accepted, std::move(total.forms)};
}

int default_threads() {
  if (const char* env = std::getenv("OUTCOL_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

}  // namespace outcol::oracle
