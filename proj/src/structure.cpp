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

#include "outcol/structure.hpp"

#include <algorithm>
#include <string>

namespace outcol {

const char* kind_name(DigraphKind kind) noexcept {
  switch (kind) {
    case DigraphKind::Tournament: return "tournament";
    case DigraphKind::Semicomplete: return "semicomplete";
    case DigraphKind::Oriented: return "oriented";
    case DigraphKind::General: return "general";
  }
  return "general";
}

Classification classify(const Digraph& d) {
  const int n = d.order();
  bool complete = true;
  bool two_cycle = false;
  for (int u = 0; u < n && (complete || !two_cycle); ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool uv = d.has_arc(u, v);
      const bool vu = d.has_arc(v, u);
      if (!uv && !vu) complete = false;
      if (uv && vu) two_cycle = true;
    }
  }
  Classification c;
  if (complete)
    c.kind = two_cycle ? DigraphKind::Semicomplete : DigraphKind::Tournament;
  else
    c.kind = two_cycle ? DigraphKind::General : DigraphKind::Oriented;
  c.min_out = d.min_out_degree();
  c.min_in = d.min_in_degree();
  return c;
}

bool is_tournament(const Digraph& d) { return classify(d).kind == DigraphKind::Tournament; }
bool is_semicomplete(const Digraph& d) { return classify(d).semicomplete(); }

StrongComponents strong_components(const Digraph& d) {
  const int n = d.order();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  std::vector<VertexSet> emitted;
  // Explicit DFS frames: (vertex, last neighbour tried).
  std::vector<std::pair<int, int>> frames;
  int counter = 0;

  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    frames.emplace_back(root, -1);
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;
    while (!frames.empty()) {
      auto& [v, last] = frames.back();
      const auto vi = static_cast<std::size_t>(v);
      int w = d.out(v).next(last);
      if (w != -1) {
        last = w;
        const auto wi = static_cast<std::size_t>(w);
        if (index[wi] == -1) {
          index[wi] = low[wi] = counter++;
          stack.push_back(w);
          on_stack[wi] = 1;
          frames.emplace_back(w, -1);
        } else if (on_stack[wi]) {
          low[vi] = std::min(low[vi], index[wi]);
        }
        continue;
      }
      if (low[vi] == index[vi]) {
        VertexSet comp(n);
        int x = -1;
        do {
          x = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(x)] = 0;
          comp.insert(x);
        } while (x != v);
        emitted.push_back(std::move(comp));
      }
      const int finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        const auto pi = static_cast<std::size_t>(frames.back().first);
        low[pi] = std::min(low[pi], low[static_cast<std::size_t>(finished)]);
      }
    }
  }

  StrongComponents sc;
  sc.components.assign(emitted.rbegin(), emitted.rend());
  sc.component_of.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < sc.components.size(); ++i)
    for (int v : sc.components[i]) sc.component_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
  for (std::size_t i = 0; i < sc.components.size(); ++i) {
    const VertexSet& comp = sc.components[i];
    if (d.out_of(comp).is_subset_of(comp)) sc.terminal.push_back(static_cast<int>(i));
  }
  return sc;
}

bool is_strong(const Digraph& d) { return d.order() <= 1 || strong_components(d).strong(); }

VertexSet terminal_component(const Digraph& d) {
  if (d.order() == 0) return VertexSet(0);
  StrongComponents sc = strong_components(d);
  return sc.components[static_cast<std::size_t>(sc.terminal.front())];
}

std::vector<int> cycle_through(const Digraph& d, int v, int len) {
  const int n = d.order();
  if (!is_tournament(d)) throw Error(Errc::NotTournament, "cycle_through needs a tournament");
  if (v < 0 || v >= n) throw Error(Errc::InvalidArgument, "vertex out of range");
  if (n < 3 || len < 3 || len > n) throw Error(Errc::LenOutOfRange, "length " + std::to_string(len) + " for order " + std::to_string(n));
  if (!is_strong(d)) throw Error(Errc::NotStrong, "cycle_through needs a strong tournament");

  std::vector<int> cycle;
  for (int u : d.out(v)) {
    const VertexSet closing = d.out(u) & d.in(v);
    if (!closing.empty()) {
      cycle = {v, u, closing.first()};
      break;
    }
  }
  VertexSet on_cycle = VertexSet::from_range(n, cycle);

  while (static_cast<int>(cycle.size()) < len) {
    const VertexSet outside = on_cycle.complement();
    bool grown = false;
    for (int x : outside) {
      const std::size_t k = cycle.size();
      for (std::size_t i = 0; i < k; ++i) {
        if (d.has_arc(cycle[i], x) && d.has_arc(x, cycle[(i + 1) % k])) {
          cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(i + 1), x);
          on_cycle.insert(x);
          grown = true;
          break;
        }
      }
      if (grown) break;
    }
    if (grown) continue;
    // Every outside vertex either dominates the cycle or is dominated by it;
    // strong connectivity gives an arc b->a from the second kind to the first.
    VertexSet dominated(n);
    VertexSet dominating(n);
    for (int x : outside) (d.has_arc(cycle[0], x) ? dominated : dominating).insert(x);
    bool replaced = false;
    for (int b : dominated) {
      const VertexSet targets = d.out(b) & dominating;
      if (targets.empty()) continue;
      const int a = targets.first();
      const int dropped = cycle[1];
      cycle[1] = b;
      cycle.insert(cycle.begin() + 2, a);
      on_cycle.erase(dropped);
      on_cycle.insert(b);
      on_cycle.insert(a);
      replaced = true;
      break;
    }
    if (!replaced) throw Error(Errc::NotStrong, "no extension found");
  }
  return cycle;
}

bool is_in_dominating(const Digraph& d, const VertexSet& x) {
  for (int v : x.complement())
    if (!d.out(v).intersects(x)) return false;
  return true;
}

bool is_directed_cycle(const Digraph& d, const std::vector<int>& cycle) {
  if (cycle.size() < 2) return false;
  VertexSet seen(d.order());
  for (int v : cycle) {
    if (v < 0 || v >= d.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!d.has_arc(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

InDominating in_dominating(const Digraph& d) {
  const int n = d.order();
  if (n < 5) throw Error(Errc::TooSmall, "in_dominating needs at least 5 vertices");
  if (!is_tournament(d)) throw Error(Errc::NotTournament, "in_dominating needs a tournament");

  StrongComponents sc = strong_components(d);
  InDominating result;
  if (!sc.strong()) {
    const VertexSet& term = sc.components[static_cast<std::size_t>(sc.terminal.front())];
    if (term.size() == 1) {
      result.vertex = term.first();
      return result;
    }
    std::vector<int> back;
    Digraph sub = d.induced(term, &back);
    const int len = term.size() >= 4 ? term.size() - 1 : 3;
    for (int v : cycle_through(sub, 0, len)) result.cycle.push_back(back[static_cast<std::size_t>(v)]);
    return result;
  }
  std::vector<int> cycle = cycle_through(d, 0, n - 2);
  const VertexSet on_cycle = VertexSet::from_range(n, cycle);
  const VertexSet rest = on_cycle.complement();
  const int p = rest.first();
  const int q = rest.next(p);
  const bool p_hits = d.out(p).intersects(on_cycle);
  const bool q_hits = d.out(q).intersects(on_cycle);
  if (p_hits && q_hits) {
    result.cycle = std::move(cycle);
    return result;
  }
  // One of them (x) is dominated by the whole cycle, so x->y, and y has an
  // out-neighbour z on the cycle: xyz is in-dominating.
  const int x = p_hits ? q : p;
  const int y = p_hits ? p : q;
  const int z = (d.out(y) & on_cycle).first();
  result.cycle = {x, y, z};
  return result;
}

std::optional<int> verify_out_colouring(const Digraph& d, const Colouring& c) {
  if (c.order() != d.order()) throw Error(Errc::SizeMismatch, "colouring covers " + std::to_string(c.order()) + " vertices, digraph has " + std::to_string(d.order()));
  std::vector<VertexSet> classes;
  classes.reserve(static_cast<std::size_t>(c.k));
  for (int i = 1; i <= c.k; ++i) classes.push_back(c.class_of(i));
  for (int v = 0; v < d.order(); ++v) {
    int hit = 0;
    for (const VertexSet& cls : classes) {
      if (d.out(v).intersects(cls) && ++hit >= 2) break;
    }
    if (hit < 2) return v;
  }
  return std::nullopt;
}

std::optional<PartitionViolation> verify_kpartition(const Digraph& d, const TwoPartition& p, int k) {
  if (p.order() != d.order()) throw Error(Errc::NotAPartition, "partition order differs from digraph order");
  if (k <= 0) return std::nullopt;
  for (int v = 0; v < d.order(); ++v) {
    const int in1 = d.out(v).count_common(p.part1());
    const int in2 = d.out(v).count_common(p.part2());
    const bool first = p.part1().contains(v);
    const int own = first ? in1 : in2;
    const int other = first ? in2 : in1;
    if (own < k) return PartitionViolation{v, first ? PartitionSide::InducedPart1 : PartitionSide::InducedPart2};
    if (other < k) return PartitionViolation{v, PartitionSide::Crossing};
  }
  return std::nullopt;
}

}  // namespace outcol
