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

#include "outcol/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <numeric>

namespace outcol {

namespace {

using Mask = std::uint32_t;
using Cells = std::vector<std::vector<int>>;

class Canonizer {
 public:
  explicit Canonizer(const Digraph& d) : n_(d.order()), out_(static_cast<std::size_t>(n_)), in_(out_.size()) {
    if (n_ > kMaxCanonicalOrder)
      throw Error(Errc::TooLarge, "canonical labelling supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
    for (int u = 0; u < n_; ++u)
      for (int v : d.out(u)) {
        out_[static_cast<std::size_t>(u)] |= Mask{1} << v;
        in_[static_cast<std::size_t>(v)] |= Mask{1} << u;
      }
  }

  std::vector<int> run() {
    if (n_ == 0) return {};
    Cells root(1);
    root[0].resize(static_cast<std::size_t>(n_));
    std::iota(root[0].begin(), root[0].end(), 0);
    std::vector<int> prefix;
    search(std::move(root), prefix);
    return best_order_;
  }

 private:
  void refine(Cells& cells) const {
    while (true) {
      std::vector<Mask> cell_mask(cells.size(), 0);
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_mask[c] |= Mask{1} << v;
      Cells next;
      next.reserve(static_cast<std::size_t>(n_));
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::vector<int>, std::vector<int>> groups;
        for (int v : cell) {
          std::vector<int> sig;
          sig.reserve(2 * cells.size());
          for (Mask m : cell_mask) {
            sig.push_back(std::popcount(out_[static_cast<std::size_t>(v)] & m));
            sig.push_back(std::popcount(in_[static_cast<std::size_t>(v)] & m));
          }
          groups[sig].push_back(v);
        }
        for (auto& [sig, members] : groups) next.push_back(std::move(members));
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  std::string certificate(const std::vector<int>& order) const {
    std::string s(static_cast<std::size_t>(n_ * n_), '0');
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if ((out_[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >> order[static_cast<std::size_t>(j)]) & 1U)
          s[static_cast<std::size_t>(i * n_ + j)] = '1';
    return s;
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }

  // Orbit representatives under the stored automorphisms that fix `prefix` pointwise.
  std::vector<int> orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& g : automorphisms_) {
      bool fixes = true;
      for (int p : prefix)
        if (g[static_cast<std::size_t>(p)] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(parent, v);
        int b = find(parent, g[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(parent, v);
    return parent;
  }

  void search(Cells cells, std::vector<int>& prefix) {
    refine(cells);
    if (static_cast<int>(cells.size()) == n_) {
      std::vector<int> order;
      order.reserve(static_cast<std::size_t>(n_));
      for (const auto& c : cells) order.push_back(c[0]);
      std::string cert = certificate(order);
      if (best_order_.empty() || cert < best_cert_) {
        best_cert_ = std::move(cert);
        best_order_ = std::move(order);
      } else if (cert == best_cert_) {
        std::vector<int> g(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) g[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(i)])] = order[static_cast<std::size_t>(i)];
        automorphisms_.push_back(std::move(g));
      }
      return;
    }
    std::size_t target = 0;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 && (cells[target].size() == 1 || cells[c].size() < cells[target].size())) target = c;
    std::vector<int> explored;
    for (int v : cells[target]) {
      const auto orbit = orbits(prefix);
      bool redundant = false;
      for (int u : explored)
        if (orbit[static_cast<std::size_t>(u)] == orbit[static_cast<std::size_t>(v)]) redundant = true;
      if (redundant) continue;
      explored.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : cells[c])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  int n_;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
  std::string best_cert_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::vector<int> canonical_labelling(const Digraph& d) { return Canonizer(d).run(); }

Digraph canonical_digraph(const Digraph& d) {
  const auto order = canonical_labelling(d);
  std::vector<int> perm(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) perm[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return d.relabelled(perm);
}

std::string canonical_form(const Digraph& d) {
  const Digraph c = canonical_digraph(d);
  const int n = c.order();
  std::string form(1 + static_cast<std::size_t>((n * n + 7) / 8), '\0');
  form[0] = static_cast<char>(n);
  for (int u = 0; u < n; ++u)
    for (int v : c.out(u)) {
      const int bit = u * n + v;
      form[1 + static_cast<std::size_t>(bit / 8)] = static_cast<char>(form[1 + static_cast<std::size_t>(bit / 8)] | (1 << (bit % 8)));
    }
  return form;
}

Digraph digraph_from_form(const std::string& form) {
  if (form.empty()) throw Error(Errc::Parse, "empty canonical form");
  const int n = static_cast<unsigned char>(form[0]);
  if (form.size() != 1 + static_cast<std::size_t>((n * n + 7) / 8)) throw Error(Errc::Parse, "canonical form length");
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const int bit = u * n + v;
      if ((static_cast<unsigned char>(form[1 + static_cast<std::size_t>(bit / 8)]) >> (bit % 8)) & 1U) d.add_arc(u, v);
    }
  return d;
}

bool is_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::string form_to_hex(const std::string& form) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (unsigned char c : form) {
    s += digits[c >> 4];
    s += digits[c & 15];
  }
  return s;
}

std::string form_from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw Error(Errc::Parse, "odd-length hex form");
  std::string s;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const auto byte = hex.substr(i, 2);
    if (byte.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) throw Error(Errc::Parse, "bad hex form");
    s += static_cast<char>(std::stoi(byte, nullptr, 16));
  }
  return s;
}

std::string form_hash(const std::string& form) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : form) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace outcol
