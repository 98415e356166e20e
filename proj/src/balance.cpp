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

#include <algorithm>
#include <cstdlib>
#include <queue>

#include "outcol/oracle.hpp"
#include "outcol/outcolour.hpp"
#include "outcol/structure.hpp"

namespace outcol {

namespace {

constexpr int kBalancedOracleOrder = 20;

bool defines(const Digraph& d, const VertexSet& v1) {
  for (int u = 0; u < d.order(); ++u) {
    const VertexSet& o = d.out(u);
    if (!o.intersects(v1) || o.is_subset_of(v1)) return false;
  }
  return true;
}

int imbalance(const VertexSet& a) { return std::abs(a.universe() - 2 * a.size()); }

// One step on (A, B = complement of A) with |B| > |A| + 1. Returns a larger A
// with smaller imbalance, or nothing.
class Step {
 public:
  Step(const Digraph& d, const VertexSet& a, RebalanceStats& stats)
      : d_(d), n_(d.order()), a_(a), b_(d.all() - a), stats_(stats) {
    for (int v : b_)
      if ((d_.out(v) & b_).size() == 1) y2_.insert(v);
    for (int v : y2_) x2_ |= d_.out(v) & b_;
    z_.assign(static_cast<std::size_t>(n_), VertexSet(n_));
    for (int u : a_) {
      const VertexSet ob = d_.out(u) & b_;
      if (ob.size() == 1) z_[static_cast<std::size_t>(ob.first())].insert(u);
    }
  }

  std::optional<VertexSet> run() {
    for (int v : b_ - x2_)
      if (z_[static_cast<std::size_t>(v)].empty())
        if (auto r = accept(a_.with(v))) {
          ++stats_.moves;
          return r;
        }
    for (const VertexSet& cand : proof_candidates())
      if (auto r = accept(cand)) {
        ++stats_.proof_exchanges;
        return r;
      }
    for (int v : b_)
      if (auto r = accept(a_.with(v))) {
        ++stats_.generic_steps;
        return r;
      }
    for (int x : a_)
      for (int y : b_)
        for (int z : b_) {
          if (z <= y) continue;
          if (auto r = accept(a_.without(x).with(y).with(z))) {
            ++stats_.generic_steps;
            return r;
          }
        }
    return std::nullopt;
  }

 private:
  std::optional<VertexSet> accept(const VertexSet& cand) const {
    if (imbalance(cand) >= imbalance(a_) || !defines(d_, cand)) return std::nullopt;
    return cand;
  }

  VertexSet exchange(int x, int y, int z) const { return a_.without(x).with(y).with(z); }

  // y in B with Z_y = {u}, or -1.
  int z_owner(int u, bool exact) const {
    for (int v : b_) {
      const VertexSet& z = z_[static_cast<std::size_t>(v)];
      if (exact ? z == VertexSet(n_, {u}) : z.contains(u)) return v;
    }
    return -1;
  }

  static bool exact_cycle(const Digraph& d, const VertexSet& s) {
    const int k = s.size();
    if (k != 2 && k != 3) return false;
    for (int v : s)
      if ((d.out(v) & s).size() != 1) return false;
    return true;
  }

  std::vector<VertexSet> proof_candidates() const {
    std::vector<VertexSet> out;
    const int ys = y2_.size();
    if (ys != 2 && ys != 3) return out;
    int xp = -1;
    for (int u : a_)
      if ((d_.out(u) & a_).size() == 1) {
        xp = u;
        break;
      }
    if (xp < 0) xp = a_.first();
    const int x = (d_.out(xp) & a_).first();
    if (x < 0) return out;
    const int y = z_owner(xp, true);
    const auto yv = y2_.to_vector();
    if (ys == 2) {
      int a = yv[0];
      int b = yv[1];
      const bool digon = d_.has_arc(a, b) && d_.has_arc(b, a);
      if (!digon && !d_.has_arc(a, b)) std::swap(a, b);
      if (digon || a_.size() >= 3) {
        if (y >= 0 && y != a) out.push_back(exchange(x, y, a));
      } else if (a_.size() == 2) {
        // A = {d, e} with d -> a: try ({a, b, d}, rest).
        int dd = a_.first();
        int ee = a_.next(dd);
        if (!d_.has_arc(dd, a)) std::swap(dd, ee);
        out.push_back(exchange(ee, a, b));
      }
      return out;
    }
    // |Y2| = 3: Y2 = X2 is a 3-cycle abc.
    const int a = yv[0];
    const int b = (d_.out(a) & y2_).first();
    const int c = (d_.out(b) & y2_).first();
    if ((b_ - x2_).size() == a_.size()) {
      if (y >= 0) out.push_back(exchange(x, y, a));
      return out;
    }
    VertexSet chosen(n_);
    for (int v : b_)
      if (!z_[static_cast<std::size_t>(v)].empty()) chosen.insert(z_[static_cast<std::size_t>(v)].first());
    const VertexSet unchosen = a_ - chosen;
    if (unchosen.size() != 1) return out;
    const int w = unchosen.first();
    VertexSet y1(n_);
    VertexSet x1(n_);
    for (int u : a_)
      if ((d_.out(u) & a_).size() == 1) {
        y1.insert(u);
        x1 |= d_.out(u) & a_;
      }
    const VertexSet wout = d_.out(w) & b_;
    for (int xx : (a_ - x1).without(w))
      for (int p : x2_)
        for (int q : x2_)
          if (p < q && !wout.is_subset_of(VertexSet(n_, {p, q}))) out.push_back(exchange(xx, p, q));
    // Case A.
    if (exact_cycle(d_, x1) && d_.dominates(VertexSet(n_, {w}), x1)) {
      const int xa = x1.first();
      const int xb = (d_.out(xa) & x1).first();
      const int ya = z_owner(xa, false);
      if (ya >= 0)
        for (int z : x2_)
          if (z != ya) out.push_back(exchange(xb, ya, z));
    }
    // Case B.
    if (a_.size() == 3) {
      const int x1v = (d_.out(w) & a_).first();
      const int y1v = x1v < 0 ? -1 : (d_.out(x1v) & a_).first();
      if (x1v >= 0 && y1v >= 0 && y1v != w && d_.has_arc(y1v, w)) {
        const int x2 = (d_.out(x1v) & b_).first();
        const int y2 = (d_.out(y1v) & b_).first();
        if (wout == VertexSet(n_, {x2})) {
          if (y2 != a) out.push_back(exchange(w, y2, a));
        } else {
          for (int z : {a, b, c})
            if (z != x2 && wout.intersects(b_.without(x2).without(z))) out.push_back(exchange(y1v, x2, z));
        }
      }
    }
    if (a_.size() == 2) {
      const VertexSet wo = d_.out(w) & x2_;
      const VertexSet wi = d_.in(w) & x2_;
      if (!wo.empty() && !wi.empty() && wo.first() != wi.first())
        out.push_back(VertexSet(n_, {wo.first(), wi.first(), w}));
    }
    return out;
  }

  const Digraph& d_;
  int n_;
  VertexSet a_;
  VertexSet b_;
  RebalanceStats& stats_;
  VertexSet y2_{n_};
  VertexSet x2_{n_};
  std::vector<VertexSet> z_;
};

}  // namespace

RebalanceOutcome rebalance(const Digraph& d, const Colouring& c) {
  if (!is_semicomplete(d)) throw Error(Errc::NotSemicomplete, "input is not semicomplete");
  if (c.order() != d.order() || c.k != 2) throw Error(Errc::InputNotValidColouring, "expected a 2-colouring of every vertex");
  if (auto bad = verify_out_colouring(d, c))
    throw Error(Errc::InputNotValidColouring, "vertex " + std::to_string(*bad) + " has a monochromatic out-neighbourhood");
  RebalanceOutcome out;
  VertexSet v1 = c.class_of(1);
  if (imbalance(v1) > 1 && d.order() == 6)
    if (auto name = unbalanceable6().find(d)) {
      Certificate cert;
      cert.kind = CertificateKind::InUnbalanceable;
      cert.class_name = *name;
      out.certificate = cert;
      return out;
    }
  while (imbalance(v1) > 1) {
    const bool first_small = 2 * v1.size() < d.order();
    const VertexSet small = first_small ? v1 : d.all() - v1;
    auto next = Step(d, small, out.stats).run();
    if (!next) {
      if (d.order() <= kBalancedOracleOrder) {
        if (auto col = oracle::brute_force_out_colouring(d, 2, true)) {
          ++out.stats.generic_steps;
          out.colouring = *col;
          return out;
        }
      }
      throw Error(Errc::Exhausted, "no balanced 2-out-colouring found");
    }
    v1 = first_small ? *next : d.all() - *next;
  }
  out.colouring = Colouring::defined_by(v1);
  return out;
}

Colouring three_out_colouring(const Digraph& d) {
  if (!is_semicomplete(d) || d.min_out_degree() < 2)
    throw Error(Errc::PreconditionViolated, "needs a semicomplete digraph with minimum out-degree at least 2");
  const int n = d.order();
  const SolveOutcome o = solve_semicomplete(d);
  Colouring c;
  if (o.colourable()) {
    c = *o.colouring;
    c.k = 3;
    const int big = c.class_size(1) >= c.class_size(2) ? 1 : 2;
    c.colour[static_cast<std::size_t>(c.class_of(big).first())] = 3;
  } else {
    std::vector<int> map;
    const Digraph s = d.induced(terminal_component(d), &map);
    std::optional<Colouring> sub;
    if (s.order() <= 7) {
      sub = oracle::brute_force_out_colouring(s, 3, false);
    } else if (o.certificate && o.certificate->g1) {
      // A 2-out-colouring of d + wz fails at most at w; a third colour on C repairs it.
      const G1Witness& g = *o.certificate->g1;
      Digraph plus = d;
      plus.add_arc(g.w, g.z);
      const SolveOutcome p = solve_semicomplete(plus);
      if (p.colourable()) {
        Colouring full = *p.colouring;
        full.k = 3;
        full.colour[static_cast<std::size_t>(g.cycle[0])] = 3;
        if (!verify_out_colouring(d, full)) return full;
      }
    }
    if (!sub) throw Error(Errc::Exhausted, "no 3-out-colouring found");
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < map.size(); ++i) colour[static_cast<std::size_t>(map[i])] = sub->colour[i];
    int next = 1;
    for (int v = 0; v < n; ++v)
      if (colour[static_cast<std::size_t>(v)] == 0) {
        colour[static_cast<std::size_t>(v)] = next;
        next = 3 - next;
      }
    c = Colouring(std::move(colour), 3);
  }
  if (verify_out_colouring(d, c)) throw Error(Errc::Exhausted, "internal: 3-colouring failed verification");
  return c;
}

TwoOutRegularOutcome solve_2outregular(const Digraph& d) {
  const int n = d.order();
  for (int v = 0; v < n; ++v)
    if (d.out_degree(v) != 2) throw Error(Errc::NotTwoOutRegular, "vertex " + std::to_string(v) + " has out-degree " + std::to_string(d.out_degree(v)));
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const int u = d.out(x).first();
    const int v = d.out(x).next(u);
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  TwoOutRegularOutcome out;
  for (int r = 0; r < n; ++r) {
    if (side[static_cast<std::size_t>(r)] >= 0) continue;
    side[static_cast<std::size_t>(r)] = 0;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (side[static_cast<std::size_t>(v)] < 0) {
          side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
          parent[static_cast<std::size_t>(v)] = u;
          depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
          q.push(v);
        } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
          // Tree paths from u and v to their common ancestor close an odd cycle.
          std::vector<int> pu{u};
          std::vector<int> pv{v};
          int a = u;
          int b = v;
          while (a != b) {
            if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
              a = parent[static_cast<std::size_t>(a)];
              pu.push_back(a);
            } else {
              b = parent[static_cast<std::size_t>(b)];
              pv.push_back(b);
            }
          }
          pv.pop_back();
          out.odd_cycle = pu;
          out.odd_cycle.insert(out.odd_cycle.end(), pv.rbegin(), pv.rend());
          return out;
        }
      }
    }
  }
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = side[static_cast<std::size_t>(v)] + 1;
  out.colouring = Colouring(std::move(colour), 2);
  return out;
}

}  // namespace outcol
