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

#include "outcol/kpartition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "outcol/structure.hpp"

namespace outcol {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool coin(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

void check_threshold(int have, int need, const char* what, const PartitionConfig& cfg) {
  if (cfg.force || have >= need) return;
  throw Error(Errc::BelowThreshold, std::string(what) + " " + std::to_string(have) + " is below the threshold " +
                                        std::to_string(need) + " (use force to override)");
}

// Shortfall statistics for one attempt; `in` adds the in-neighbour conditions.
AttemptStat assess(const Digraph& d, const TwoPartition& p, int k, bool in, int attempt) {
  AttemptStat s;
  s.attempt = attempt;
  for (int v = 0; v < d.order(); ++v) {
    int worst = 0;
    for (int side = 0; side < 2; ++side) {
      worst = std::max(worst, k - d.out(v).count_common(p.part(side)));
      if (in) worst = std::max(worst, k - d.in(v).count_common(p.part(side)));
    }
    if (worst > 0) {
      ++s.failing_vertices;
      s.worst_deficit = std::max(s.worst_deficit, worst);
    }
  }
  return s;
}

PartitionResult las_vegas(const Digraph& d, const PartitionConfig& cfg, bool in) {
  PartitionResult r;
  r.matching = near_perfect_matching(d.order(), cfg);
  for (int a = 0; a < cfg.max_retries; ++a) {
    TwoPartition p = matching_split(d, cfg, static_cast<std::uint64_t>(a));
    AttemptStat s = assess(d, p, cfg.k, in, a);
    r.attempts.push_back(s);
    if (s.failing_vertices == 0) {
      r.partition = std::move(p);
      break;
    }
  }
  return r;
}

}  // namespace

void validate(const PartitionConfig& cfg) {
  if (cfg.k < 0) throw Error(Errc::BadParameter, "k must be non-negative");
  if (!(cfg.epsilon >= 0)) throw Error(Errc::BadParameter, "epsilon must be non-negative");
  if (cfg.max_retries < 1) throw Error(Errc::BadParameter, "max_retries must be at least 1");
}

std::mt19937_64 attempt_stream(std::uint64_t seed, std::uint64_t attempt) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(attempt + 1)));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::InvalidArgument, "empty range");
  unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

int degree_threshold(int k, double epsilon) {
  if (k <= 1) return 2 * std::max(k, 0);
  const double m = 2.0 * k + (1.0 + epsilon) * std::sqrt(2.0 * k * std::log(static_cast<double>(k)));
  return static_cast<int>(std::ceil(m - 1e-9));
}

std::vector<std::pair<int, int>> near_perfect_matching(int n, const PartitionConfig& cfg) {
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<std::pair<int, int>> m;
  for (auto [u, v] : cfg.required_edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v || used[static_cast<std::size_t>(u)] ||
        used[static_cast<std::size_t>(v)])
      throw Error(Errc::RequiredEdgesOverlap,
                  "required edge (" + std::to_string(u) + "," + std::to_string(v) + ") is invalid or overlaps another");
    used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
    m.emplace_back(u, v);
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (!used[static_cast<std::size_t>(v)]) rest.push_back(v);
  if (cfg.shuffle) {
    auto rng = attempt_stream(cfg.seed, ~std::uint64_t{0});
    for (std::size_t i = rest.size(); i > 1; --i) std::swap(rest[i - 1], rest[uniform_below(rng, i)]);
  }
  for (std::size_t i = 0; i + 1 < rest.size(); i += 2) m.emplace_back(rest[i], rest[i + 1]);
  if (rest.size() % 2 == 1) m.emplace_back(rest.back(), -1);
  return m;
}

TwoPartition matching_split(const Digraph& d, const PartitionConfig& cfg, std::uint64_t attempt) {
  const int n = d.order();
  const auto m = near_perfect_matching(n, cfg);
  auto rng = attempt_stream(cfg.seed, attempt);
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : m) {
    const int s = coin(rng) ? 1 : 0;
    side[static_cast<std::size_t>(u)] = s;
    if (v >= 0) side[static_cast<std::size_t>(v)] = 1 - s;
  }
  return TwoPartition::from_sides(side);
}

std::vector<std::pair<int, int>> two_case_required_edges(const Digraph& t) {
  std::vector<int> four;
  for (int v = 0; v < t.order(); ++v)
    if (t.out_degree(v) == 4) four.push_back(v);
  if (four.size() == 1) {
    const auto o = t.out(four[0]).to_vector();
    return {{o[0], o[1]}};
  }
  for (std::size_t i = 0; i < four.size(); ++i)
    for (std::size_t j = i + 1; j < four.size(); ++j) {
      const int x = four[i];
      const int y = four[j];
      const auto ox = (t.out(x) - VertexSet(t.order(), {y})).to_vector();
      const auto oy = (t.out(y) - VertexSet(t.order(), {x})).to_vector();
      for (std::size_t a = 0; a < ox.size(); ++a)
        for (std::size_t b = a + 1; b < ox.size(); ++b)
          for (std::size_t c = 0; c < oy.size(); ++c)
            for (std::size_t e = c + 1; e < oy.size(); ++e) {
              const int s[4] = {ox[a], ox[b], oy[c], oy[e]};
              if (s[2] == s[0] || s[2] == s[1] || s[3] == s[0] || s[3] == s[1]) continue;
              return {{x, y}, {s[0], s[1]}, {s[2], s[3]}};
            }
    }
  return {};
}

PartitionResult partition_k(const Digraph& d, const PartitionConfig& cfg_in) {
  validate(cfg_in);
  PartitionConfig cfg = cfg_in;
  check_threshold(d.order() ? d.min_out_degree() : 0, degree_threshold(cfg.k, cfg.epsilon), "minimum out-degree", cfg);
  if (cfg.strategy == SplitStrategy::Auto && cfg.k == 1 && cfg.required_edges.empty() && is_tournament(d) &&
      d.min_out_degree() >= 4)
    cfg.required_edges = two_case_required_edges(d);
  return las_vegas(d, cfg, false);
}

PartitionResult partition_k_inout(const Digraph& d, const PartitionConfig& cfg) {
  validate(cfg);
  const int need = degree_threshold(cfg.k, cfg.epsilon);
  check_threshold(d.order() ? d.min_out_degree() : 0, need, "minimum out-degree", cfg);
  check_threshold(d.order() ? d.min_in_degree() : 0, need, "minimum in-degree", cfg);
  if (!cfg.force && cfg.k > 0 && d.order() && d.min_in_degree() < 1)
    throw Error(Errc::BelowThreshold, "a vertex has in-degree 0");
  return las_vegas(d, cfg, true);
}

std::vector<int> r_partition_violations(const Digraph& d, const std::vector<int>& part, int r, int k) {
  std::vector<VertexSet> parts(static_cast<std::size_t>(r), VertexSet(d.order()));
  for (int v = 0; v < d.order(); ++v) parts[static_cast<std::size_t>(part[static_cast<std::size_t>(v)])].insert(v);
  std::vector<int> bad;
  for (int v = 0; v < d.order(); ++v)
    for (const auto& p : parts)
      if (d.out(v).count_common(p) < k) {
        bad.push_back(v);
        break;
      }
  return bad;
}

RPartition partition_r(const Digraph& d, int r, const PartitionConfig& cfg) {
  validate(cfg);
  if (r < 1) throw Error(Errc::BadParameter, "r must be at least 1");
  const int n = d.order();
  const int mindeg = n ? d.min_out_degree() : 0;
  RPartition out;
  out.r = r;
  if (r == 1) {
    out.part.assign(static_cast<std::size_t>(n), 0);
    if (mindeg < cfg.k) throw Error(Errc::Exhausted, "a single part needs minimum out-degree k");
    return out;
  }
  check_threshold(mindeg, static_cast<int>(std::ceil((1.0 + cfg.epsilon) * r * cfg.k - 1e-9)), "minimum out-degree", cfg);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  if (cfg.shuffle) {
    auto rng = attempt_stream(cfg.seed, ~std::uint64_t{0});
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
  }
  for (int a = 0; a < cfg.max_retries; ++a) {
    auto rng = attempt_stream(cfg.seed, static_cast<std::uint64_t>(a));
    std::vector<int> part(static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < order.size(); b += static_cast<std::size_t>(r)) {
      std::vector<int> labels(static_cast<std::size_t>(r));
      std::iota(labels.begin(), labels.end(), 0);
      for (std::size_t i = labels.size(); i > 1; --i) std::swap(labels[i - 1], labels[uniform_below(rng, i)]);
      for (std::size_t i = 0; i < static_cast<std::size_t>(r) && b + i < order.size(); ++i)
        part[static_cast<std::size_t>(order[b + i])] = labels[i];
    }
    const auto bad = r_partition_violations(d, part, r, cfg.k);
    AttemptStat s;
    s.attempt = a;
    s.failing_vertices = static_cast<int>(bad.size());
    out.attempts.push_back(s);
    if (bad.empty()) {
      out.part = std::move(part);
      return out;
    }
  }
  throw Error(Errc::Exhausted, "no valid " + std::to_string(r) + "-partition within " + std::to_string(cfg.max_retries) + " attempts");
}

ChernoffBound chernoff_failure_bound(const std::vector<int>& degrees, int k) {
  ChernoffBound b;
  if (degrees.empty()) return b;
  auto p = [k](double d) { return 2.0 * std::exp(-(d - 2.0 * k) * (d - 2.0 * k) / (2.0 * d)); };
  int d0 = degrees.front();
  for (int d : degrees) {
    if (d < 2 * k) throw Error(Errc::DegreeBelow2k, "degree " + std::to_string(d) + " is below 2k = " + std::to_string(2 * k));
    if (d == 0) {
      b.union_bound += 2.0;
      continue;
    }
    b.union_bound += p(d);
    d0 = std::min(d0, d);
  }
  if (d0 == 0) {
    b.aggregate_bound = b.union_bound;
    return b;
  }
  b.aggregate_bound = (2.0 * d0 + 1.0) * p(d0);
  for (long long d = d0;; ++d) {
    const double term = 2.0 * p(static_cast<double>(d + 1));
    b.aggregate_bound += term;
    if (term < 1e-18 && d > 4LL * k) break;
  }
  return b;
}

PaleySpectrum paley_spectrum(int q) {
  bool prime = q >= 2;
  for (int p = 2; p * p <= q && prime; ++p)
    if (q % p == 0) prime = false;
  if (!prime || q % 4 != 3) throw Error(Errc::BadParameter, "q must be a prime congruent to 3 mod 4");
  std::vector<bool> residue(static_cast<std::size_t>(q), false);
  for (int x = 1; x < q; ++x) residue[static_cast<std::size_t>(static_cast<long long>(x) * x % q)] = true;
  std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(q), std::vector<std::int64_t>(static_cast<std::size_t>(q), 0));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      if (i != j && residue[static_cast<std::size_t>(((i - j) % q + q) % q)]) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  PaleySpectrum s;
  s.q = q;
  s.identity_holds = true;
  const std::int64_t diag = (q + 1) / 4 + (q - 3) / 4;
  const std::int64_t off = (q - 3) / 4;
  for (int i = 0; i < q && s.identity_holds; ++i)
    for (int j = 0; j < q; ++j) {
      std::int64_t sum = 0;
      for (int r = 0; r < q; ++r) sum += a[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      if (sum != (i == j ? diag : off)) {
        s.identity_holds = false;
        break;
      }
    }
  const std::int64_t q64 = q;
  s.eigenvalues = {{(q64 - 1) * (q64 - 1) / 4, 1}, {(q64 + 1) / 4, q - 1}};
  return s;
}

Discrepancy discrepancy_exhaustive(const Digraph& d) {
  const int n = d.order();
  if (n > 24) throw Error(Errc::TooLarge, "discrepancy search supports at most 24 vertices");
  Discrepancy best;
  if (n == 0) return best;
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n));
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    out[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(d.out(v).mask());
    deg[static_cast<std::size_t>(v)] = d.out_degree(v);
  }
  int best_value = n + 1;
  std::uint32_t best_plus = 1;
  const std::uint32_t limit = std::uint32_t{1} << (n - 1);
  for (std::uint32_t m = 0; m < limit; ++m) {
    const std::uint32_t plus = (m << 1) | 1U;  // vertex 0 is +1
    int worst = 0;
    for (int v = 0; v < n && worst < best_value; ++v)
      worst = std::max(worst, std::abs(2 * std::popcount(out[static_cast<std::size_t>(v)] & plus) - deg[static_cast<std::size_t>(v)]));
    if (worst < best_value) {
      best_value = worst;
      best_plus = plus;
    }
  }
  best.value = best_value;
  best.sign.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) best.sign[static_cast<std::size_t>(v)] = ((best_plus >> v) & 1U) ? 1 : -1;
  return best;
}

}  // namespace outcol
