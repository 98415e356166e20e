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

#include "outcol/outcolour.hpp"

#include <algorithm>
#include <initializer_list>

#include "outcol/oracle.hpp"
#include "outcol/structure.hpp"

namespace outcol {

namespace {

constexpr int kOracleFallbackOrder = 12;

bool defines(const Digraph& d, const VertexSet& v1) {
  for (int u = 0; u < d.order(); ++u) {
    const VertexSet& o = d.out(u);
    if (!o.intersects(v1) || o.is_subset_of(v1)) return false;
  }
  return true;
}

// Result of a branch: a colour class V1, a certificate, or nothing.
struct Branch {
  std::optional<VertexSet> v1;
  std::optional<Certificate> cert;
};

class Search {
 public:
  Search(const Digraph& d, SolveDiagnostics& diag) : d(d), n(d.order()), diag(diag) {}

  VertexSet set(std::initializer_list<int> vs) const { return VertexSet(n, vs); }

  // Verifies the colouring defined by `vs`.
  std::optional<VertexSet> attempt(const VertexSet& vs) {
    ++diag.candidates_tried;
    if (defines(d, vs)) return vs;
    return std::nullopt;
  }
  std::optional<VertexSet> attempt(std::initializer_list<int> vs) {
    for (int v : vs)
      if (v < 0 || v >= n) return std::nullopt;
    return attempt(set(vs));
  }

  /// Smallest vertex whose out-neighbourhood is exactly `s`, or -1.
  int with_out(const VertexSet& s) const {
    for (int v = 0; v < n; ++v)
      if (d.out(v) == s) return v;
    return -1;
  }

  /// Every vertex outside `removed` has an out-neighbour outside `removed`.
  bool min_out_positive_without(const VertexSet& removed) const {
    for (int v = 0; v < n; ++v)
      if (!removed.contains(v) && (d.out(v) - removed).empty()) return false;
    return true;
  }

  void note(const char* branch) { diag.branches.emplace_back(branch); }

  const Digraph& d;
  const int n;
  SolveDiagnostics& diag;
};

Branch found(std::optional<VertexSet> v) { return Branch{std::move(v), std::nullopt}; }

Certificate terminal_certificate(const std::string& name) {
  Certificate c;
  c.kind = CertificateKind::TerminalIs;
  c.class_name = name;
  return c;
}

Certificate g1_certificate(const G1Witness& w) {
  Certificate c;
  c.kind = CertificateKind::InG1;
  c.g1 = w;
  return c;
}

// ---------------------------------------------------------------------------
// Tournaments, minimum out-degree 2

Branch tournament_case22(Search& s, int a, int b, int c, int d) {
  const Digraph& t = s.d;
  VertexSet x = t.all() - s.set({a, b, c, d});
  if (t.has_arc(c, d)) {
    s.note("t2/case2.2/c->d");
    const VertexSet ce = t.out(c) & x;
    if (!ce.empty()) {
      const int e = ce.first();
      if (t.has_arc(d, e)) return found(s.attempt({b, c, e}));
      const int f = (t.out(d) - s.set({e})).first();
      return found(s.attempt({b, c, e, f}));
    }
    const int w = s.with_out(s.set({a, b, c}));
    if (w >= 0) {
      G1Witness g{w, {a, b, c}, d};
      if (is_G1_witness(t, g)) return Branch{std::nullopt, g1_certificate(g)};
      return {};
    }
    const int e3 = t.out(d).first();
    if (auto v = s.attempt({a, b, c, e3})) return found(v);
    const int e2 = s.with_out(s.set({a, b, c, e3}));
    if (e2 < 0) return {};
    if (auto v = s.attempt({a, b, c, e2})) return found(v);
    const int e1 = s.with_out(s.set({a, b, c, e2}));
    if (e1 < 0) return {};
    if (auto v = s.attempt({a, b, c, e1})) return found(v);
    if (is_isomorphic(t, tournament_t7())) return Branch{std::nullopt, terminal_certificate("t7")};
    return {};
  }
  s.note("t2/case2.2/d->c");
  const VertexSet ce = t.out(c) & x;
  const VertexSet df = t.out(d) & x;
  for (int e : ce)
    if (!(df - s.set({e})).empty()) return found(s.attempt({b, c, e}));
  const VertexSet common = ce & df;
  if (common.size() != 1) return {};
  if ((x - common).empty()) {
    if (is_isomorphic(t, rotational_tournament5())) return Branch{std::nullopt, terminal_certificate("rt5")};
    return {};
  }
  return found(s.attempt({a, b, c}));
}

Branch tournament_d2_branch(Search& s) {
  const Digraph& t = s.d;
  std::vector<int> low;
  for (int v = 0; v < s.n; ++v)
    if (t.out_degree(v) == 2) low.push_back(v);
  if (low.size() == 1) {
    s.note("t2/case1");
    const int a = low[0];
    const auto o = t.out(a).to_vector();
    const int b = t.has_arc(o[0], o[1]) ? o[0] : o[1];
    const int c = b == o[0] ? o[1] : o[0];
    const auto cs = t.out(c).to_vector();
    for (std::size_t i = 0; i < 2 && i < cs.size(); ++i)
      if (auto v = s.attempt({a, c, cs[i]})) return found(v);
    return {};
  }
  for (int a : low)
    for (int b : low) {
      if (a == b || !t.has_arc(a, b)) continue;
      const VertexSet common = t.out(a) & t.out(b);
      if (common.empty()) continue;
      const int d = common.first();
      const int c = (t.out(b) - s.set({d})).first();
      return tournament_case22(s, a, b, c, d);
    }
  s.note("t2/case2.1");
  for (int a : low)
    for (int b : low) {
      if (a == b || !t.has_arc(a, b)) continue;
      const auto o = t.out(b).to_vector();
      const int d = t.has_arc(o[0], o[1]) ? o[0] : o[1];
      const int e = d == o[0] ? o[1] : o[0];
      if (auto v = s.attempt({a, b, e})) return found(v);
      return found(s.attempt({a, b, d}));
    }
  return {};
}

// ---------------------------------------------------------------------------
// Tournaments, minimum out-degree at least 3

// {a, b} in-dominating with a -> b. {a, b, c} with c in N+(a) can also fail
// because b has no out-neighbour in it; of any two out-neighbours c', c'' of
// b, one of {a, b, c'} and {a, b, c''} is a 2-out-colouring.
Branch tournament_pair(Search& s, int a, int b) {
  const Digraph& t = s.d;
  s.note("t3/in-dominating-pair");
  const int c = (t.out(a) - s.set({b})).first();
  if (auto v = s.attempt({a, b, c})) return found(v);
  int tries = 0;
  for (int c2 : t.out(b) - s.set({c})) {
    if (auto v = s.attempt({a, b, c2})) return found(v);
    if (++tries == 2) break;
  }
  return {};
}

Branch tournament_d3_branch(Search& s) {
  const Digraph& t = s.d;
  int x = 0;
  for (int v = 1; v < s.n; ++v)
    if (t.out_degree(v) < t.out_degree(x)) x = v;
  const VertexSet nx = t.out(x);
  for (int y : nx)
    if ((t.out(y) & nx).empty()) return tournament_pair(s, x, y);
  const int delta = nx.size();
  if (delta >= 5) {
    s.note("t3/delta>=5");
    std::vector<int> map;
    const Digraph sub = t.induced(nx, &map);
    const InDominating ind = in_dominating(sub);
    VertexSet v1 = s.set({x});
    for (int v : ind.cycle) v1.insert(map[static_cast<std::size_t>(v)]);
    if (ind.vertex) v1.insert(map[static_cast<std::size_t>(*ind.vertex)]);
    return found(s.attempt(v1));
  }
  const VertexSet ix = t.in(x);
  if (delta == 4) {
    s.note("t3/delta=4");
    const auto m = nx.to_vector();
    for (int a : m)
      for (int b : m)
        for (int c : m) {
          if (a == b || b == c || a == c) continue;
          if (!t.has_arc(a, b) || !t.has_arc(b, c) || !t.has_arc(c, a)) continue;
          const int d = (nx - s.set({a, b, c})).first();
          if (!t.has_arc(d, a)) continue;
          if (auto v = s.attempt({x, a, b, c})) return found(v);
          const int e = (t.out(b) & ix).first();
          if (e < 0) return {};
          return found(s.attempt({x, a, b, e}));
        }
    return {};
  }
  s.note("t3/delta=3");
  const int a = nx.first();
  const int b = (t.out(a) & nx).first();
  const int c = (t.out(b) & nx).first();
  if (b < 0 || c < 0) return {};
  const int pairs[3][2] = {{a, b}, {b, c}, {c, a}};
  for (const auto& p : pairs)
    if ((t.out(p[0]) & t.out(p[1])).empty()) return tournament_pair(s, p[0], p[1]);
  const VertexSet all3 = t.out(a) & t.out(b) & t.out(c) & ix;
  if (!all3.empty()) {
    const int y = all3.first();
    if (auto v = s.attempt({x, a, y})) return found(v);
    return found(s.attempt({x, b, y}));
  }
  for (const auto& p : pairs) {
    const auto com = (t.out(p[0]) & t.out(p[1])).to_vector();
    if (com.size() >= 2) {
      if (auto v = s.attempt({x, p[0], com[0]})) return found(v);
      return found(s.attempt({x, p[0], com[1]}));
    }
  }
  const int d = (t.out(a) & t.out(b)).first();
  const int f = (t.out(b) & t.out(c)).first();
  const int e = (t.out(c) & t.out(a)).first();
  // Rotations (a, b, c, d, e, f) of the labelling.
  const int rot[3][6] = {{a, b, c, d, e, f}, {b, c, a, f, d, e}, {c, a, b, e, f, d}};
  for (const auto& r : rot)
    if (t.has_arc(r[3], r[5])) return found(s.attempt({x, r[2], r[3], r[4]}));
  const VertexSet rest = ix - s.set({d, e, f});
  for (const auto& r : rot) {
    const VertexSet cy = t.out(r[2]) & rest;
    if (!cy.empty()) return found(s.attempt({x, r[2], r[3], cy.first()}));
  }
  if (!rest.empty()) {
    for (const auto& r : rot)
      if (t.out(r[3]).intersects(rest)) return found(s.attempt({x, r[2], r[3], r[4]}));
    return {};
  }
  if (is_isomorphic(t, paley7())) return Branch{std::nullopt, terminal_certificate("p7")};
  return {};
}

// ---------------------------------------------------------------------------
// Semicomplete digraphs

// {p, q} in-dominating, minimum out-degree at least 3.
Branch semicomplete_pair(Search& s, int p, int q) {
  const Digraph& t = s.d;
  s.note("s3/in-dominating-pair");
  if (t.has_arc(p, q) && t.has_arc(q, p)) return found(s.attempt({p, q}));
  const int a = t.has_arc(p, q) ? p : q;
  const int b = a == p ? q : p;
  const int c = t.out(b).first();
  if (auto v = s.attempt({a, b, c})) return found(v);
  const int d = s.with_out(s.set({a, b, c}));
  if (d < 0) return {};
  const int c1 = (t.out(b) - s.set({a, b, c, d})).first();
  if (c1 < 0) return {};
  if (auto v = s.attempt({a, b, c1})) return found(v);
  if (t.has_arc(b, d)) return found(s.attempt({b, d}));
  const int c2 = (t.out(b) - s.set({a, b, c, d, c1})).first();
  if (c2 < 0) return {};
  return found(s.attempt({a, b, c2}));
}

Branch semicomplete_d3_base(Search& s, int a, int b) {
  const Digraph& t = s.d;
  const VertexSet sa = t.out(a) - s.set({b});
  const VertexSet sb = t.out(b) - s.set({a});
  const VertexSet u = sa | sb;
  if (u.size() == 4) return semicomplete_pair(s, a, b);
  if (u.size() == 2) {
    const int c = u.first();
    const int d = u.next(c);
    return t.has_arc(c, d) ? semicomplete_pair(s, a, d) : semicomplete_pair(s, a, c);
  }
  if (u.size() != 3) return {};
  const int c = (sa & sb).first();
  const int d = (sa - s.set({c})).first();
  const int e = (sb - s.set({c})).first();
  if (t.has_arc(d, c) && t.has_arc(e, c)) return semicomplete_pair(s, a, c);
  if (t.has_arc(c, d)) return semicomplete_pair(s, a, d);
  return semicomplete_pair(s, b, e);
}

Branch semicomplete_d2_base(Search& s, int x, int y) {
  const Digraph& t = s.d;
  int z = (t.out(x) - s.set({y})).first();
  int w_t = (t.out(y) - s.set({x})).first();
  if (z == w_t) {
    s.note("s2/common-out-neighbour");
    const int w = s.with_out(s.set({x, y}));
    if (w == z) {
      if (is_isomorphic(t, complete_digraph(3))) return Branch{std::nullopt, terminal_certificate("cd3")};
      return {};
    }
    if (w >= 0) {
      G1Witness g{w, {x, y}, z};
      if (is_G1_witness(t, g)) return Branch{std::nullopt, g1_certificate(g)};
      return {};
    }
    if (t.has_arc(z, x) || t.has_arc(z, y)) return found(s.attempt({x, y}));
    for (int u : t.out(z))
      if (s.min_out_positive_without(s.set({x, y, u})))
        if (auto v = s.attempt({x, y, u})) return found(v);
    if (auto g = recognize_G2(t)) {
      Certificate c;
      c.kind = CertificateKind::InG2;
      c.g2 = *g;
      return Branch{std::nullopt, c};
    }
    return {};
  }
  s.note("s2/distinct-out-neighbours");
  if (!t.has_arc(z, w_t)) {
    std::swap(x, y);
    std::swap(z, w_t);
  }
  if (s.min_out_positive_without(s.set({x, y}))) return found(s.attempt({x, y}));
  const int v = s.with_out(s.set({x, y}));
  if (v < 0) return {};
  for (int u : t.out(z) - s.set({x, y, w_t, v}))
    if (auto col = s.attempt({x, z, u})) return found(col);
  std::vector<int> cyc = v == w_t ? std::vector<int>{w_t, y} : std::vector<int>{w_t, v, y};
  G1Witness g{x, cyc, z};
  if (is_G1_witness(t, g)) return Branch{std::nullopt, g1_certificate(g)};
  if (auto other = recognize_G1(t)) {
    s.note("s2/g1-witness-search");
    return Branch{std::nullopt, g1_certificate(*other)};
  }
  return {};
}

std::optional<VertexSet> small_set_search(const Digraph& d, SolveDiagnostics& diag) {
  const int n = d.order();
  const int max_size = n <= 40 ? 4 : 3;
  std::vector<int> pick;
  std::optional<VertexSet> result;
  auto rec = [&](auto&& self, int from, int remaining) -> bool {
    if (remaining == 0) {
      ++diag.candidates_tried;
      VertexSet v1 = VertexSet::from_range(n, pick);
      if (defines(d, v1)) {
        result = v1;
        return true;
      }
      return false;
    }
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      const bool done = self(self, v + 1, remaining - 1);
      pick.pop_back();
      if (done) return true;
    }
    return false;
  };
  for (int size = 2; size <= max_size && size <= n; ++size)
    if (rec(rec, 0, size)) return result;
  return std::nullopt;
}

std::optional<Certificate> recognize_exception(const Digraph& h) {
  if (auto name = terminal_exception_name(h)) return terminal_certificate(*name);
  if (auto g = recognize_G1(h)) return g1_certificate(*g);
  if (auto g = recognize_G2(h)) {
    Certificate c;
    c.kind = CertificateKind::InG2;
    c.g2 = *g;
    return c;
  }
  return std::nullopt;
}

// Completes a branch on a strong digraph: validated certificate, colouring, or
// the fallback tiers (recognition, small sets, exhaustive search).
Branch resolve(const Digraph& h, Branch b, SolveDiagnostics& diag, bool lifting = false) {
  if (b.v1) return b;
  if (b.cert && validate_certificate(h, *b.cert)) return b;
  if (!lifting) ++diag.proof_gaps;
  if (auto c = recognize_exception(h)) return Branch{std::nullopt, c};
  if (auto v = small_set_search(h, diag)) {
    ++(lifting ? diag.lift_searches : diag.small_set_fallbacks);
    return Branch{v, std::nullopt};
  }
  if (h.order() <= kOracleFallbackOrder) {
    if (auto col = oracle::brute_force_out_colouring(h, 2, false)) {
      ++diag.oracle_fallbacks;
      diag.branches.emplace_back("oracle-fallback");
      return Branch{col->class_of(1), std::nullopt};
    }
    Certificate c;
    c.kind = CertificateKind::Exhaustive;
    for (int v = 0; v < h.order(); ++v) c.component.push_back(v);
    return Branch{std::nullopt, c};
  }
  throw Error(Errc::Exhausted, "no colouring found and no exception certificate applies");
}

Branch strong_base(const Digraph& h, SolveDiagnostics& diag) {
  Search s(h, diag);
  if (is_tournament(h)) return resolve(h, h.min_out_degree() == 2 ? tournament_d2_branch(s) : tournament_d3_branch(s), diag);
  for (int x = 0; x < h.order(); ++x)
    for (int y : h.out(x))
      if (h.has_arc(y, x))
        return resolve(h, h.min_out_degree() == 2 ? semicomplete_d2_base(s, x, y) : semicomplete_d3_base(s, x, y), diag);
  return resolve(h, {}, diag);
}

// Colouring of h from one of its terminal component (ids in `map`): the
// remaining vertices alternate colours by id.
VertexSet extend_from_terminal(int n, const VertexSet& sub_v1, const std::vector<int>& map) {
  VertexSet v1(n);
  VertexSet inside(n);
  for (std::size_t i = 0; i < map.size(); ++i) {
    inside.insert(map[i]);
    if (sub_v1.contains(static_cast<int>(i))) v1.insert(map[i]);
  }
  bool first = true;
  for (int v = 0; v < n; ++v) {
    if (inside.contains(v)) continue;
    if (first) v1.insert(v);
    first = !first;
  }
  return v1;
}

Certificate map_certificate(Certificate c, const std::vector<int>& map) {
  auto m = [&](int v) { return map[static_cast<std::size_t>(v)]; };
  if (c.g1) {
    c.g1->w = m(c.g1->w);
    c.g1->z = m(c.g1->z);
    for (int& v : c.g1->cycle) v = m(v);
  }
  if (c.g2) {
    c.g2->z = m(c.g2->z);
    for (int& v : c.g2->cycle) v = m(v);
    for (int& v : c.g2->cycle2) v = m(v);
  }
  for (int& v : c.component) v = m(v);
  return c;
}

// Colouring of h = (h - xy) + xy when h - xy has none.
Branch lift_exception(const Digraph& h, int x, int y, SolveDiagnostics& diag) {
  Search s(h, diag);
  Digraph below = h;
  below.remove_arc(x, y);
  if (auto g = recognize_G1(below); g && g->w == x && !VertexSet::from_range(h.order(), g->cycle).contains(y) && y != g->z) {
    s.note("lift/G1+wy");
    VertexSet rest = h.all() - VertexSet::from_range(h.order(), g->cycle) - s.set({g->w, g->z});
    if (!(h.out(g->z) & rest).without(y).empty()) {
      if (auto v = s.attempt({g->w, y, g->z})) return Branch{v, std::nullopt};
    } else {
      const VertexSet ty = h.out(y) & rest;
      if (!ty.empty())
        if (auto v = s.attempt({g->z, y, ty.first()})) return Branch{v, std::nullopt};
    }
  }
  return resolve(h, {}, diag, true);
}

struct Level {
  Digraph h;
  int x = -1;
  int y = -1;
  std::vector<int> map;  // next level's vertex i is map[i] here
};

// h strong semicomplete with minimum out-degree at least 2.
Branch solve_strong(const Digraph& h0, SolveDiagnostics& diag) {
  std::vector<Level> levels;
  Digraph cur = h0;
  while (true) {
    const int floor = cur.min_out_degree() >= 3 ? 3 : 2;
    int rx = -1;
    int ry = -1;
    for (int u = 0; u < cur.order() && rx < 0; ++u) {
      if (cur.out_degree(u) <= floor) continue;
      for (int v : cur.out(u))
        if (cur.has_arc(v, u)) {
          rx = u;
          ry = v;
          break;
        }
    }
    if (rx < 0) break;
    ++diag.arcs_stripped;
    Digraph next = cur;
    next.remove_arc(rx, ry);
    Level lv{std::move(cur), rx, ry, {}};
    cur = next.induced(terminal_component(next), &lv.map);
    levels.push_back(std::move(lv));
  }
  Branch b = strong_base(cur, diag);
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    if (b.v1) {
      b.v1 = extend_from_terminal(it->h.order(), *b.v1, it->map);
      continue;
    }
    b = lift_exception(it->h, it->x, it->y, diag);
  }
  return b;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::PreconditionViolated, what);
}

SolveOutcome finish(const Digraph& d, Branch b, SolveDiagnostics diag) {
  SolveOutcome out;
  out.diagnostics = std::move(diag);
  if (b.v1) {
    Colouring c = Colouring::defined_by(*b.v1);
    if (verify_out_colouring(d, c)) throw Error(Errc::Exhausted, "internal: produced colouring failed verification");
    out.colouring = std::move(c);
  } else {
    out.certificate = std::move(b.cert);
  }
  return out;
}

}  // namespace

const char* certificate_kind_name(CertificateKind kind) noexcept {
  switch (kind) {
    case CertificateKind::LowOutDegree: return "LowOutDegree";
    case CertificateKind::TerminalIs: return "TerminalIs";
    case CertificateKind::InG1: return "InG1";
    case CertificateKind::InG2: return "InG2";
    case CertificateKind::InUnbalanceable: return "InUnbalanceable";
    case CertificateKind::Exhaustive: return "Exhaustive";
  }
  return "?";
}

bool validate_certificate(const Digraph& d, const Certificate& c) {
  switch (c.kind) {
    case CertificateKind::LowOutDegree:
      return c.vertex >= 0 && c.vertex < d.order() && d.out_degree(c.vertex) <= 1;
    case CertificateKind::TerminalIs: {
      const VertexSet s = terminal_component(d);
      if (s.size() > 7) return false;
      const auto name = terminal_exception_name(d.induced(s));
      return name && *name == c.class_name;
    }
    case CertificateKind::InG1:
      return c.g1 && is_G1_witness(d, *c.g1);
    case CertificateKind::InG2:
      return c.g2 && is_G2_witness(d, *c.g2);
    case CertificateKind::InUnbalanceable: {
      const auto name = unbalanceable6().find(d);
      return name && *name == c.class_name;
    }
    case CertificateKind::Exhaustive: {
      const VertexSet s = terminal_component(d);
      if (s != VertexSet::from_range(d.order(), c.component) || s.size() > kOracleFallbackOrder) return false;
      return !oracle::brute_force_out_colouring(d.induced(s), 2, false);
    }
  }
  return false;
}

SolveOutcome solve_tournament_d2(const Digraph& t) {
  require(is_tournament(t), "not a tournament");
  require(t.min_out_degree() == 2, "minimum out-degree must be 2");
  require(is_strong(t), "tournament must be strong");
  SolveDiagnostics diag;
  Search s(t, diag);
  Branch b = resolve(t, tournament_d2_branch(s), diag);
  return finish(t, std::move(b), std::move(diag));
}

SolveOutcome solve_tournament_d3(const Digraph& t) {
  require(is_tournament(t), "not a tournament");
  require(t.min_out_degree() >= 3, "minimum out-degree must be at least 3");
  require(is_strong(t), "tournament must be strong");
  SolveDiagnostics diag;
  Search s(t, diag);
  Branch b = resolve(t, tournament_d3_branch(s), diag);
  return finish(t, std::move(b), std::move(diag));
}

SolveOutcome solve_semicomplete(const Digraph& d) {
  if (!is_semicomplete(d)) throw Error(Errc::NotSemicomplete, "input is not semicomplete");
  SolveDiagnostics diag;
  for (int v = 0; v < d.order(); ++v)
    if (d.out_degree(v) <= 1) {
      Certificate c;
      c.kind = CertificateKind::LowOutDegree;
      c.vertex = v;
      return finish(d, Branch{std::nullopt, c}, std::move(diag));
    }
  std::vector<int> map;
  const Digraph h = d.induced(terminal_component(d), &map);
  Branch b = solve_strong(h, diag);
  if (b.v1)
    b.v1 = extend_from_terminal(d.order(), *b.v1, map);
  else
    b.cert = map_certificate(*b.cert, map);
  return finish(d, std::move(b), std::move(diag));
}

}  // namespace outcol
