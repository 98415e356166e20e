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

#include "outcol/catalog.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "outcol/oracle.hpp"
#include "outcol/structure.hpp"

namespace outcol {

namespace detail {
// Frozen catalog data: hex-encoded canonical forms in label order.
extern const std::vector<std::string> kExceptionForms;
extern const std::vector<std::string> kUnbalanceableForms;
}  // namespace detail

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

std::uint64_t closure(const std::uint64_t* adj, int start) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

bool mask_strong(const oracle::SmallDigraph& g) {
  const std::uint64_t full = (std::uint64_t{1} << g.n) - 1;
  if (closure(g.out.data(), 0) != full) return false;
  std::array<std::uint64_t, oracle::kMaxSmallOrder> in{};
  for (int u = 0; u < g.n; ++u)
    for (std::uint64_t m = g.out[static_cast<std::size_t>(u)]; m; m &= m - 1)
      in[static_cast<std::size_t>(std::countr_zero(m))] |= std::uint64_t{1} << u;
  return closure(in.data(), 0) == full;
}

// Vertices of `s` in cycle order from the smallest, if d[s] is exactly a
// 2-cycle or an induced directed 3-cycle.
std::optional<std::vector<int>> exact_short_cycle(const Digraph& d, const VertexSet& s) {
  const auto v = s.to_vector();
  if (v.size() == 2) {
    if (d.has_arc(v[0], v[1]) && d.has_arc(v[1], v[0])) return v;
    return std::nullopt;
  }
  if (v.size() != 3) return std::nullopt;
  int arcs = 0;
  for (int a : v)
    for (int b : v)
      if (a != b && d.has_arc(a, b)) ++arcs;
  if (arcs != 3) return std::nullopt;
  if (d.has_arc(v[0], v[1]) && d.has_arc(v[1], v[2]) && d.has_arc(v[2], v[0])) return v;
  if (d.has_arc(v[0], v[2]) && d.has_arc(v[2], v[1]) && d.has_arc(v[1], v[0])) return std::vector<int>{v[0], v[2], v[1]};
  return std::nullopt;
}

ExceptionCatalog frozen(const std::vector<std::string>& forms, const std::string& prefix) {
  ExceptionCatalog cat;
  cat.source = CatalogSource::Hardcoded;
  std::map<int, int> per_order;
  for (const auto& hex : forms) {
    std::string form = form_from_hex(hex);
    const int n = static_cast<unsigned char>(form[0]);
    const int i = ++per_order[n];
    cat.classes.push_back({prefix + (prefix == "derived-exc" ? std::to_string(n) : std::string{}) + "-" + std::to_string(i),
                           std::move(form)});
  }
  return cat;
}

}  // namespace

// ---------------------------------------------------------------------------
// Constructors

Digraph rotational_tournament5() {
  Digraph d(5);
  for (int i = 0; i < 5; ++i) {
    d.add_arc(i, (i + 1) % 5);
    d.add_arc(i, (i + 2) % 5);
  }
  return d;
}

Digraph tournament_t7() {
  Digraph d(7);
  for (int i = 0; i < 3; ++i) {
    d.add_arc(i, (i + 1) % 3);
    d.add_arc(3 + i, 3 + (i + 1) % 3);
    d.add_arc(3 + i, 6);
    d.add_arc(6, i);
    for (int j = 3; j < 6; ++j) d.add_arc(i, j);
  }
  return d;
}

Digraph paley7() {
  Digraph d(7);
  for (int i = 0; i < 7; ++i)
    for (int s : {1, 2, 4}) d.add_arc(i, (i + s) % 7);
  return d;
}

Digraph complete_digraph(int n) {
  if (n < 1) throw Error(Errc::BadParameter, "order must be positive");
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) d.add_arc(u, v);
  return d;
}

Digraph paley(int q) {
  if (!is_prime(q) || q % 4 != 3) throw Error(Errc::BadParameter, "paley(q) needs a prime q = 3 mod 4");
  std::vector<bool> residue(static_cast<std::size_t>(q), false);
  for (int x = 1; x < q; ++x) residue[static_cast<std::size_t>(x * x % q)] = true;
  Digraph d(q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      if (i != j && residue[static_cast<std::size_t>(((i - j) % q + q) % q)]) d.add_arc(i, j);
  return d;
}

Digraph bkr(int k, int r) {
  if (k < 1 || r < 1) throw Error(Errc::BadParameter, "bkr needs k, r >= 1");
  const int u = k * r;
  if (u > 30) throw Error(Errc::BadParameter, "bkr: k*r too large");
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      subsets.push_back(cur);
      return;
    }
    for (int x = from; x < u; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  if (subsets.size() > 100000) throw Error(Errc::BadParameter, "bkr: too many subsets");
  Digraph d(u + static_cast<int>(subsets.size()));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const int v = u + static_cast<int>(i);
    for (int x = 0; x < u; ++x) {
      if (std::binary_search(subsets[i].begin(), subsets[i].end(), x))
        d.add_arc(v, x);
      else
        d.add_arc(x, v);
    }
  }
  return d;
}

Digraph transitive_tournament(int n) {
  if (n < 1) throw Error(Errc::BadParameter, "order must be positive");
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) d.add_arc(u, v);
  return d;
}

Digraph directed_cycle(int n) {
  if (n < 2) throw Error(Errc::BadParameter, "cycle needs at least 2 vertices");
  Digraph d(n);
  for (int i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
  return d;
}

Digraph build(const std::string& name) {
  static const std::regex one(R"((paley|transitive|cycle)\((\d+)\))");
  static const std::regex two(R"(bkr\((\d+),(\d+)\))");
  std::smatch m;
  if (name == "rt5") return rotational_tournament5();
  if (name == "t7") return tournament_t7();
  if (name == "p7") return paley7();
  if (name == "cd3") return complete_digraph(3);
  if (name == "w4") {
    Digraph d(4);
    for (int i = 0; i < 3; ++i) {
      d.add_arc(i, (i + 1) % 3);
      d.add_arc(i, 3);
      d.add_arc(3, i);
    }
    return d;
  }
  if (std::regex_match(name, m, one)) {
    const int x = std::stoi(m[2]);
    if (m[1] == "paley") return paley(x);
    if (m[1] == "transitive") return transitive_tournament(x);
    return directed_cycle(x);
  }
  if (std::regex_match(name, m, two)) return bkr(std::stoi(m[1]), std::stoi(m[2]));
  for (const auto* cat : {&exceptions_delta2(), &unbalanceable6()})
    for (const auto& c : cat->classes)
      if (c.name == name) return digraph_from_form(c.form);
  throw Error(Errc::BadParameter, "unknown digraph name '" + name + "'");
}

// ---------------------------------------------------------------------------
// Recognizers

bool is_G1_witness(const Digraph& d, const G1Witness& w) {
  const int n = d.order();
  if (w.w < 0 || w.w >= n || w.z < 0 || w.z >= n || w.z == w.w) return false;
  for (int c : w.cycle)
    if (c < 0 || c >= n) return false;
  const VertexSet c = VertexSet::from_range(n, w.cycle);
  if (d.out(w.w) != c || !exact_short_cycle(d, c)) return false;
  VertexSet beyond = d.out_of(c);
  beyond -= c;
  return beyond == VertexSet(n, {w.z});
}

std::optional<G1Witness> recognize_G1(const Digraph& d) {
  const int n = d.order();
  for (int w = 0; w < n; ++w) {
    const VertexSet& c = d.out(w);
    if (c.size() != 2 && c.size() != 3) continue;
    auto cyc = exact_short_cycle(d, c);
    if (!cyc) continue;
    VertexSet beyond = d.out_of(c);
    beyond -= c;
    if (beyond.size() != 1 || beyond.first() == w) continue;
    return G1Witness{w, *cyc, beyond.first()};
  }
  return std::nullopt;
}

std::optional<G1Witness> recognize_G1_tournament(const Digraph& t) {
  const int n = t.order();
  if (n < 6 || !is_tournament(t) || t.min_out_degree() != 2) return std::nullopt;
  for (int w = 0; w < n; ++w) {
    const VertexSet& c = t.out(w);
    if (c.size() != 3) continue;
    auto cyc = exact_short_cycle(t, c);
    if (!cyc) continue;
    for (int z = 0; z < n; ++z) {
      if (z == w || c.contains(z)) continue;
      // T' = T - V(C): w is in-dominating in T', C => z, T' - z => C, d+(z) >= 2 in T'.
      VertexSet rest = t.all() - c;
      bool ok = t.dominates(c, VertexSet(n, {z}));
      for (int x : rest) {
        if (!ok) break;
        if (x != w && !t.has_arc(x, w)) ok = false;
        if (x != z && !t.dominates(VertexSet(n, {x}), c)) ok = false;
      }
      if (ok && (t.out(z) & rest).size() >= 2) return G1Witness{w, *cyc, z};
    }
  }
  return std::nullopt;
}

bool is_G2_witness(const Digraph& d, const G2Witness& w) {
  const int n = d.order();
  if (w.z < 0 || w.z >= n) return false;
  for (const auto* cyc : {&w.cycle, &w.cycle2})
    for (int v : *cyc)
      if (v < 0 || v >= n) return false;
  const VertexSet c = VertexSet::from_range(n, w.cycle);
  const VertexSet c2 = VertexSet::from_range(n, w.cycle2);
  const VertexSet zs(n, {w.z});
  const VertexSet s = terminal_component(d);
  if (s != (c | c2 | zs) || c.size() + c2.size() + 1 != s.size()) return false;
  if (!exact_short_cycle(d, c) || !exact_short_cycle(d, c2)) return false;
  if (d.out(w.z) != c) return false;
  for (int x : c)
    if ((d.out(x) - c) != c2) return false;
  for (int x : c2)
    if ((d.out(x) - c2) != zs) return false;
  return true;
}

std::optional<G2Witness> recognize_G2(const Digraph& d) {
  const VertexSet s = terminal_component(d);
  if (s.size() < 5 || s.size() > 7) return std::nullopt;
  for (int z : s) {
    const VertexSet& c = d.out(z);
    auto cyc = exact_short_cycle(d, c);
    if (!cyc) continue;
    VertexSet c2 = s - c;
    c2.erase(z);
    auto cyc2 = exact_short_cycle(d, c2);
    if (!cyc2) continue;
    G2Witness w{*cyc, *cyc2, z};
    if (is_G2_witness(d, w)) return w;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Catalogs

std::optional<std::string> ExceptionCatalog::find_form(const std::string& form) const {
  for (const auto& c : classes)
    if (c.form == form) return c.name;
  return std::nullopt;
}

std::optional<std::string> ExceptionCatalog::find(const Digraph& d) const {
  if (d.order() > kMaxCanonicalOrder) return std::nullopt;
  bool any = false;
  for (const auto& c : classes)
    if (static_cast<unsigned char>(c.form[0]) == d.order()) any = true;
  if (!any) return std::nullopt;
  return find_form(canonical_form(d));
}

std::vector<std::string> ExceptionCatalog::forms() const {
  std::vector<std::string> f;
  for (const auto& c : classes) f.push_back(c.form);
  return f;
}

ExceptionCatalog derive_exceptions_delta2(int nmax, int threads) {
  if (nmax > 6) throw Error(Errc::SearchSpaceTooLarge, "derive_exceptions_delta2 supports nmax <= 6");
  ExceptionCatalog cat;
  cat.source = CatalogSource::Derived;
  for (int n = 3; n <= nmax; ++n) {
    oracle::EnumerationSpec spec;
    spec.n = n;
    spec.cls = oracle::GraphClass::Semicomplete;
    spec.dedup_canonical = true;
    spec.predicate = [](const oracle::SmallDigraph& g) {
      if (g.min_out_degree() < 2 || !mask_strong(g)) return false;
      if (oracle::mask_two_out_colourable(g.out.data(), g.n)) return false;
      const Digraph d = g.to_digraph();
      return !recognize_G1(d) && !recognize_G2(d);
    };
    const auto stats = oracle::enumerate(spec, {}, threads);
    int i = 0;
    for (const auto& f : stats.classes)
      cat.classes.push_back({"derived-exc" + std::to_string(n) + "-" + std::to_string(++i), f});
  }
  return cat;
}

ExceptionCatalog derive_unbalanceable6(int threads) {
  oracle::EnumerationSpec spec;
  spec.n = 6;
  spec.cls = oracle::GraphClass::Semicomplete;
  spec.dedup_canonical = true;
  spec.predicate = [](const oracle::SmallDigraph& g) {
    return g.min_out_degree() >= 2 && oracle::mask_colourability(g.out.data(), g.n) == 1U;
  };
  const auto stats = oracle::enumerate(spec, {}, threads);
  ExceptionCatalog cat;
  cat.source = CatalogSource::Derived;
  int i = 0;
  for (const auto& f : stats.classes) cat.classes.push_back({"derived-unbal6-" + std::to_string(++i), f});
  return cat;
}

const ExceptionCatalog& exceptions_delta2() {
  static const ExceptionCatalog cat = frozen(detail::kExceptionForms, "derived-exc");
  return cat;
}

const ExceptionCatalog& unbalanceable6() {
  static const ExceptionCatalog cat = frozen(detail::kUnbalanceableForms, "derived-unbal6");
  return cat;
}

void save_catalog(const ExceptionCatalog& cat, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream index(dir / "index.tsv");
  if (!index) throw Error(Errc::InvalidArgument, "cannot write " + (dir / "index.tsv").string());
  index << "# name\tn\tarcs\thash\n";
  for (const auto& c : cat.classes) {
    const Digraph d = digraph_from_form(c.form);
    std::ofstream f(dir / (c.name + ".txt"));
    write_digraph(f, d);
    index << c.name << '\t' << d.order() << '\t' << d.arc_count() << '\t' << form_hash(c.form) << '\n';
  }
}

ExceptionCatalog load_catalog(const std::filesystem::path& dir) {
  std::ifstream index(dir / "index.tsv");
  if (!index) throw Error(Errc::Parse, "missing " + (dir / "index.tsv").string());
  ExceptionCatalog cat;
  cat.source = CatalogSource::Loaded;
  std::string line;
  while (std::getline(index, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string name, hash;
    int n = 0;
    std::size_t arcs = 0;
    if (!(row >> name >> n >> arcs >> hash)) throw Error(Errc::Parse, "bad manifest row: " + line);
    std::ifstream f(dir / (name + ".txt"));
    if (!f) throw Error(Errc::Parse, "missing class file for " + name);
    const Digraph d = read_digraph(f);
    const std::string form = canonical_form(d);
    if (d.order() != n || d.arc_count() != arcs || form_hash(form) != hash)
      throw Error(Errc::Parse, "manifest mismatch for " + name);
    cat.classes.push_back({name, form});
  }
  return cat;
}

std::optional<std::string> terminal_exception_name(const Digraph& s) {
  const int n = s.order();
  if (n < 3 || n > 7) return std::nullopt;
  const std::string form = canonical_form(s);
  static const std::vector<std::pair<std::string, std::string>> named = {
      {"cd3", canonical_form(complete_digraph(3))},
      {"rt5", canonical_form(rotational_tournament5())},
      {"t7", canonical_form(tournament_t7())},
      {"p7", canonical_form(paley7())},
  };
  for (const auto& [name, f] : named)
    if (f == form) return name;
  return exceptions_delta2().find_form(form);
}

}  // namespace outcol
