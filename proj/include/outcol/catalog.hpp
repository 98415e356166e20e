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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "outcol/digraph.hpp"
#include "outcol/isomorphism.hpp"

namespace outcol {

/// Deterministic constructors. Accepted names: rt5, t7, p7, cd3, w4,
/// paley(q), bkr(k,r), transitive(n), cycle(n), and the catalog labels
/// derived-exc<n>-<i>, derived-unbal6-<i>.
Digraph build(const std::string& name);

Digraph rotational_tournament5();
Digraph tournament_t7();
Digraph paley7();
Digraph complete_digraph(int n);
Digraph paley(int q);
/// Bipartite tournament without an r-out-colouring and with minimum out-degree k.
/// Vertices 0..kr-1 form U; the k-subsets of U follow in lexicographic order.
Digraph bkr(int k, int r);
Digraph transitive_tournament(int n);
Digraph directed_cycle(int n);

/// C is a 2-cycle or an induced directed 3-cycle, N+(w) = V(C) and N+(V(C)) \ V(C) = {z}.
struct G1Witness {
  int w = -1;
  std::vector<int> cycle;
  int z = -1;
};

/// The terminal component is exactly C u C' u {z} with C => C' => z => C.
struct G2Witness {
  std::vector<int> cycle;
  std::vector<int> cycle2;
  int z = -1;
};

/// Smallest w (then smallest z) carrying a witness.
std::optional<G1Witness> recognize_G1(const Digraph& d);
/// Tournament form: T' = T - V(C) has the in-dominating vertex w, C => z, T' - z => C.
std::optional<G1Witness> recognize_G1_tournament(const Digraph& t);
std::optional<G2Witness> recognize_G2(const Digraph& d);

bool is_G1_witness(const Digraph& d, const G1Witness& w);
bool is_G2_witness(const Digraph& d, const G2Witness& w);

enum class CatalogSource { Hardcoded, Derived, Loaded };

struct CatalogClass {
  std::string name;
  std::string form;  // canonical form
};

struct ExceptionCatalog {
  std::vector<CatalogClass> classes;
  CatalogSource source = CatalogSource::Hardcoded;

  /// Label of the class isomorphic to `d`, if any.
  std::optional<std::string> find(const Digraph& d) const;
  std::optional<std::string> find_form(const std::string& form) const;
  std::vector<std::string> forms() const;
};

/**
 * Strong semicomplete digraphs on 3..nmax vertices with minimum out-degree 2,
 * no 2-out-colouring, and neither G1 nor G2 structure. Classes of order n are
 * labelled derived-exc<n>-<i> in canonical-form order.
 */
ExceptionCatalog derive_exceptions_delta2(int nmax, int threads = 1);

/// Semicomplete digraphs on 6 vertices with a 2-out-colouring but no balanced one.
ExceptionCatalog derive_unbalanceable6(int threads = 1);

/// Frozen results of the two derivations above (nmax = 5).
const ExceptionCatalog& exceptions_delta2();
const ExceptionCatalog& unbalanceable6();

/// Writes <label>.txt (canonical digraph) per class and an index.tsv manifest
/// with columns name, n, arcs, hash.
void save_catalog(const ExceptionCatalog& cat, const std::filesystem::path& dir);
ExceptionCatalog load_catalog(const std::filesystem::path& dir);

/// Named terminal exception (cd3, rt5, t7, p7) or derived-exc label matching `s`.
std::optional<std::string> terminal_exception_name(const Digraph& s);

}  // namespace outcol
