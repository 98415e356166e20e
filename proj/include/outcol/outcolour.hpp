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

#include <optional>
#include <string>
#include <vector>

#include "outcol/catalog.hpp"
#include "outcol/digraph.hpp"

namespace outcol {

enum class CertificateKind { LowOutDegree, TerminalIs, InG1, InG2, InUnbalanceable, Exhaustive };

const char* certificate_kind_name(CertificateKind kind) noexcept;

/// Why no (balanced) 2-out-colouring exists.
struct Certificate {
  CertificateKind kind = CertificateKind::LowOutDegree;
  int vertex = -1;         // LowOutDegree
  std::string class_name;  // TerminalIs, InUnbalanceable
  std::optional<G1Witness> g1;
  std::optional<G2Witness> g2;
  /// Exhaustive only: the vertices (of the input) on which the oracle failed.
  std::vector<int> component;
};

/// Re-checks a certificate against `d` (isomorphism, recognizer or oracle).
bool validate_certificate(const Digraph& d, const Certificate& c);

/// Counters describing how a colouring was obtained.
struct SolveDiagnostics {
  int candidates_tried = 0;
  int arcs_stripped = 0;
  /// A proof candidate failed and the small-set search found a colouring.
  int small_set_fallbacks = 0;
  /// A proof branch ended without a candidate or a valid certificate.
  int proof_gaps = 0;
  /// Small-set searches run while lifting a colouring over a re-added arc.
  int lift_searches = 0;
  /// Both earlier tiers failed and exhaustive search found a colouring.
  int oracle_fallbacks = 0;
  std::vector<std::string> branches;

  bool fallback_used() const noexcept { return oracle_fallbacks > 0; }
};

struct SolveOutcome {
  std::optional<Colouring> colouring;
  std::optional<Certificate> certificate;
  SolveDiagnostics diagnostics;

  bool colourable() const noexcept { return colouring.has_value(); }
};

/// Strong tournament with minimum out-degree 2.
SolveOutcome solve_tournament_d2(const Digraph& t);
/// Strong tournament with minimum out-degree at least 3.
SolveOutcome solve_tournament_d3(const Digraph& t);
/// Any semicomplete digraph. Throws NotSemicomplete.
SolveOutcome solve_semicomplete(const Digraph& d);

/// Counters of a rebalance run.
struct RebalanceStats {
  int moves = 0;
  int proof_exchanges = 0;
  int generic_steps = 0;
};

struct RebalanceOutcome {
  std::optional<Colouring> colouring;
  std::optional<Certificate> certificate;  // InUnbalanceable
  RebalanceStats stats;
};

/// Turns a 2-out-colouring of a semicomplete digraph into a balanced one.
/// Throws InputNotValidColouring, NotSemicomplete.
RebalanceOutcome rebalance(const Digraph& d, const Colouring& c);

/// Throws PreconditionViolated unless d is semicomplete with minimum out-degree 2.
Colouring three_out_colouring(const Digraph& d);

struct TwoOutRegularOutcome {
  std::optional<Colouring> colouring;
  /// Odd cycle of G_D when no colouring exists.
  std::vector<int> odd_cycle;
};

/// Throws NotTwoOutRegular.
TwoOutRegularOutcome solve_2outregular(const Digraph& d);

}  // namespace outcol
