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

#include <cstdint>
#include <string>
#include <vector>

#include "outcol/digraph.hpp"

namespace outcol {

/// Largest order accepted by the canonical labelling routines.
inline constexpr int kMaxCanonicalOrder = 16;

/// canonical_labelling(d)[i] is the vertex of d placed at position i.
std::vector<int> canonical_labelling(const Digraph& d);

/// Byte string: the order followed by the row-major adjacency matrix of the
/// canonically relabelled digraph, one bit per entry.
std::string canonical_form(const Digraph& d);

/// The relabelled digraph whose adjacency matrix canonical_form encodes.
Digraph canonical_digraph(const Digraph& d);

/// Inverse of canonical_form.
Digraph digraph_from_form(const std::string& form);

bool is_isomorphic(const Digraph& a, const Digraph& b);

/// Lower-case hex encoding of a canonical form and its inverse.
std::string form_to_hex(const std::string& form);
std::string form_from_hex(const std::string& hex);

/// 64-bit FNV-1a of a byte string, printed as 16 hex digits.
std::string form_hash(const std::string& form);

}  // namespace outcol
