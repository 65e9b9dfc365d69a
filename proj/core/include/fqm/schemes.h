// Copyright 2026 The fqmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fqm/graph.h"

namespace fqm {

// All lattice schemes index vertices row-major: vertex r*N + c.

EnumerationScheme z_pattern(size_t N);
EnumerationScheme s_pattern(size_t N);
// Anti-diagonals in ascending row+col, ascending row within a diagonal.
EnumerationScheme diagonal_pattern(size_t N);

size_t optimal_x_md(size_t N);
// Edgesum-optimal pattern with corner regions of size x.
EnumerationScheme mitchison_durbin(size_t N, std::optional<size_t> x = std::nullopt);

enum class CellularVariant { kZPrime, kSPrime, kZ, kS };
CellularVariant parse_cellular_variant(const std::string &name);
EnumerationScheme cellular_pattern(size_t n, size_t N, CellularVariant variant);

EnumerationScheme random_scheme(size_t num_modes, uint64_t seed);
inline EnumerationScheme random_scheme(const InteractionGraph &g, uint64_t seed) {
    return random_scheme(g.num_modes(), seed);
}

// Sorts each row, then each column. Never increases any p-sum.
EnumerationScheme hv_normalize(const EnumerationScheme &f, size_t N);
bool is_hv_ordered(const EnumerationScheme &f, size_t N);

// Side of a square lattice graph; throws kGeometry otherwise.
size_t require_square(const InteractionGraph &g);

}  // namespace fqm
