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

// Costs are compared as sum |df|^p; best_cost reports the rooted p-sum.
struct SearchResult {
    EnumerationScheme best_scheme;
    double best_cost = 0.0;
    std::string method;
    int64_t evaluations = 0;
    uint64_t seed = 0;
};

constexpr size_t kBruteForceCap = 10;

// Exhaustive branch and bound. Among optimal schemes returns the
// lexicographically smallest value vector.
SearchResult brute_force_min(const InteractionGraph &g, double p = 1.0);

struct AnnealParams {
    int64_t iterations = 1000000;
    double t_start = 10.0;
    double t_end = 0.1;
};

// Simulated annealing over value transpositions with geometric cooling.
SearchResult anneal(const InteractionGraph &g, double p, const AnnealParams &params, uint64_t seed,
                    std::optional<EnumerationScheme> init = std::nullopt);

// Swap hill climbing alternated with hv_normalize until neither improves.
SearchResult lattice_local_search(const InteractionGraph &g, const EnumerationScheme &init, double p = 1.0);

}  // namespace fqm
