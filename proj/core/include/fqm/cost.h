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
#include <utility>
#include <vector>

#include "fqm/graph.h"

namespace fqm {

int64_t edgesum(const InteractionGraph &g, const EnumerationScheme &f);
// (sum |df|^p)^(1/p).
double p_sum(const InteractionGraph &g, const EnumerationScheme &f, double p);
// sum |df|^p without the root.
double p_power_sum(const InteractionGraph &g, const EnumerationScheme &f, double p);
int64_t bandwidth(const InteractionGraph &g, const EnumerationScheme &f);
// Edgesum of a horizontally and vertically ordered N x N scheme from its
// border alone: bottom + right - left - top.
int64_t boundary_edgesum(const EnumerationScheme &f, size_t N);

// Hopping strings only; quartic terms are not counted.
double apv(const InteractionGraph &g, const EnumerationScheme &f);
int64_t mpv(const InteractionGraph &g, const EnumerationScheme &f);

using Interval = std::pair<size_t, size_t>;
// Minimum number of groups of pairwise disjoint closed intervals, which for
// intervals is the maximum number covering any point.
int64_t measurement_depth(std::vector<Interval> terms);
std::vector<Interval> hopping_intervals(const InteractionGraph &g, const EnumerationScheme &f);
int64_t measurement_depth(const InteractionGraph &g, const EnumerationScheme &f);

struct CostReport {
    int64_t edgesum = 0;
    double p = 1.0;
    double p_sum = 0.0;
    int64_t bandwidth = 0;
    double apv = 0.0;
    int64_t mpv = 0;
    std::optional<int64_t> measurement_depth;
    int64_t term_count = 0;
};

CostReport cost_report(const InteractionGraph &g, const EnumerationScheme &f, double p = 1.0,
                       bool with_depth = true);

enum class Formula {
    kSEdgesum,           // N^3 - N
    kZEdgesum,           // N^3 - N
    kMDEdgesum,          // (N, x)
    kCellularZ,          // (n, N)
    kCellularS,          // (n, N)
    kCellularZPrime,     // (n, N), branches on parity of n
    kSApv,               // N/2 + 3/2
    kMDApvAsymptotic,    // 0.43N + 1.78
    kAuxApvAsymptotic,   // 0.31N + 1.68
    kAuxApvTable,        // 0.31N + 1.78, as tabulated
    kAuxApvAt029,        // 0.33N + 1.77
};

struct FormulaParams {
    int64_t N = 0;
    int64_t x = 0;
    int64_t n = 0;
};

Formula parse_formula(const std::string &id);
double closed_form(Formula id, const FormulaParams &params);
double closed_form(const std::string &id, const FormulaParams &params);
// Exact integer form of the Mitchison-Durbin edgesum.
int64_t md_edgesum_formula(int64_t N, int64_t x);

}  // namespace fqm
