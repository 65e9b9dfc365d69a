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

#include "fqm/cost.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "fqm/errors.h"
#include "fqm/schemes.h"

namespace fqm {

namespace {

int64_t diff(const EnumerationScheme &f, const Edge &e) {
    return std::abs(static_cast<int64_t>(f[e.a]) - static_cast<int64_t>(f[e.b]));
}

void require_edges(const InteractionGraph &g) {
    if (g.num_edges() == 0) throw Error(ErrorKind::kUndefined, "average over an empty edge set is undefined");
}

}  // namespace

int64_t edgesum(const InteractionGraph &g, const EnumerationScheme &f) {
    check_scheme(g, f);
    int64_t s = 0;
    for (const auto &e : g.edges()) s += diff(f, e);
    return s;
}

double p_power_sum(const InteractionGraph &g, const EnumerationScheme &f, double p) {
    if (!(p > 0)) throw Error(ErrorKind::kPrecondition, "p must be positive");
    check_scheme(g, f);
    long double s = 0;
    for (const auto &e : g.edges()) s += std::pow(static_cast<long double>(diff(f, e)), p);
    return static_cast<double>(s);
}

double p_sum(const InteractionGraph &g, const EnumerationScheme &f, double p) {
    if (p == 1.0) return static_cast<double>(edgesum(g, f));
    return std::pow(p_power_sum(g, f, p), 1.0 / p);
}

int64_t bandwidth(const InteractionGraph &g, const EnumerationScheme &f) {
    check_scheme(g, f);
    int64_t b = 0;
    for (const auto &e : g.edges()) b = std::max(b, diff(f, e));
    return b;
}

int64_t boundary_edgesum(const EnumerationScheme &f, size_t N) {
    if (!is_hv_ordered(f, N)) {
        throw Error(ErrorKind::kPrecondition, "boundary edgesum needs a horizontally and vertically ordered scheme");
    }
    int64_t s = 0;
    for (size_t k = 0; k < N; k++) {
        s += static_cast<int64_t>(f[(N - 1) * N + k]) + static_cast<int64_t>(f[k * N + N - 1]);
        s -= static_cast<int64_t>(f[k * N]) + static_cast<int64_t>(f[k]);
    }
    return s;
}

double apv(const InteractionGraph &g, const EnumerationScheme &f) {
    require_edges(g);
    return static_cast<double>(edgesum(g, f)) / static_cast<double>(g.num_edges()) + 1.0;
}

int64_t mpv(const InteractionGraph &g, const EnumerationScheme &f) {
    require_edges(g);
    return bandwidth(g, f) + 1;
}

int64_t measurement_depth(std::vector<Interval> terms) {
    // +1 at each start, -1 just past each end; starts sort before ends at equal keys.
    std::vector<std::pair<size_t, int>> events;
    events.reserve(2 * terms.size());
    for (auto [lo, hi] : terms) {
        if (lo > hi) std::swap(lo, hi);
        events.emplace_back(2 * lo, 1);
        events.emplace_back(2 * hi + 1, -1);
    }
    std::sort(events.begin(), events.end());
    int64_t cur = 0, best = 0;
    for (auto [pos, d] : events) {
        cur += d;
        best = std::max(best, cur);
    }
    return best;
}

std::vector<Interval> hopping_intervals(const InteractionGraph &g, const EnumerationScheme &f) {
    check_scheme(g, f);
    std::vector<Interval> out;
    out.reserve(g.num_edges());
    for (const auto &e : g.edges()) out.emplace_back(std::min(f[e.a], f[e.b]), std::max(f[e.a], f[e.b]));
    return out;
}

int64_t measurement_depth(const InteractionGraph &g, const EnumerationScheme &f) {
    return measurement_depth(hopping_intervals(g, f));
}

CostReport cost_report(const InteractionGraph &g, const EnumerationScheme &f, double p, bool with_depth) {
    require_edges(g);
    CostReport r;
    r.edgesum = edgesum(g, f);
    r.p = p;
    r.p_sum = p_sum(g, f, p);
    r.bandwidth = bandwidth(g, f);
    r.term_count = static_cast<int64_t>(g.num_edges());
    r.apv = static_cast<double>(r.edgesum) / static_cast<double>(r.term_count) + 1.0;
    r.mpv = r.bandwidth + 1;
    if (with_depth) r.measurement_depth = measurement_depth(g, f);
    return r;
}

Formula parse_formula(const std::string &id) {
    static const std::map<std::string, Formula> kIds = {
        {"s_edgesum", Formula::kSEdgesum},
        {"z_edgesum", Formula::kZEdgesum},
        {"md_edgesum", Formula::kMDEdgesum},
        {"cellular_z", Formula::kCellularZ},
        {"cellular_s", Formula::kCellularS},
        {"cellular_zprime", Formula::kCellularZPrime},
        {"s_apv", Formula::kSApv},
        {"md_apv_asymptotic", Formula::kMDApvAsymptotic},
        {"aux_apv_asymptotic", Formula::kAuxApvAsymptotic},
        {"aux_apv_table", Formula::kAuxApvTable},
        {"aux_apv_at_029", Formula::kAuxApvAt029},
    };
    auto it = kIds.find(id);
    if (it == kIds.end()) throw Error(ErrorKind::kUnknownFormula, "unknown formula '" + id + "'");
    return it->second;
}

int64_t md_edgesum_formula(int64_t N, int64_t x) {
    // Three times the value keeps the two-thirds terms integral.
    int64_t t = 3 * N * N * N - 3 * x * N * N + 6 * x * x * N - 2 * x * x * x + 3 * N * N - 3 * x * N - 6 * N + 2 * x;
    return t / 3;
}

double closed_form(Formula id, const FormulaParams &p) {
    const int64_t N = p.N, x = p.x, n = p.n;
    switch (id) {
        case Formula::kSEdgesum:
        case Formula::kZEdgesum:
            return static_cast<double>(N * N * N - N);
        case Formula::kMDEdgesum:
            return static_cast<double>(md_edgesum_formula(N, x));
        case Formula::kCellularZ: {
            int64_t M = N * n;
            return static_cast<double>(M * M * M - M - N * (N - 1) * (n - 1) - n * N * N * (n - 1) * (N - 1));
        }
        case Formula::kCellularS: {
            int64_t M = N * n;
            int64_t s = M * M * M - M - N * (N - 1) * (n - 1);
            for (int64_t k = 0; k < N; k++) {
                int64_t lo = n % 2 == 0 ? k * n + 2 : k * n + 1;
                int64_t hi = n % 2 == 0 ? (k + 1) * n : (k + 1) * n - 1;
                for (int64_t i = lo; i <= hi; i++) s -= 2 * i - 1;
            }
            return static_cast<double>(s);
        }
        case Formula::kCellularZPrime: {
            int64_t common = N * N * N * n * n + n * n * n * N * N - n * n * N * N - n * n * N + 2 * n * N + n * n - 2 * N;
            if (n % 2 == 0) return static_cast<double>(common - 2 * n * N * N + 2 * N * N - n);
            return static_cast<double>(common - n * N * N + N * N - 2 * n + 1);
        }
        case Formula::kSApv:
            return 0.5 * static_cast<double>(N) + 1.5;
        case Formula::kMDApvAsymptotic:
            return 0.43 * static_cast<double>(N) + 1.78;
        case Formula::kAuxApvAsymptotic:
            return 0.31 * static_cast<double>(N) + 1.68;
        case Formula::kAuxApvTable:
            return 0.31 * static_cast<double>(N) + 1.78;
        case Formula::kAuxApvAt029:
            return 0.33 * static_cast<double>(N) + 1.77;
    }
    throw Error(ErrorKind::kUnknownFormula, "unknown formula");
}

double closed_form(const std::string &id, const FormulaParams &params) {
    return closed_form(parse_formula(id), params);
}

}  // namespace fqm
