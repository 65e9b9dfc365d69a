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

#include "fqm/search.h"

#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "fqm/cost.h"
#include "fqm/errors.h"
#include "fqm/schemes.h"

namespace fqm {

namespace {

struct Costing {
    double p;
    double operator()(int64_t d) const {
        d = d < 0 ? -d : d;
        return p == 1.0 ? static_cast<double>(d) : std::pow(static_cast<double>(d), p);
    }
};

std::vector<std::vector<size_t>> adjacency(const InteractionGraph &g) {
    std::vector<std::vector<size_t>> adj(g.num_modes());
    for (const auto &e : g.edges()) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    return adj;
}

double total(const InteractionGraph &g, const std::vector<size_t> &f, const Costing &cost) {
    double s = 0;
    for (const auto &e : g.edges()) s += cost(static_cast<int64_t>(f[e.a]) - static_cast<int64_t>(f[e.b]));
    return s;
}

double rooted(double power_sum, double p) { return p == 1.0 ? power_sum : std::pow(power_sum, 1.0 / p); }

// Cost change from exchanging the values of u and v.
double swap_delta(const std::vector<std::vector<size_t>> &adj, const std::vector<size_t> &f, size_t u, size_t v,
                  const Costing &cost) {
    auto fu = static_cast<int64_t>(f[u]), fv = static_cast<int64_t>(f[v]);
    double d = 0;
    for (size_t w : adj[u]) {
        if (w == v) continue;
        auto fw = static_cast<int64_t>(f[w]);
        d += cost(fv - fw) - cost(fu - fw);
    }
    for (size_t w : adj[v]) {
        if (w == u) continue;
        auto fw = static_cast<int64_t>(f[w]);
        d += cost(fu - fw) - cost(fv - fw);
    }
    return d;
}

uint64_t draw_below(std::mt19937_64 &rng, uint64_t bound) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

double draw_unit(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

class BranchAndBound {
  public:
    BranchAndBound(const InteractionGraph &g, double p)
        : n_(g.num_modes()), adj_(adjacency(g)), cost_(Costing{p}), f_(n_, kUnset), used_(n_, 0) {}

    void run() { descend(0, 0.0); }

    std::vector<size_t> best;
    double best_cost = std::numeric_limits<double>::infinity();
    int64_t leaves = 0;

  private:
    static constexpr size_t kUnset = SIZE_MAX;

    // Each edge with an unplaced end costs at least its distance to the
    // nearest free value, and at least 1.
    double bound(double partial) const {
        double b = partial;
        for (size_t v = 0; v < n_; v++) {
            for (size_t w : adj_[v]) {
                if (w < v) continue;
                bool pv = f_[v] != kUnset, pw = f_[w] != kUnset;
                if (pv && pw) continue;
                if (!pv && !pw) {
                    b += 1;
                    continue;
                }
                size_t fixed = pv ? f_[v] : f_[w];
                int64_t best_d = std::numeric_limits<int64_t>::max();
                for (size_t k = 0; k < n_; k++) {
                    if (!used_[k]) best_d = std::min(best_d, std::abs(static_cast<int64_t>(k) - static_cast<int64_t>(fixed)));
                }
                b += cost_(best_d);
            }
        }
        return b;
    }

    void descend(size_t v, double partial) {
        if (v == n_) {
            leaves++;
            if (partial < best_cost) {
                best_cost = partial;
                best = f_;
            }
            return;
        }
        for (size_t val = 0; val < n_; val++) {
            if (used_[val]) continue;
            f_[v] = val;
            used_[val] = 1;
            double add = 0;
            for (size_t w : adj_[v]) {
                if (f_[w] != kUnset && w != v) add += cost_(static_cast<int64_t>(val) - static_cast<int64_t>(f_[w]));
            }
            // Ties are pruned so the first optimum found, the lexicographically smallest, is kept.
            if (bound(partial + add) < best_cost) descend(v + 1, partial + add);
            used_[val] = 0;
            f_[v] = kUnset;
        }
    }

    size_t n_;
    std::vector<std::vector<size_t>> adj_;
    Costing cost_;
    std::vector<size_t> f_;
    std::vector<char> used_;
};

}  // namespace

SearchResult brute_force_min(const InteractionGraph &g, double p) {
    if (!(p > 0)) throw Error(ErrorKind::kPrecondition, "p must be positive");
    if (g.num_modes() > kBruteForceCap) {
        throw Error(ErrorKind::kCapExceeded, "brute force is capped at " + std::to_string(kBruteForceCap) +
                                                 " modes, graph has " + std::to_string(g.num_modes()));
    }
    SearchResult r;
    r.method = "brute";
    if (g.num_modes() == 0) {
        r.best_scheme = EnumerationScheme(std::vector<size_t>{});
        return r;
    }
    BranchAndBound bb(g, p);
    bb.run();
    r.best_scheme = EnumerationScheme(bb.best);
    r.best_cost = rooted(bb.best_cost, p);
    r.evaluations = bb.leaves;
    return r;
}

SearchResult anneal(const InteractionGraph &g, double p, const AnnealParams &params, uint64_t seed,
                    std::optional<EnumerationScheme> init) {
    if (!(p > 0)) throw Error(ErrorKind::kPrecondition, "p must be positive");
    if (params.iterations < 0 || !(params.t_start > 0) || !(params.t_end > 0)) {
        throw Error(ErrorKind::kPrecondition, "anneal needs iterations >= 0 and positive temperatures");
    }
    Costing cost{p};
    std::mt19937_64 rng(seed);
    std::vector<size_t> f = init ? init->values() : random_scheme(g.num_modes(), seed).values();
    if (init) check_scheme(g, *init);
    auto adj = adjacency(g);
    double cur = total(g, f, cost);
    double best_cost = cur;
    std::vector<size_t> best = f;
    const size_t n = f.size();
    const double ratio = params.t_end / params.t_start;
    for (int64_t k = 0; k < params.iterations && n > 1; k++) {
        double t = params.t_start * std::pow(ratio, static_cast<double>(k) / static_cast<double>(params.iterations));
        size_t u = draw_below(rng, n);
        size_t v = draw_below(rng, n - 1);
        if (v >= u) v++;
        double d = swap_delta(adj, f, u, v, cost);
        if (d <= 0 || draw_unit(rng) < std::exp(-d / t)) {
            std::swap(f[u], f[v]);
            cur += d;
            if (cur < best_cost - 1e-9) {
                best_cost = cur;
                best = f;
            }
        }
    }
    SearchResult r;
    r.best_scheme = EnumerationScheme(best);
    // Recompute rather than trust the running sum.
    r.best_cost = rooted(total(g, best, cost), p);
    r.method = "anneal";
    r.evaluations = params.iterations;
    r.seed = seed;
    return r;
}

SearchResult lattice_local_search(const InteractionGraph &g, const EnumerationScheme &init, double p) {
    if (!(p > 0)) throw Error(ErrorKind::kPrecondition, "p must be positive");
    size_t N = require_square(g);
    check_scheme(g, init);
    Costing cost{p};
    auto adj = adjacency(g);
    std::vector<size_t> f = init.values();
    double cur = total(g, f, cost);
    int64_t evals = 0;
    for (bool improved = true; improved;) {
        improved = false;
        for (size_t u = 0; u < f.size(); u++) {
            for (size_t v = u + 1; v < f.size(); v++) {
                evals++;
                double d = swap_delta(adj, f, u, v, cost);
                if (d < -1e-9) {
                    std::swap(f[u], f[v]);
                    cur += d;
                    improved = true;
                }
            }
        }
        auto normalized = hv_normalize(EnumerationScheme(f), N).values();
        double c = total(g, normalized, cost);
        evals++;
        if (c < cur - 1e-9) {
            f = std::move(normalized);
            cur = c;
            improved = true;
        }
    }
    SearchResult r;
    r.best_scheme = EnumerationScheme(f);
    r.best_cost = rooted(total(g, f, cost), p);
    r.method = "local";
    r.evaluations = evals;
    return r;
}

}  // namespace fqm
