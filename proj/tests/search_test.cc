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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "fqm/cost.h"
#include "fqm/errors.h"
#include "fqm/schemes.h"

using namespace fqm;

namespace {

// Plain enumeration of all n! schemes.
double exhaustive(const InteractionGraph &g, double p, std::vector<size_t> *argmin) {
    std::vector<size_t> f(g.num_modes());
    for (size_t i = 0; i < f.size(); i++) f[i] = i;
    double best = INFINITY;
    do {
        double c = p_power_sum(g, EnumerationScheme(f), p);
        if (c < best) {
            best = c;
            *argmin = f;
        }
    } while (std::next_permutation(f.begin(), f.end()));
    return best;
}

}  // namespace

TEST(BruteForce, KnownOptima) {
    EXPECT_DOUBLE_EQ(brute_force_min(square_lattice(2)).best_cost, 6.0);
    auto r3 = brute_force_min(square_lattice(3));
    EXPECT_DOUBLE_EQ(r3.best_cost, 24.0);
    EXPECT_EQ(edgesum(square_lattice(3), r3.best_scheme), 24);
    auto path = brute_force_min(path_graph(5));
    EXPECT_DOUBLE_EQ(path.best_cost, 4.0);
    EXPECT_EQ(path.best_scheme, EnumerationScheme({0, 1, 2, 3, 4}));
}

TEST(BruteForce, AgreesWithPlainEnumeration) {
    std::vector<InteractionGraph> graphs = {square_lattice(2), path_graph(6), cellular_lattice(2, 1)};
    graphs.push_back(InteractionGraph({"a", "b", "c", "d", "e", "f"}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {2, 5}}));
    for (const auto &g : graphs) {
        for (double p : {1.0, 2.0}) {
            std::vector<size_t> argmin;
            double want = exhaustive(g, p, &argmin);
            auto r = brute_force_min(g, p);
            ASSERT_NEAR(std::pow(r.best_cost, p), want, 1e-9);
            // First minimum in lexicographic order is the one returned.
            ASSERT_EQ(r.best_scheme.values(), argmin);
        }
    }
}

TEST(BruteForce, RefusesOverCap) {
    try {
        brute_force_min(square_lattice(4));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::kCapExceeded);
    }
}

TEST(Anneal, FindsSmallOptimum) {
    AnnealParams params;
    params.iterations = 50000;
    auto r = anneal(square_lattice(3), 1.0, params, 1);
    EXPECT_DOUBLE_EQ(r.best_cost, 24.0);
    EXPECT_DOUBLE_EQ(r.best_cost, static_cast<double>(edgesum(square_lattice(3), r.best_scheme)));
}

TEST(Anneal, BeatsSnakeOnTenByTen) {
    auto g = square_lattice(10);
    int wins = 0;
    for (uint64_t seed = 1; seed <= 10; seed++) {
        if (anneal(g, 1.0, AnnealParams{}, seed).best_cost <= 990.0) wins++;
    }
    EXPECT_GE(wins, 9);
}

TEST(Anneal, ReproducibleAndMonotone) {
    auto g = square_lattice(5);
    AnnealParams params;
    params.iterations = 5000;
    auto a = anneal(g, 2.0, params, 99), b = anneal(g, 2.0, params, 99);
    EXPECT_EQ(a.best_scheme, b.best_scheme);
    EXPECT_EQ(a.best_cost, b.best_cost);
    auto init = random_scheme(25, 4);
    EXPECT_LE(anneal(g, 1.0, params, 3, init).best_cost, static_cast<double>(edgesum(g, init)));
}

TEST(Anneal, ZeroIterationsReturnsInit) {
    auto g = square_lattice(4);
    auto init = random_scheme(16, 8);
    AnnealParams params;
    params.iterations = 0;
    auto r = anneal(g, 1.0, params, 5, init);
    EXPECT_EQ(r.best_scheme, init);
    EXPECT_THROW(anneal(g, 1.0, params, 5, z_pattern(3)), Error);
}

TEST(LocalSearch, MitchisonDurbinIsLocallyOptimal) {
    for (size_t N = 4; N <= 8; N++) {
        auto g = square_lattice(N);
        auto init = mitchison_durbin(N);
        auto r = lattice_local_search(g, init);
        EXPECT_DOUBLE_EQ(r.best_cost, static_cast<double>(edgesum(g, init))) << N;
    }
}

TEST(LocalSearch, NeverWorse) {
    auto g4 = square_lattice(4);
    auto init = random_scheme(16, 12);
    EXPECT_LE(lattice_local_search(g4, init).best_cost, static_cast<double>(edgesum(g4, init)));
    EXPECT_LE(lattice_local_search(square_lattice(6), s_pattern(6)).best_cost, 210.0);
    EXPECT_THROW(lattice_local_search(path_graph(4), EnumerationScheme({0, 1, 2, 3})), Error);
}
