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

#include "fqm/pauli.h"

#include <gtest/gtest.h>

#include "fqm/errors.h"
#include "oracle.h"

using fqm::PauliString;

namespace {

PauliString P(const char *text, size_t n) { return PauliString::parse(text, n); }

}  // namespace

TEST(Pauli, XTimesXIsIdentity) {
    auto r = multiply(P("X0", 1), P("X0", 1));
    EXPECT_TRUE(r.is_identity_pattern());
    EXPECT_EQ(r.phase(), 0);
}

TEST(Pauli, XTimesZIsMinusISigmaY) {
    auto r = multiply(P("X0", 1), P("Z0", 1));
    EXPECT_EQ(r.factor(0), 'Y');
    EXPECT_EQ(r.phase(), 3);
}

TEST(Pauli, ThreeQubitProductMatchesDense) {
    auto a = P("Z0 Z1 X2", 3), b = P("Z1 Z2", 3);
    auto r = multiply(a, b);
    EXPECT_EQ(r.factor(0), 'Z');
    EXPECT_EQ(r.factor(1), 'I');
    EXPECT_EQ(r.factor(2), 'Y');
    EXPECT_EQ(r.phase(), 3);
    EXPECT_TRUE(oracle::pauli_matrix(r).isApprox(oracle::pauli_matrix(a) * oracle::pauli_matrix(b)));
}

TEST(Pauli, AnticommutationExamples) {
    EXPECT_TRUE(anticommutes(P("X0", 1), P("Z0", 1)));
    EXPECT_FALSE(anticommutes(P("X0 X1", 2), P("Z0 Z1", 2)));
}

TEST(Pauli, Weight) {
    EXPECT_EQ(PauliString(5).weight(), 0u);
    EXPECT_EQ(P("Z0 Z1 X2", 6).weight(), 3u);
    EXPECT_EQ(P("-i * X0 Z1 Z2 X3", 6).weight(), 4u);
}

TEST(Pauli, SizeMismatchThrows) {
    EXPECT_THROW(multiply(PauliString(2), PauliString(3)), fqm::Error);
    EXPECT_THROW(anticommutes(PauliString(2), PauliString(3)), fqm::Error);
}

TEST(Pauli, TextRoundTrip) {
    for (const char *s : {"1 * I", "i * X0 Y3", "-1 * Z1 Z2", "-i * Y0 X1 Z2 Y3"}) {
        EXPECT_EQ(P(s, 4).str(), s);
    }
    EXPECT_THROW(P("Q0", 2), fqm::Error);
    EXPECT_THROW(P("2 * X0", 2), fqm::Error);
    EXPECT_THROW(P("X5", 2), fqm::Error);
}

TEST(Pauli, RepeatedFactorsMultiply) {
    auto r = PauliString::from_sparse(1, {{0, 'X'}, {0, 'Z'}});
    EXPECT_EQ(r, multiply(P("X0", 1), P("Z0", 1)));
}

TEST(PauliProperty, MultiplyMatchesDenseOnRandomPairs) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; trial++) {
        size_t n = 1 + rng() % 4;
        auto a = oracle::random_pauli(n, rng), b = oracle::random_pauli(n, rng);
        auto r = multiply(a, b);
        ASSERT_TRUE(oracle::pauli_matrix(r).isApprox(oracle::pauli_matrix(a) * oracle::pauli_matrix(b), 1e-12))
            << a.str() << " . " << b.str();
    }
}

TEST(PauliProperty, AnticommutesIffSwappedProductsDifferInPhase) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; trial++) {
        size_t n = 1 + rng() % 10;
        auto a = oracle::random_pauli(n, rng), b = oracle::random_pauli(n, rng);
        auto ab = multiply(a, b), ba = multiply(b, a);
        ASSERT_TRUE(ab.same_pattern(ba));
        ASSERT_EQ(anticommutes(a, b), ab.phase() != ba.phase());
    }
}

TEST(PauliProperty, WeightSubadditiveAndAssociative) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 1000; trial++) {
        size_t n = 1 + rng() % 130;
        auto a = oracle::random_pauli(n, rng), b = oracle::random_pauli(n, rng), c = oracle::random_pauli(n, rng);
        ASSERT_LE(multiply(a, b).weight(), a.weight() + b.weight());
        ASSERT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    }
}
