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

#include "fqm/mappings.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fqm/cost.h"
#include "fqm/errors.h"
#include "fqm/schemes.h"
#include "oracle.h"

using namespace fqm;
using oracle::cplx;
using oracle::Mat;

namespace {

const MappingKind kAllKinds[] = {MappingKind::kJW, MappingKind::kBK, MappingKind::kTT};

std::vector<EnumerationScheme> all_schemes(size_t n) {
    std::vector<size_t> f(n);
    for (size_t i = 0; i < n; i++) f[i] = i;
    std::vector<EnumerationScheme> out;
    do {
        out.emplace_back(f);
    } while (std::next_permutation(f.begin(), f.end()));
    return out;
}

Mat dag(const Mat &m) { return m.adjoint(); }

}  // namespace

TEST(GammaSet, JordanWignerShape) {
    auto gs = gamma_set(MappingKind::kJW, 3);
    ASSERT_EQ(gs.strings.size(), 6u);
    EXPECT_EQ(gs.strings[4], PauliString::parse("Z0 Z1 X2", 3));
    for (size_t i = 0; i < 10; i++) EXPECT_EQ(gamma_set(MappingKind::kJW, 10).strings[2 * i].weight(), i + 1);
}

TEST(GammaSet, AllKindsVerifyForSmallN) {
    for (auto kind : kAllKinds) {
        for (size_t n = 1; n <= 13; n++) {
            auto check = verify_gamma_set(gamma_set(kind, n));
            ASSERT_TRUE(check.ok) << mapping_kind_name(kind) << " n=" << n;
            ASSERT_TRUE(check.violations.empty());
        }
    }
    EXPECT_THROW(gamma_set(MappingKind::kJW, 0), Error);
}

TEST(GammaSet, BravyiKitaevWeightBound) {
    auto gs = gamma_set(MappingKind::kBK, 8);
    for (const auto &s : gs.strings) EXPECT_LE(s.weight(), 3u + 2u);
}

TEST(GammaSet, TernaryTreeWeightsAtFullTree) {
    for (const auto &s : gamma_set(MappingKind::kTT, 13).strings) EXPECT_EQ(s.weight(), 3u);
    for (const auto &s : gamma_set(MappingKind::kTT, 4).strings) EXPECT_EQ(s.weight(), 2u);
}

TEST(GammaSet, CorruptedSetReportsPair) {
    auto gs = gamma_set(MappingKind::kJW, 3);
    gs.strings[0] = gs.strings[2];
    auto check = verify_gamma_set(gs);
    EXPECT_FALSE(check.ok);
    bool found = false;
    for (const auto &v : check.violations) found |= (v.i == 0 && v.j == 2);
    EXPECT_TRUE(found);

    auto bad = gamma_set(MappingKind::kJW, 2);
    bad.strings[1].set_phase(1);  // i * Y0 is anti-Hermitian
    EXPECT_FALSE(verify_gamma_set(bad).ok);
}

TEST(GammaSet, FermionRelationsFromMajoranas) {
    for (auto kind : kAllKinds) {
        for (size_t n = 1; n <= 4; n++) {
            auto gs = gamma_set(kind, n);
            std::vector<Mat> A;
            for (size_t i = 0; i < n; i++) {
                A.push_back(0.5 * (oracle::pauli_matrix(gs.strings[2 * i]) +
                                   cplx(0, 1) * oracle::pauli_matrix(gs.strings[2 * i + 1])));
            }
            const auto dim = static_cast<Eigen::Index>(size_t{1} << n);
            Mat id = Mat::Identity(dim, dim);
            for (size_t i = 0; i < n; i++) {
                for (size_t j = 0; j < n; j++) {
                    Mat anti = A[i] * dag(A[j]) + dag(A[j]) * A[i];
                    Mat want = i == j ? id : Mat::Zero(dim, dim);
                    ASSERT_LT((anti - want).norm(), 1e-12)
                        << mapping_kind_name(kind) << " n=" << n << " " << i << "," << j;
                    ASSERT_LT((A[i] * A[j] + A[j] * A[i]).norm(), 1e-12);
                }
            }
        }
    }
}

TEST(Transforms, HoppingShapes) {
    auto f = EnumerationScheme({0, 1, 2, 3, 4, 5});
    auto terms = transform_hopping(f, 0, 3, 1.0);
    ASSERT_EQ(terms.size(), 2u);
    for (const auto &t : terms) {
        EXPECT_EQ(t.op.weight(), 4u);
        EXPECT_NEAR(std::abs(t.coeff), 0.5, 1e-15);
    }
    for (const auto &t : transform_hopping(f, 4, 5, 1.0)) EXPECT_EQ(t.op.weight(), 2u);
    EXPECT_EQ(transform_hopping(f, 1, 2, cplx(1, 2)).size(), 4u);
    EXPECT_THROW(transform_hopping(f, 2, 2, 1.0), Error);
    EXPECT_TRUE(transform_hopping(f, 1, 2, 0.0).empty());
}

TEST(Transforms, NumberAndQuarticShapes) {
    auto f = EnumerationScheme({0});
    auto num = transform_number(f, 0, 1.0);
    ASSERT_EQ(num.size(), 2u);
    EXPECT_TRUE(num[0].op.is_identity_pattern());
    EXPECT_EQ(num[0].coeff, cplx(0.5));
    EXPECT_EQ(num[1].op, PauliString::parse("Z0", 1));
    EXPECT_EQ(num[1].coeff, cplx(-0.5));
    EXPECT_TRUE(transform_number(f, 0, 0.0).empty());

    auto q = transform_quartic(EnumerationScheme({0, 1}), 0, 1, 2.0);
    ASSERT_EQ(q.size(), 4u);
    std::vector<size_t> weights;
    for (const auto &t : q) weights.push_back(t.op.weight());
    std::sort(weights.begin(), weights.end());
    EXPECT_EQ(weights, (std::vector<size_t>{0, 1, 1, 2}));
}

TEST(TransformsOracle, HoppingMatchesDenseForAllSchemes) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-2, 2);
    for (size_t n = 2; n <= 4; n++) {
        for (const auto &f : all_schemes(n)) {
            for (size_t a = 0; a < n; a++) {
                for (size_t b = 0; b < n; b++) {
                    if (a == b) continue;
                    cplx c(u(rng), u(rng));
                    Mat Aa = oracle::annihilator(f.at(a), n), Ab = oracle::annihilator(f.at(b), n);
                    Mat want = c * dag(Aa) * Ab + std::conj(c) * dag(Ab) * Aa;
                    Mat got = oracle::terms_matrix(transform_hopping(f, a, b, c), n);
                    ASSERT_LT((got - want).cwiseAbs().maxCoeff(), 1e-12) << "n=" << n << " " << a << "->" << b;
                }
            }
        }
    }
}

TEST(TransformsOracle, NumberAndQuarticMatchDense) {
    for (size_t n = 1; n <= 4; n++) {
        for (const auto &f : all_schemes(n)) {
            for (size_t a = 0; a < n; a++) {
                Mat Na = dag(oracle::annihilator(f.at(a), n)) * oracle::annihilator(f.at(a), n);
                ASSERT_LT((oracle::terms_matrix(transform_number(f, a, 1.5), n) - 1.5 * Na).cwiseAbs().maxCoeff(),
                          1e-12);
                for (size_t b = 0; b < n; b++) {
                    if (a == b) continue;
                    Mat Nb = dag(oracle::annihilator(f.at(b), n)) * oracle::annihilator(f.at(b), n);
                    Mat got = oracle::terms_matrix(transform_quartic(f, a, b, -0.75), n);
                    ASSERT_LT((got - (-0.75) * Na * Nb).cwiseAbs().maxCoeff(), 1e-12);
                }
            }
        }
    }
}

TEST(TransformsOracle, BuildHamiltonianMatchesDense) {
    auto g = square_lattice(2);
    for (const auto &f : all_schemes(4)) {
        for (bool quartics : {false, true}) {
            auto h = build_hamiltonian(g, f, quartics, 0.5);
            ASSERT_TRUE(h.is_hermitian());
            Mat want = Mat::Zero(16, 16);
            for (const auto &e : g.edges()) {
                Mat Aa = oracle::annihilator(f.at(e.a), 4), Ab = oracle::annihilator(f.at(e.b), 4);
                want += e.coeff * dag(Aa) * Ab + std::conj(e.coeff) * dag(Ab) * Aa;
                if (quartics) want += 0.5 * dag(Aa) * Aa * dag(Ab) * Ab;
            }
            ASSERT_LT((oracle::hamiltonian_matrix(h) - want).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(BuildHamiltonian, LatticeSixWeights) {
    auto g = square_lattice(6);
    auto hs = build_hamiltonian(g, s_pattern(6));
    ASSERT_EQ(hs.terms.size(), 120u);
    EXPECT_DOUBLE_EQ(static_cast<double>(hs.total_weight()) / 120.0, 4.5);
    auto hm = build_hamiltonian(g, mitchison_durbin(6));
    EXPECT_NEAR(static_cast<double>(hm.total_weight()) / 120.0, 260.0 / 60.0, 1e-12);
    EXPECT_EQ(build_hamiltonian(path_graph(2), EnumerationScheme({0, 1})).terms.size(), 2u);
}

TEST(BuildHamiltonian, WeightLawOnEveryEdge) {
    for (size_t N : {3, 5, 8}) {
        auto g = square_lattice(N);
        for (const auto &f : {z_pattern(N), s_pattern(N), mitchison_durbin(N), random_scheme(N * N, N)}) {
            auto h = build_hamiltonian(g, f);
            ASSERT_EQ(h.terms.size(), 2 * g.num_edges());
            for (size_t k = 0; k < g.num_edges(); k++) {
                const auto &e = g.edges()[k];
                size_t want = static_cast<size_t>(std::abs(static_cast<long>(f.at(e.a)) - static_cast<long>(f.at(e.b)))) + 1;
                ASSERT_EQ(h.terms[2 * k].op.weight(), want);
                ASSERT_EQ(h.terms[2 * k + 1].op.weight(), want);
            }
            EXPECT_NEAR(static_cast<double>(h.total_weight()) / static_cast<double>(h.terms.size()), apv(g, f), 1e-12);
        }
    }
}

TEST(BuildHamiltonian, JsonRoundTrip) {
    auto h = build_hamiltonian(square_lattice(3), mitchison_durbin(3), true);
    auto back = hamiltonian_from_json(hamiltonian_to_json(h));
    ASSERT_EQ(back.n_qubits, h.n_qubits);
    ASSERT_EQ(back.terms.size(), h.terms.size());
    EXPECT_LT((oracle::hamiltonian_matrix(back) - oracle::hamiltonian_matrix(h)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_THROW(hamiltonian_from_json("[1,2]"), Error);
}

TEST(HoppingWeights, PairedJordanWigner) {
    auto w = hopping_weight_under_mapping(MappingKind::kJW, paired_majorana_scheme(EnumerationScheme({0, 1})), 0, 1);
    for (size_t k : w.products) EXPECT_EQ(k, 2u);
    EXPECT_EQ(w.max, 2u);

    std::mt19937_64 rng(23);
    const size_t n = 16;
    for (int t = 0; t < 20; t++) {
        auto f = random_scheme(n, rng());
        size_t i = rng() % n, j = rng() % (n - 1);
        if (j >= i) j++;
        auto hw = hopping_weight_under_mapping(MappingKind::kJW, paired_majorana_scheme(f), i, j);
        size_t want = transform_hopping(f, i, j, 1.0)[0].op.weight();
        for (size_t k : hw.products) ASSERT_EQ(k, want);
    }
}

TEST(HoppingWeights, TernaryTreeBound) {
    const size_t n = 13;
    std::vector<size_t> ident(2 * n);
    for (size_t k = 0; k < 2 * n; k++) ident[k] = k;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (i == j) continue;
            ASSERT_LE(hopping_weight_under_mapping(MappingKind::kTT, ident, i, j).max, 6u);
        }
    }
    EXPECT_THROW(hopping_weight_under_mapping(MappingKind::kTT, std::vector<size_t>(2 * n, 0), 0, 1), Error);
}
