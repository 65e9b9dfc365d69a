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

#include <array>
#include <string>
#include <vector>

#include "fqm/graph.h"
#include "fqm/pauli.h"

namespace fqm {

enum class MappingKind { kJW, kBK, kTT };
MappingKind parse_mapping_kind(const std::string &name);
std::string mapping_kind_name(MappingKind kind);

// 2n pairwise anticommuting Hermitian strings; strings[2i] and strings[2i+1]
// represent the two Majorana operators of mode i.
struct GammaSet {
    MappingKind kind = MappingKind::kJW;
    size_t n_modes = 0;
    std::vector<PauliString> strings;
};

GammaSet gamma_set(MappingKind kind, size_t n);

struct GammaViolation {
    size_t i;
    size_t j;  // equals i for single-string violations
    std::string reason;
};

struct GammaCheck {
    bool ok = true;
    std::vector<GammaViolation> violations;
};

GammaCheck verify_gamma_set(const GammaSet &gs);

struct Term {
    cplx coeff;
    PauliString op;
};

struct QubitHamiltonian {
    size_t n_qubits = 0;
    std::vector<Term> terms;

    // With Hermitian strings this reduces to real coefficients.
    bool is_hermitian(double tol = 1e-12) const;
    size_t total_weight() const;
};

// c a+_alpha a_beta + conj(c) a+_beta a_alpha under JW with scheme f.
std::vector<Term> transform_hopping(const EnumerationScheme &f, size_t alpha, size_t beta, cplx coeff);
// c n_alpha n_beta.
std::vector<Term> transform_quartic(const EnumerationScheme &f, size_t alpha, size_t beta, cplx coeff);
// c n_alpha.
std::vector<Term> transform_number(const EnumerationScheme &f, size_t alpha, cplx coeff);

// Hopping terms for every edge in edge order; with quartics, each edge also
// contributes quartic_coeff * n_a n_b right after its hopping strings.
QubitHamiltonian build_hamiltonian(const InteractionGraph &g, const EnumerationScheme &f,
                                   bool include_quartics = false, double quartic_coeff = 1.0);

struct HoppingWeights {
    // Gamma_{f(2i+s)} Gamma_{f(2j+t)} for (s,t) = (0,0), (0,1), (1,0), (1,1).
    std::array<size_t, 4> products{};
    size_t max = 0;
    double mean = 0.0;
};

// majorana_f maps Majorana index 0..2n-1 to a Gamma-set position.
HoppingWeights hopping_weight_under_mapping(MappingKind kind, const std::vector<size_t> &majorana_f, size_t i,
                                            size_t j);
// beta_{2i} -> 2 f(i), beta_{2i+1} -> 2 f(i) + 1.
std::vector<size_t> paired_majorana_scheme(const EnumerationScheme &f);

std::string hamiltonian_to_json(const QubitHamiltonian &h);
QubitHamiltonian hamiltonian_from_json(const std::string &text);

}  // namespace fqm
