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
#include <vector>

#include "fqm/mappings.h"
#include "fqm/pauli.h"

namespace fqm {

// Two-ancilla Jordan-Wigner mapping on the N x N lattice enumerated by
// mitchison_durbin(N, x). Data qubits are 0..N^2-1, ancillas N^2 and N^2+1.
struct AuxMapping {
    size_t N = 0;
    size_t x = 0;
    // Inclusive data-qubit spans of the Z strings p1 and p2.
    size_t p1_lo = 0, p1_hi = 0;
    size_t p2_lo = 0, p2_hi = 0;
    // p_i (x) Z on ancilla i, over N^2 + 2 qubits.
    PauliString s1;
    PauliString s2;

    size_t n_qubits() const { return N * N + 2; }
};

AuxMapping stabilizers(size_t N, size_t x);

// Per hopping term: which stabilizers it is multiplied by and its final weight.
struct AuxChoice {
    bool use1 = false;
    bool use2 = false;
    size_t weight = 0;
};

// Chooses the lightest of {none, p1, p2, both} for the JW string supported on
// qubits a < b. Ties keep fewer multiplications, so a stabilizer is applied
// only when the weight strictly drops.
AuxChoice aux_choice(const AuxMapping &m, size_t a, size_t b);

struct AuxSummary {
    size_t N = 0;
    size_t x = 0;
    int64_t total_weight = 0;  // summed over hopping terms (edges)
    int64_t num_terms = 0;
    int64_t max_weight = 0;
    int64_t multiplied = 0;  // terms touched by at least one stabilizer
    double apv = 0.0;
};

// Weight accounting from index intervals alone; usable at N in the thousands.
AuxSummary aux_summary(size_t N, size_t x);

struct AuxResult {
    AuxMapping mapping;
    QubitHamiltonian hamiltonian;
    AuxSummary summary;
    std::vector<AuxChoice> choices;  // one per lattice edge
};

// Builds the actual Pauli strings: kappa adjustment on ancilla i for terms
// anticommuting with p_i, then stabilizer products per aux_choice.
AuxResult build_aux_hamiltonian(size_t N, size_t x);

// The published total-weight expression.
int64_t total_weight_formula(size_t N, size_t x);
// Same expression with the Z count before multiplication taken as
// Nx - x(x-1) - 1 inside the j-sum too, matching its row-0 term.
int64_t total_weight_formula_corrected(size_t N, size_t x);

size_t optimal_x_aux(size_t N);
int64_t cnot_count_V(size_t N, size_t x);

// argmin over x in [1, N/2] of the total-weight formula, optionally with the
// CNOT count of V added. Smallest x wins ties.
size_t x_scan_argmin(size_t N, bool corrected = false, bool with_cnot = false);

}  // namespace fqm
