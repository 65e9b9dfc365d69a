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

// Dense 2^n x 2^n reference matrices for small n. Qubit k is bit k of the
// basis index; mode k of the Fock space is the same bit.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "fqm/mappings.h"
#include "fqm/pauli.h"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using cplx = std::complex<double>;

inline Mat pauli_matrix(const fqm::PauliString &p) {
    const size_t n = p.n_qubits();
    const size_t dim = size_t{1} << n;
    Mat m = Mat::Zero(dim, dim);
    size_t xmask = 0;
    for (size_t q = 0; q < n; q++) xmask |= size_t{p.x(q)} << q;
    for (size_t b = 0; b < dim; b++) {
        cplx amp = p.phase_value();
        for (size_t q = 0; q < n; q++) {
            bool bit = (b >> q) & 1;
            switch (p.factor(q)) {
                case 'Z':
                    if (bit) amp = -amp;
                    break;
                case 'Y':  // sigma_y |0> = i|1>, sigma_y |1> = -i|0>
                    amp *= bit ? cplx(0, -1) : cplx(0, 1);
                    break;
                default:
                    break;
            }
        }
        m(b ^ xmask, b) = amp;
    }
    return m;
}

inline Mat hamiltonian_matrix(const fqm::QubitHamiltonian &h) {
    const size_t dim = size_t{1} << h.n_qubits;
    Mat m = Mat::Zero(dim, dim);
    for (const auto &t : h.terms) m += t.coeff * pauli_matrix(t.op);
    return m;
}

inline Mat terms_matrix(const std::vector<fqm::Term> &terms, size_t n) {
    return hamiltonian_matrix({n, terms});
}

// a_k |..1_k..> = (-1)^{sum_{j<k} n_j} |..0_k..>.
inline Mat annihilator(size_t k, size_t n) {
    const size_t dim = size_t{1} << n;
    Mat m = Mat::Zero(dim, dim);
    for (size_t b = 0; b < dim; b++) {
        if (!((b >> k) & 1)) continue;
        int parity = __builtin_popcountll(b & ((size_t{1} << k) - 1)) & 1;
        m(b ^ (size_t{1} << k), b) = parity ? -1.0 : 1.0;
    }
    return m;
}

inline fqm::PauliString random_pauli(size_t n, std::mt19937_64 &rng) {
    fqm::PauliString p(n);
    static const char kLetters[4] = {'I', 'X', 'Y', 'Z'};
    for (size_t q = 0; q < n; q++) p.set(q, kLetters[rng() % 4]);
    p.set_phase(static_cast<uint8_t>(rng() % 4));
    return p;
}

}  // namespace oracle
