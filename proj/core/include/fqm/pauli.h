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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fqm {

using cplx = std::complex<double>;

// Phased Pauli operator i^phase * P_0 (x) P_1 (x) ... in symplectic form.
// Factors are the Hermitian sigma matrices; (x,z) = (1,1) is sigma_y.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(size_t n_qubits);

    // Factors given as (qubit, 'I'|'X'|'Y'|'Z'). Repeated qubits multiply in order.
    static PauliString from_sparse(size_t n_qubits, const std::vector<std::pair<size_t, char>> &factors,
                                   uint8_t phase = 0);
    // Parses "c * X0 Z3" with c in {1, i, -1, -i}; the prefix is optional; "I" is identity.
    static PauliString parse(std::string_view text, size_t n_qubits);
    static PauliString from_words(size_t n_qubits, std::vector<uint64_t> xs, std::vector<uint64_t> zs,
                                  uint8_t phase);

    size_t n_qubits() const { return n_; }
    bool x(size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1; }
    bool z(size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1; }
    char factor(size_t q) const;
    void set(size_t q, char p);
    // Power of i, 0..3.
    uint8_t phase() const { return phase_; }
    void set_phase(uint8_t p) { phase_ = p & 3; }
    cplx phase_value() const;

    size_t weight() const;
    // Qubits carrying sigma_z only.
    size_t z_count() const;
    bool is_identity_pattern() const;
    std::vector<std::pair<size_t, char>> sparse() const;
    std::string str() const;

    const std::vector<uint64_t> &x_words() const { return xs_; }
    const std::vector<uint64_t> &z_words() const { return zs_; }

    // Same operator up to phase.
    bool same_pattern(const PauliString &o) const { return n_ == o.n_ && xs_ == o.xs_ && zs_ == o.zs_; }
    bool operator==(const PauliString &o) const { return same_pattern(o) && phase_ == o.phase_; }

  private:
    size_t n_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    uint8_t phase_ = 0;
};

PauliString multiply(const PauliString &a, const PauliString &b);
bool anticommutes(const PauliString &a, const PauliString &b);
inline bool commutes(const PauliString &a, const PauliString &b) { return !anticommutes(a, b); }
inline size_t weight(const PauliString &a) { return a.weight(); }

std::string phase_str(uint8_t phase);

}  // namespace fqm
