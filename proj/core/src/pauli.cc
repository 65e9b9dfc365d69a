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

#include <bit>
#include <charconv>
#include <sstream>

#include "fqm/errors.h"

namespace fqm {

namespace {

size_t num_words(size_t n) { return (n + 63) / 64; }

void check_same_size(const PauliString &a, const PauliString &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw Error(ErrorKind::kDimension, "pauli size mismatch: " + std::to_string(a.n_qubits()) + " vs " +
                                               std::to_string(b.n_qubits()));
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

PauliString::PauliString(size_t n_qubits) : n_(n_qubits), xs_(num_words(n_qubits)), zs_(num_words(n_qubits)) {}

PauliString PauliString::from_sparse(size_t n_qubits, const std::vector<std::pair<size_t, char>> &factors,
                                     uint8_t phase) {
    PauliString out(n_qubits);
    out.phase_ = phase & 3;
    for (auto [q, p] : factors) {
        if (q >= n_qubits) {
            throw Error(ErrorKind::kDimension, "qubit " + std::to_string(q) + " out of range");
        }
        if (out.factor(q) == 'I') {
            out.set(q, p);
            continue;
        }
        PauliString single(n_qubits);
        single.set(q, p);
        out = multiply(out, single);
    }
    return out;
}

PauliString PauliString::from_words(size_t n_qubits, std::vector<uint64_t> xs, std::vector<uint64_t> zs,
                                    uint8_t phase) {
    if (xs.size() != num_words(n_qubits) || zs.size() != num_words(n_qubits)) {
        throw Error(ErrorKind::kDimension, "pauli word count mismatch");
    }
    PauliString out;
    out.n_ = n_qubits;
    out.xs_ = std::move(xs);
    out.zs_ = std::move(zs);
    out.phase_ = phase & 3;
    return out;
}

PauliString PauliString::parse(std::string_view text, size_t n_qubits) {
    text = trim(text);
    uint8_t phase = 0;
    if (auto star = text.find('*'); star != std::string_view::npos) {
        auto c = trim(text.substr(0, star));
        if (c == "1" || c == "+1") {
            phase = 0;
        } else if (c == "i" || c == "+i") {
            phase = 1;
        } else if (c == "-1") {
            phase = 2;
        } else if (c == "-i") {
            phase = 3;
        } else {
            throw Error(ErrorKind::kParse, "bad pauli phase '" + std::string(c) + "'");
        }
        text = trim(text.substr(star + 1));
    }
    std::vector<std::pair<size_t, char>> factors;
    if (text != "I") {
        std::istringstream in{std::string(text)};
        std::string tok;
        while (in >> tok) {
            char p = tok[0];
            size_t q = 0;
            auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), q);
            if (tok.size() < 2 || ec != std::errc() || ptr != tok.data() + tok.size() ||
                (p != 'X' && p != 'Y' && p != 'Z')) {
                throw Error(ErrorKind::kParse, "bad pauli factor '" + tok + "'");
            }
            factors.emplace_back(q, p);
        }
    }
    return from_sparse(n_qubits, factors, phase);
}

char PauliString::factor(size_t q) const {
    static constexpr char kTable[4] = {'I', 'X', 'Z', 'Y'};
    return kTable[x(q) | (z(q) << 1)];
}

void PauliString::set(size_t q, char p) {
    uint64_t bit = uint64_t{1} << (q & 63);
    bool bx = p == 'X' || p == 'Y';
    bool bz = p == 'Z' || p == 'Y';
    if (p != 'I' && !bx && !bz) throw Error(ErrorKind::kParse, std::string("bad pauli letter ") + p);
    xs_[q >> 6] = bx ? (xs_[q >> 6] | bit) : (xs_[q >> 6] & ~bit);
    zs_[q >> 6] = bz ? (zs_[q >> 6] | bit) : (zs_[q >> 6] & ~bit);
}

cplx PauliString::phase_value() const {
    static const cplx kUnits[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kUnits[phase_];
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < xs_.size(); k++) w += std::popcount(xs_[k] | zs_[k]);
    return w;
}

size_t PauliString::z_count() const {
    size_t w = 0;
    for (size_t k = 0; k < xs_.size(); k++) w += std::popcount(zs_[k] & ~xs_[k]);
    return w;
}

bool PauliString::is_identity_pattern() const { return weight() == 0; }

std::vector<std::pair<size_t, char>> PauliString::sparse() const {
    std::vector<std::pair<size_t, char>> out;
    for (size_t k = 0; k < xs_.size(); k++) {
        uint64_t m = xs_[k] | zs_[k];
        while (m) {
            size_t q = k * 64 + std::countr_zero(m);
            out.emplace_back(q, factor(q));
            m &= m - 1;
        }
    }
    return out;
}

std::string PauliString::str() const {
    std::string out = phase_str(phase_) + " * ";
    auto fs = sparse();
    if (fs.empty()) return out + "I";
    for (size_t k = 0; k < fs.size(); k++) {
        if (k) out += ' ';
        out += fs[k].second;
        out += std::to_string(fs[k].first);
    }
    return out;
}

std::string phase_str(uint8_t phase) {
    static const char *kNames[4] = {"1", "i", "-1", "-i"};
    return kNames[phase & 3];
}

// With sigma_y = i X Z per qubit, P(x,z) = i^{xz} X^x Z^z, so
// P1 P2 = i^{x1z1 + x2z2 - x3z3 + 2 z1x2} P3.
PauliString multiply(const PauliString &a, const PauliString &b) {
    check_same_size(a, b);
    auto &ax = a.x_words();
    auto &az = a.z_words();
    auto &bx = b.x_words();
    auto &bz = b.z_words();
    int64_t e = a.phase() + b.phase();
    std::vector<uint64_t> ox(ax.size()), oz(ax.size());
    for (size_t k = 0; k < ax.size(); k++) {
        ox[k] = ax[k] ^ bx[k];
        oz[k] = az[k] ^ bz[k];
        e += std::popcount(ax[k] & az[k]) + std::popcount(bx[k] & bz[k]) - std::popcount(ox[k] & oz[k]) +
             2 * std::popcount(az[k] & bx[k]);
    }
    return PauliString::from_words(a.n_qubits(), std::move(ox), std::move(oz),
                                   static_cast<uint8_t>(((e % 4) + 4) % 4));
}

bool anticommutes(const PauliString &a, const PauliString &b) {
    check_same_size(a, b);
    size_t c = 0;
    for (size_t k = 0; k < a.x_words().size(); k++) {
        c += std::popcount((a.x_words()[k] & b.z_words()[k]) ^ (a.z_words()[k] & b.x_words()[k]));
    }
    return c & 1;
}

}  // namespace fqm
