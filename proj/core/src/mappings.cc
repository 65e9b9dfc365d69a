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

#include <algorithm>
#include <set>

#include "fqm/errors.h"
#include "json.hpp"

namespace fqm {

using json = nlohmann::json;

MappingKind parse_mapping_kind(const std::string &name) {
    if (name == "JW" || name == "jw") return MappingKind::kJW;
    if (name == "BK" || name == "bk") return MappingKind::kBK;
    if (name == "TT" || name == "tt") return MappingKind::kTT;
    throw Error(ErrorKind::kPrecondition, "unknown mapping kind '" + name + "'");
}

std::string mapping_kind_name(MappingKind kind) {
    switch (kind) {
        case MappingKind::kJW:
            return "JW";
        case MappingKind::kBK:
            return "BK";
        case MappingKind::kTT:
            return "TT";
    }
    return "?";
}

namespace {

GammaSet jordan_wigner(size_t n) {
    GammaSet gs{MappingKind::kJW, n, {}};
    for (size_t i = 0; i < n; i++) {
        PauliString c(n), d(n);
        for (size_t k = 0; k < i; k++) {
            c.set(k, 'Z');
            d.set(k, 'Z');
        }
        c.set(i, 'X');
        d.set(i, 'Y');
        gs.strings.push_back(std::move(c));
        gs.strings.push_back(std::move(d));
    }
    return gs;
}

// Binary-indexed-tree index sets, 0-based qubits.
std::set<size_t> update_set(size_t index, size_t n) {
    std::set<size_t> out;
    for (size_t k = index + 1; k <= n; k += k & (~k + 1)) out.insert(k - 1);
    return out;
}

std::set<size_t> occupation_set(size_t index) {
    std::set<size_t> out;
    size_t k = index + 1;
    out.insert(k - 1);
    size_t parent = k & (k - 1);
    k -= 1;
    while (k != parent) {
        out.insert(k - 1);
        k &= k - 1;
    }
    return out;
}

// Qubits whose sum gives the parity of modes 0..index-1.
std::set<size_t> parity_set(size_t index) {
    std::set<size_t> out;
    for (size_t k = index; k > 0; k &= k - 1) out.insert(k - 1);
    return out;
}

GammaSet bravyi_kitaev(size_t n) {
    GammaSet gs{MappingKind::kBK, n, {}};
    for (size_t i = 0; i < n; i++) {
        auto up = update_set(i, n);
        auto par = parity_set(i);
        auto occ = occupation_set(i);
        PauliString c(n), d(n);
        for (size_t q : up) {
            c.set(q, 'X');
            if (q != i) d.set(q, 'X');
        }
        for (size_t q : par) c.set(q, 'Z');
        for (size_t q = 0; q < n; q++) {
            if (q != i && (par.count(q) != occ.count(q))) d.set(q, 'Z');
        }
        d.set(i, 'Y');
        gs.strings.push_back(std::move(c));
        gs.strings.push_back(std::move(d));
    }
    return gs;
}

constexpr char kBranch[3] = {'X', 'Y', 'Z'};

// Heap-indexed ternary tree: node k has children 3k+1 (X), 3k+2 (Y), 3k+3 (Z).
// Every missing child is a leaf; the path to it gives one string. Leaves are
// ordered depth first with X < Y < Z and the all-Z leaf is dropped.
GammaSet ternary_tree(size_t n) {
    GammaSet gs{MappingKind::kTT, n, {}};
    PauliString path(n);
    auto dfs = [&](auto &&self, size_t k) -> void {
        for (size_t b = 0; b < 3; b++) {
            path.set(k, kBranch[b]);
            size_t child = 3 * k + 1 + b;
            if (child < n) {
                self(self, child);
            } else {
                gs.strings.push_back(path);
            }
        }
        path.set(k, 'I');
    };
    dfs(dfs, 0);
    gs.strings.pop_back();
    return gs;
}

void add_term(std::vector<Term> &out, cplx c, PauliString op) {
    if (c != cplx(0, 0)) out.push_back({c, std::move(op)});
}

void check_mode(const EnumerationScheme &f, size_t mode) {
    if (mode >= f.size()) throw Error(ErrorKind::kSchemeMismatch, "mode index out of range");
}

}  // namespace

GammaSet gamma_set(MappingKind kind, size_t n) {
    if (n == 0) throw Error(ErrorKind::kInvalidSize, "gamma set needs n >= 1");
    switch (kind) {
        case MappingKind::kJW:
            return jordan_wigner(n);
        case MappingKind::kBK:
            return bravyi_kitaev(n);
        case MappingKind::kTT:
            return ternary_tree(n);
    }
    throw Error(ErrorKind::kPrecondition, "unknown mapping kind");
}

GammaCheck verify_gamma_set(const GammaSet &gs) {
    GammaCheck out;
    auto fail = [&](size_t i, size_t j, std::string why) {
        out.ok = false;
        out.violations.push_back({i, j, std::move(why)});
    };
    if (gs.strings.size() != 2 * gs.n_modes) fail(0, 0, "expected 2n strings");
    for (size_t i = 0; i < gs.strings.size(); i++) {
        const auto &a = gs.strings[i];
        if (a.n_qubits() != gs.strings[0].n_qubits()) {
            fail(i, i, "qubit count differs");
            continue;
        }
        if (a.phase() & 1) fail(i, i, "not Hermitian");
        if (a.is_identity_pattern()) fail(i, i, "identity string");
        for (size_t j = i + 1; j < gs.strings.size(); j++) {
            if (gs.strings[j].n_qubits() == a.n_qubits() && !anticommutes(a, gs.strings[j])) {
                fail(i, j, "pair commutes");
            }
        }
    }
    return out;
}

bool QubitHamiltonian::is_hermitian(double tol) const {
    for (const auto &t : terms) {
        cplx c = t.coeff * t.op.phase_value();
        if (std::abs(c.imag()) > tol) return false;
    }
    return true;
}

size_t QubitHamiltonian::total_weight() const {
    size_t w = 0;
    for (const auto &t : terms) w += t.op.weight();
    return w;
}

// For p < q and c = r + is:
//   c a+_p a_q + h.c. = r/2 (X Z..Z X + Y Z..Z Y) + s/2 (Y Z..Z X - X Z..Z Y),
// with the first letter on qubit p.
std::vector<Term> transform_hopping(const EnumerationScheme &f, size_t alpha, size_t beta, cplx coeff) {
    check_mode(f, alpha);
    check_mode(f, beta);
    if (alpha == beta || f[alpha] == f[beta]) {
        throw Error(ErrorKind::kPrecondition, "hopping term needs two distinct modes");
    }
    size_t n = f.size();
    size_t p = f[alpha], q = f[beta];
    double r = coeff.real(), s = coeff.imag();
    if (p > q) {
        std::swap(p, q);
        s = -s;
    }
    auto chain = [&](char a, char b) {
        PauliString op(n);
        for (size_t k = p + 1; k < q; k++) op.set(k, 'Z');
        op.set(p, a);
        op.set(q, b);
        return op;
    };
    std::vector<Term> out;
    add_term(out, r / 2, chain('X', 'X'));
    add_term(out, r / 2, chain('Y', 'Y'));
    add_term(out, s / 2, chain('Y', 'X'));
    add_term(out, -s / 2, chain('X', 'Y'));
    return out;
}

std::vector<Term> transform_quartic(const EnumerationScheme &f, size_t alpha, size_t beta, cplx coeff) {
    check_mode(f, alpha);
    check_mode(f, beta);
    if (alpha == beta) throw Error(ErrorKind::kPrecondition, "quartic term needs two distinct modes");
    size_t n = f.size();
    PauliString id(n), za(n), zb(n), zz(n);
    za.set(f[alpha], 'Z');
    zb.set(f[beta], 'Z');
    zz.set(f[alpha], 'Z');
    zz.set(f[beta], 'Z');
    std::vector<Term> out;
    add_term(out, coeff / 4.0, id);
    add_term(out, -coeff / 4.0, za);
    add_term(out, -coeff / 4.0, zb);
    add_term(out, coeff / 4.0, zz);
    return out;
}

std::vector<Term> transform_number(const EnumerationScheme &f, size_t alpha, cplx coeff) {
    check_mode(f, alpha);
    size_t n = f.size();
    PauliString id(n), z(n);
    z.set(f[alpha], 'Z');
    std::vector<Term> out;
    add_term(out, coeff / 2.0, id);
    add_term(out, -coeff / 2.0, z);
    return out;
}

QubitHamiltonian build_hamiltonian(const InteractionGraph &g, const EnumerationScheme &f, bool include_quartics,
                                   double quartic_coeff) {
    check_scheme(g, f);
    QubitHamiltonian h{g.num_modes(), {}};
    for (const auto &e : g.edges()) {
        auto hop = transform_hopping(f, e.a, e.b, e.coeff);
        std::move(hop.begin(), hop.end(), std::back_inserter(h.terms));
        if (include_quartics) {
            auto quart = transform_quartic(f, e.a, e.b, quartic_coeff);
            std::move(quart.begin(), quart.end(), std::back_inserter(h.terms));
        }
    }
    return h;
}

std::vector<size_t> paired_majorana_scheme(const EnumerationScheme &f) {
    std::vector<size_t> out(2 * f.size());
    for (size_t i = 0; i < f.size(); i++) {
        out[2 * i] = 2 * f[i];
        out[2 * i + 1] = 2 * f[i] + 1;
    }
    return out;
}

HoppingWeights hopping_weight_under_mapping(MappingKind kind, const std::vector<size_t> &majorana_f, size_t i,
                                            size_t j) {
    if (majorana_f.size() % 2 || !is_bijection(majorana_f)) {
        throw Error(ErrorKind::kSchemeMismatch, "Majorana scheme must be a bijection on 0..2n-1");
    }
    size_t n = majorana_f.size() / 2;
    if (i >= n || j >= n) throw Error(ErrorKind::kSchemeMismatch, "mode index out of range");
    auto gs = gamma_set(kind, n);
    HoppingWeights w;
    for (size_t s = 0; s < 2; s++) {
        for (size_t t = 0; t < 2; t++) {
            auto prod = multiply(gs.strings[majorana_f[2 * i + s]], gs.strings[majorana_f[2 * j + t]]);
            w.products[2 * s + t] = prod.weight();
        }
    }
    w.max = *std::max_element(w.products.begin(), w.products.end());
    w.mean = (w.products[0] + w.products[1] + w.products[2] + w.products[3]) / 4.0;
    return w;
}

std::string hamiltonian_to_json(const QubitHamiltonian &h) {
    json terms = json::array();
    for (const auto &t : h.terms) {
        cplx c = t.coeff * t.op.phase_value();
        json paulis = json::array();
        for (auto [q, p] : t.op.sparse()) paulis.push_back({q, std::string(1, p)});
        terms.push_back({{"coeff", {c.real(), c.imag()}}, {"paulis", std::move(paulis)}});
    }
    json j;
    j["n_qubits"] = h.n_qubits;
    j["terms"] = std::move(terms);
    return j.dump();
}

QubitHamiltonian hamiltonian_from_json(const std::string &text) {
    try {
        json j = json::parse(text);
        QubitHamiltonian h;
        h.n_qubits = j.at("n_qubits").get<size_t>();
        for (const auto &t : j.at("terms")) {
            cplx c{t.at("coeff").at(0).get<double>(), t.at("coeff").at(1).get<double>()};
            std::vector<std::pair<size_t, char>> fs;
            for (const auto &p : t.at("paulis")) fs.emplace_back(p.at(0).get<size_t>(), p.at(1).get<std::string>().at(0));
            h.terms.push_back({c, PauliString::from_sparse(h.n_qubits, fs)});
        }
        return h;
    } catch (const json::exception &e) {
        throw Error(ErrorKind::kParse, std::string("malformed hamiltonian json: ") + e.what());
    }
}

}  // namespace fqm
