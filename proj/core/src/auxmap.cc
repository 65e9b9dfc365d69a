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

#include "fqm/auxmap.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "fqm/cost.h"
#include "fqm/errors.h"
#include "fqm/graph.h"
#include "fqm/schemes.h"

namespace fqm {

namespace {

void check_params(size_t N, size_t x) {
    if (N < 2 || x < 1 || 2 * x > N) {
        throw Error(ErrorKind::kInvalidSize,
                    "aux mapping needs N >= 2 and 1 <= x <= N/2 (N=" + std::to_string(N) + ", x=" + std::to_string(x) + ")");
    }
}

// Half-open [lo, hi).
struct Span {
    int64_t lo, hi;
    bool contains(int64_t q) const { return lo <= q && q < hi; }
};

// Size of the symmetric difference of up to three spans.
int64_t xor_size(const Span *spans, size_t k) {
    std::array<std::pair<int64_t, int>, 6> pts{};
    size_t m = 0;
    for (size_t i = 0; i < k; i++) {
        if (spans[i].lo >= spans[i].hi) continue;
        pts[m++] = {spans[i].lo, 1};
        pts[m++] = {spans[i].hi, 1};
    }
    std::sort(pts.begin(), pts.begin() + m);
    int64_t total = 0;
    int parity = 0;
    for (size_t i = 0; i < m; i++) {
        if (parity) total += pts[i].first - pts[i - 1].first;
        parity ^= 1;
    }
    return total;
}

PauliString z_span(size_t n, size_t lo, size_t hi) {
    PauliString p(n);
    for (size_t q = lo; q <= hi; q++) p.set(q, 'Z');
    return p;
}

PauliString extend(const PauliString &p, size_t n) {
    auto xs = p.x_words();
    auto zs = p.z_words();
    xs.resize((n + 63) / 64, 0);
    zs.resize((n + 63) / 64, 0);
    return PauliString::from_words(n, std::move(xs), std::move(zs), p.phase());
}

int64_t formula(size_t N_, size_t x_, bool corrected) {
    check_params(N_, x_);
    const int64_t N = static_cast<int64_t>(N_), x = static_cast<int64_t>(x_);
    const int64_t K = std::min((N - x - 1) / 2, N - 2 * x + 1);
    const int64_t before = N * x - x * (x - 1);
    int64_t inner = 1 - (before - 1);
    for (int64_t j = 1; j <= x - 1; j++) inner += 2 * j - (corrected ? before - 1 : before);
    for (int64_t i = 1; i <= K; i++) inner += ((2 + i) * x + i - 2) - (N * x + x + i - (x * x + i * x + 1));
    inner += N + x - K - 1;
    return md_edgesum_formula(N, x) + 2 * N * (N - 1) + 2 * inner;
}

}  // namespace

AuxMapping stabilizers(size_t N, size_t x) {
    check_params(N, x);
    AuxMapping m;
    m.N = N;
    m.x = x;
    m.p1_lo = x * (x - 1) + 1;
    m.p1_hi = x * N - 1;
    m.p2_lo = (N - x) * N;
    m.p2_hi = N * N - x * x + x - 2;
    size_t n = N * N + 2;
    m.s1 = z_span(n, m.p1_lo, m.p1_hi);
    m.s1.set(N * N, 'Z');
    m.s2 = z_span(n, m.p2_lo, m.p2_hi);
    m.s2.set(N * N + 1, 'Z');
    return m;
}

AuxChoice aux_choice(const AuxMapping &m, size_t a_, size_t b_) {
    int64_t a = static_cast<int64_t>(std::min(a_, b_)), b = static_cast<int64_t>(std::max(a_, b_));
    const Span interior{a + 1, b};
    const Span r1{static_cast<int64_t>(m.p1_lo), static_cast<int64_t>(m.p1_hi) + 1};
    const Span r2{static_cast<int64_t>(m.p2_lo), static_cast<int64_t>(m.p2_hi) + 1};
    // A term anticommutes with p_i iff exactly one endpoint lies in its span.
    const bool anti1 = r1.contains(a) != r1.contains(b);
    const bool anti2 = r2.contains(a) != r2.contains(b);
    AuxChoice best;
    bool have = false;
    for (int opt = 0; opt < 4; opt++) {
        bool u1 = opt & 1, u2 = opt & 2;
        Span chosen[3];
        size_t k = 0;
        chosen[k++] = interior;
        if (u1) chosen[k++] = r1;
        if (u2) chosen[k++] = r2;
        int64_t z = xor_size(chosen, k);
        // Endpoints carry X or Y whatever the stabilizers do; drop them from the Z count.
        for (int64_t e : {a, b}) {
            bool in = false;
            for (size_t i = 0; i < k; i++) in ^= chosen[i].contains(e);
            z -= in;
        }
        size_t w = static_cast<size_t>(2 + z + ((u1 || anti1) ? 1 : 0) + ((u2 || anti2) ? 1 : 0));
        if (!have || w < best.weight) {
            best = {u1, u2, w};
            have = true;
        }
    }
    return best;
}

AuxSummary aux_summary(size_t N, size_t x) {
    auto m = stabilizers(N, x);
    auto f = mitchison_durbin(N, x);
    AuxSummary s;
    s.N = N;
    s.x = x;
    for (size_t r = 0; r < N; r++) {
        for (size_t c = 0; c < N; c++) {
            size_t v = r * N + c;
            for (size_t u : {v + 1, v + N}) {
                if ((u == v + 1 && c + 1 == N) || (u == v + N && r + 1 == N)) continue;
                auto ch = aux_choice(m, f[v], f[u]);
                s.total_weight += static_cast<int64_t>(ch.weight);
                s.max_weight = std::max<int64_t>(s.max_weight, static_cast<int64_t>(ch.weight));
                s.multiplied += (ch.use1 || ch.use2);
                s.num_terms++;
            }
        }
    }
    s.apv = static_cast<double>(s.total_weight) / static_cast<double>(s.num_terms);
    return s;
}

AuxResult build_aux_hamiltonian(size_t N, size_t x) {
    AuxResult out;
    out.mapping = stabilizers(N, x);
    const auto &m = out.mapping;
    const size_t n = m.n_qubits();
    auto g = square_lattice(N);
    auto f = mitchison_durbin(N, x);
    out.hamiltonian.n_qubits = n;
    out.summary.N = N;
    out.summary.x = x;
    PauliString x1(n), x2(n);
    x1.set(N * N, 'X');
    x2.set(N * N + 1, 'X');
    for (const auto &e : g.edges()) {
        auto ch = aux_choice(m, f[e.a], f[e.b]);
        out.choices.push_back(ch);
        size_t term_weight = 0;
        for (auto &t : transform_hopping(f, e.a, e.b, e.coeff)) {
            PauliString op = extend(t.op, n);
            if (anticommutes(op, m.s1)) op = multiply(op, x1);
            if (anticommutes(op, m.s2)) op = multiply(op, x2);
            if (ch.use1) op = multiply(op, m.s1);
            if (ch.use2) op = multiply(op, m.s2);
            term_weight = op.weight();
            out.hamiltonian.terms.push_back({t.coeff, std::move(op)});
        }
        out.summary.total_weight += static_cast<int64_t>(term_weight);
        out.summary.max_weight = std::max<int64_t>(out.summary.max_weight, static_cast<int64_t>(term_weight));
        out.summary.multiplied += (ch.use1 || ch.use2);
        out.summary.num_terms++;
    }
    out.summary.apv = static_cast<double>(out.summary.total_weight) / static_cast<double>(out.summary.num_terms);
    return out;
}

int64_t total_weight_formula(size_t N, size_t x) { return formula(N, x, false); }

int64_t total_weight_formula_corrected(size_t N, size_t x) { return formula(N, x, true); }

size_t optimal_x_aux(size_t N) {
    if (N < 5) {
        // Too small for the closed form; scan the direct construction.
        if (N < 2) throw Error(ErrorKind::kInvalidSize, "aux mapping needs N >= 2");
        size_t best = 1;
        int64_t best_w = aux_summary(N, 1).total_weight;
        for (size_t x = 2; 2 * x <= N; x++) {
            int64_t w = aux_summary(N, x).total_weight;
            if (w < best_w) {
                best = x;
                best_w = w;
            }
        }
        return best;
    }
    double n = static_cast<double>(N);
    double x = std::round((7 + n + std::sqrt((15 * n * n - 18 * n - 53) / 3)) / 8);
    double lo = std::floor((n + 4) / 3) + 1;
    double hi = std::floor(n / 2);
    x = std::max(x, lo);
    x = std::min(x, hi);
    return static_cast<size_t>(x);
}

int64_t cnot_count_V(size_t N_, size_t x_) {
    check_params(N_, x_);
    const int64_t N = static_cast<int64_t>(N_), x = static_cast<int64_t>(x_);
    return 4 * (x * N - x * x + (x - 1)) + 2;
}

size_t x_scan_argmin(size_t N, bool corrected, bool with_cnot) {
    size_t best = 1;
    int64_t best_w = 0;
    for (size_t x = 1; 2 * x <= N; x++) {
        int64_t w = formula(N, x, corrected) + (with_cnot ? cnot_count_V(N, x) : 0);
        if (x == 1 || w < best_w) {
            best = x;
            best_w = w;
        }
    }
    return best;
}

}  // namespace fqm
