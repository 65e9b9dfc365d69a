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

#include "fqm/schemes.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "fqm/errors.h"

namespace fqm {

namespace {

void check_side(size_t N) {
    if (N == 0) throw Error(ErrorKind::kInvalidSize, "lattice side must be >= 1");
}

// Row-major or boustrophedon order on a side x side block.
size_t local_index(size_t r, size_t c, size_t side, bool snake) {
    return r * side + ((snake && (r & 1)) ? side - 1 - c : c);
}

}  // namespace

EnumerationScheme z_pattern(size_t N) {
    check_side(N);
    std::vector<size_t> f(N * N);
    std::iota(f.begin(), f.end(), size_t{0});
    return EnumerationScheme(std::move(f));
}

EnumerationScheme s_pattern(size_t N) {
    check_side(N);
    std::vector<size_t> f(N * N);
    for (size_t r = 0; r < N; r++) {
        for (size_t c = 0; c < N; c++) f[r * N + c] = local_index(r, c, N, true);
    }
    return EnumerationScheme(std::move(f));
}

EnumerationScheme diagonal_pattern(size_t N) {
    check_side(N);
    std::vector<size_t> f(N * N);
    size_t label = 0;
    for (size_t k = 0; k + 1 < 2 * N; k++) {
        size_t r0 = k < N ? 0 : k - N + 1;
        for (size_t r = r0; r <= std::min(k, N - 1); r++) f[r * N + (k - r)] = label++;
    }
    return EnumerationScheme(std::move(f));
}

size_t optimal_x_md(size_t N) {
    double n = static_cast<double>(N);
    double x = std::round(n - 0.5 * std::sqrt(2 * n * n - 2 * n + 4.0 / 3.0));
    double hi = std::max<double>(1.0, std::floor(n / 2));
    return static_cast<size_t>(std::clamp(x, 1.0, hi));
}

// Region U is the top-left x-wide strip down to height x plus a staircase
// whose row at height y < x has width y - 1. U is numbered first: the x-by-x
// corner square shell by shell (row part, then column part), then the rest of
// U row by row. V is the point reflection of U carrying the top labels, and
// the middle region is numbered column by column.
EnumerationScheme mitchison_durbin(size_t N, std::optional<size_t> x_opt) {
    if (N < 2) throw Error(ErrorKind::kInvalidSize, "mitchison_durbin needs N >= 2");
    size_t x = x_opt ? *x_opt : optimal_x_md(N);
    if (x < 1 || 2 * x > N) {
        throw Error(ErrorKind::kInvalidSize, "x = " + std::to_string(x) + " outside [1, N/2]");
    }
    constexpr size_t kUnset = SIZE_MAX;
    std::vector<size_t> g(N * N, kUnset);
    std::vector<char> in_u(N * N, 0);
    for (size_t r = 0; r < N; r++) {
        size_t y = N - r;
        size_t w = y >= x ? x : y - 1;
        for (size_t c = 0; c < w; c++) in_u[r * N + c] = 1;
    }
    size_t label = 0;
    for (size_t s = 0; s < x; s++) {
        for (size_t c = 0; c < s; c++) g[s * N + c] = label++;
        for (size_t r = 0; r <= s; r++) g[r * N + s] = label++;
    }
    for (size_t r = x; r < N; r++) {
        for (size_t c = 0; c < N; c++) {
            if (in_u[r * N + c]) g[r * N + c] = label++;
        }
    }
    size_t last = N * N - 1;
    for (size_t v = 0; v < N * N; v++) {
        if (in_u[last - v]) g[v] = last - g[last - v];
    }
    for (size_t c = 0; c < N; c++) {
        for (size_t r = 0; r < N; r++) {
            if (g[r * N + c] == kUnset) g[r * N + c] = label++;
        }
    }
    return EnumerationScheme(std::move(g));
}

CellularVariant parse_cellular_variant(const std::string &name) {
    if (name == "Z'" || name == "zp" || name == "czp") return CellularVariant::kZPrime;
    if (name == "S'" || name == "sp" || name == "csp") return CellularVariant::kSPrime;
    if (name == "Z" || name == "z" || name == "cz") return CellularVariant::kZ;
    if (name == "S" || name == "s" || name == "cs") return CellularVariant::kS;
    throw Error(ErrorKind::kPrecondition, "unknown cellular variant '" + name + "'");
}

EnumerationScheme cellular_pattern(size_t n, size_t N, CellularVariant variant) {
    if (n < 2 || N < 1) throw Error(ErrorKind::kInvalidSize, "cellular pattern needs n >= 2 and N >= 1");
    if (variant == CellularVariant::kZ) return z_pattern(n * N);
    if (variant == CellularVariant::kS) return s_pattern(n * N);
    bool snake = variant == CellularVariant::kSPrime;
    size_t M = n * N;
    std::vector<size_t> f(M * M);
    for (size_t R = 0; R < M; R++) {
        for (size_t C = 0; C < M; C++) {
            size_t cell = local_index(R / n, C / n, N, snake);
            f[R * M + C] = cell * n * n + local_index(R % n, C % n, n, snake);
        }
    }
    return EnumerationScheme(std::move(f));
}

EnumerationScheme random_scheme(size_t num_modes, uint64_t seed) {
    std::vector<size_t> f(num_modes);
    std::iota(f.begin(), f.end(), size_t{0});
    std::mt19937_64 rng(seed);
    // Fisher-Yates with explicit modulo-free draws keeps output identical across standard libraries.
    for (size_t k = num_modes; k > 1; k--) {
        uint64_t bound = k;
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t r;
        do {
            r = rng();
        } while (r >= limit);
        std::swap(f[k - 1], f[r % bound]);
    }
    return EnumerationScheme(std::move(f));
}

EnumerationScheme hv_normalize(const EnumerationScheme &f, size_t N) {
    if (f.size() != N * N) throw Error(ErrorKind::kGeometry, "scheme is not over an N x N lattice");
    std::vector<size_t> g = f.values();
    for (size_t r = 0; r < N; r++) std::sort(g.begin() + r * N, g.begin() + (r + 1) * N);
    std::vector<size_t> col(N);
    for (size_t c = 0; c < N; c++) {
        for (size_t r = 0; r < N; r++) col[r] = g[r * N + c];
        std::sort(col.begin(), col.end());
        for (size_t r = 0; r < N; r++) g[r * N + c] = col[r];
    }
    return EnumerationScheme(std::move(g));
}

bool is_hv_ordered(const EnumerationScheme &f, size_t N) {
    if (f.size() != N * N) return false;
    for (size_t r = 0; r < N; r++) {
        for (size_t c = 0; c < N; c++) {
            if (c + 1 < N && f[r * N + c] > f[r * N + c + 1]) return false;
            if (r + 1 < N && f[r * N + c] > f[(r + 1) * N + c]) return false;
        }
    }
    return true;
}

size_t require_square(const InteractionGraph &g) {
    if (g.geometry().kind != Geometry::Kind::kSquare) {
        throw Error(ErrorKind::kGeometry, "operation needs a square lattice graph");
    }
    return g.geometry().side;
}

}  // namespace fqm
