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

#include "fqm/graph.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "fqm/errors.h"
#include "json.hpp"

namespace fqm {

using json = nlohmann::json;

InteractionGraph::InteractionGraph(std::vector<std::string> labels, std::vector<Edge> edges, Geometry geometry)
    : labels_(std::move(labels)), edges_(std::move(edges)), geometry_(geometry) {
    index_.reserve(labels_.size());
    for (size_t k = 0; k < labels_.size(); k++) {
        if (!index_.emplace(labels_[k], k).second) {
            throw Error(ErrorKind::kDuplicateLabel, "duplicate label '" + labels_[k] + "'");
        }
    }
    std::set<std::pair<size_t, size_t>> seen;
    for (const auto &e : edges_) {
        if (e.a >= labels_.size() || e.b >= labels_.size()) {
            throw Error(ErrorKind::kDanglingEndpoint, "edge endpoint out of range");
        }
        if (e.a == e.b) throw Error(ErrorKind::kInvalidGraph, "self loop on '" + labels_[e.a] + "'");
        if (!seen.emplace(std::min(e.a, e.b), std::max(e.a, e.b)).second) {
            throw Error(ErrorKind::kInvalidGraph,
                        "duplicate edge '" + labels_[e.a] + "' - '" + labels_[e.b] + "'");
        }
    }
    size_t gs = geometry_.grid_side();
    if (gs && gs * gs != labels_.size()) {
        throw Error(ErrorKind::kGeometry, "geometry does not match the number of modes");
    }
}

size_t InteractionGraph::index_of(const std::string &label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw Error(ErrorKind::kDanglingEndpoint, "unknown label '" + label + "'");
    return it->second;
}

bool is_bijection(const std::vector<size_t> &values) {
    std::vector<char> hit(values.size(), 0);
    for (size_t v : values) {
        if (v >= values.size() || hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

EnumerationScheme::EnumerationScheme(std::vector<size_t> values) : f_(std::move(values)) {
    if (!is_bijection(f_)) throw Error(ErrorKind::kSchemeMismatch, "enumeration scheme is not a bijection");
}

std::vector<size_t> EnumerationScheme::inverse() const {
    std::vector<size_t> inv(f_.size());
    for (size_t v = 0; v < f_.size(); v++) inv[f_[v]] = v;
    return inv;
}

std::string grid_label(size_t row, size_t col) { return "r" + std::to_string(row) + "c" + std::to_string(col); }

namespace {

std::vector<std::string> grid_labels(size_t side) {
    std::vector<std::string> labels;
    labels.reserve(side * side);
    for (size_t r = 0; r < side; r++) {
        for (size_t c = 0; c < side; c++) labels.push_back(grid_label(r, c));
    }
    return labels;
}

}  // namespace

InteractionGraph square_lattice(size_t N) {
    if (N == 0) throw Error(ErrorKind::kInvalidSize, "lattice side must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(2 * N * (N - 1));
    for (size_t r = 0; r < N; r++) {
        for (size_t c = 0; c < N; c++) {
            size_t v = r * N + c;
            if (c + 1 < N) edges.push_back({v, v + 1});
            if (r + 1 < N) edges.push_back({v, v + N});
        }
    }
    return InteractionGraph(grid_labels(N), std::move(edges), {Geometry::Kind::kSquare, 0, N});
}

InteractionGraph cellular_lattice(size_t n, size_t N) {
    if (n < 2 || N < 1) throw Error(ErrorKind::kInvalidSize, "cellular lattice needs n >= 2 and N >= 1");
    size_t M = n * N;
    std::vector<Edge> edges;
    edges.reserve(N * N * 2 * n * (n - 1) + 2 * N * (N - 1));
    for (size_t R = 0; R < M; R++) {
        for (size_t C = 0; C < M; C++) {
            size_t v = R * M + C;
            if ((C + 1) % n != 0) edges.push_back({v, v + 1});
            if ((R + 1) % n != 0) edges.push_back({v, v + M});
            // Inter-cell edges hang off each cell's top-left corner.
            if (R % n == 0 && C % n == 0) {
                if (C > 0) edges.push_back({v, v - 1});
                if (R > 0) edges.push_back({v, v - M});
            }
        }
    }
    return InteractionGraph(grid_labels(M), std::move(edges), {Geometry::Kind::kCellular, n, N});
}

InteractionGraph path_graph(size_t n) {
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    for (size_t k = 0; k < n; k++) {
        labels.push_back("m" + std::to_string(k));
        if (k) edges.push_back({k - 1, k});
    }
    return InteractionGraph(std::move(labels), std::move(edges));
}

void check_scheme(const InteractionGraph &g, const EnumerationScheme &f) {
    if (f.size() != g.num_modes()) {
        throw Error(ErrorKind::kSchemeMismatch, "scheme covers " + std::to_string(f.size()) + " modes, graph has " +
                                                    std::to_string(g.num_modes()));
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::kParse, "cannot write '" + path + "'");
    out << data;
}

namespace {

json geometry_json(const Geometry &g) {
    switch (g.kind) {
        case Geometry::Kind::kSquare:
            return {{"kind", "square"}, {"side", g.side}};
        case Geometry::Kind::kCellular:
            return {{"kind", "cellular"}, {"cell", g.cell}, {"side", g.side}};
        default:
            return {{"kind", "generic"}};
    }
}

Geometry geometry_from(const json &j) {
    Geometry g;
    if (j.is_null()) return g;
    std::string kind = j.value("kind", "generic");
    if (kind == "square") {
        g.kind = Geometry::Kind::kSquare;
        g.side = j.at("side").get<size_t>();
    } else if (kind == "cellular") {
        g.kind = Geometry::Kind::kCellular;
        g.cell = j.at("cell").get<size_t>();
        g.side = j.at("side").get<size_t>();
    } else if (kind != "generic") {
        throw Error(ErrorKind::kParse, "unknown geometry kind '" + kind + "'");
    }
    return g;
}

json parse_json(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::kParse, std::string("json parse error: ") + e.what());
    }
}

}  // namespace

std::string graph_to_json(const InteractionGraph &g) {
    json j;
    j["labels"] = g.labels();
    json edges = json::array();
    for (const auto &e : g.edges()) {
        edges.push_back({g.labels()[e.a], g.labels()[e.b], {e.coeff.real(), e.coeff.imag()}});
    }
    j["edges"] = std::move(edges);
    j["geometry"] = geometry_json(g.geometry());
    return j.dump() + "\n";
}

InteractionGraph graph_from_json(const std::string &text) {
    json j = parse_json(text);
    try {
        auto labels = j.at("labels").get<std::vector<std::string>>();
        std::unordered_map<std::string, size_t> index;
        for (size_t k = 0; k < labels.size(); k++) {
            if (!index.emplace(labels[k], k).second) {
                throw Error(ErrorKind::kDuplicateLabel, "duplicate label '" + labels[k] + "'");
            }
        }
        std::vector<Edge> edges;
        for (const auto &e : j.value("edges", json::array())) {
            auto a = e.at(0).get<std::string>();
            auto b = e.at(1).get<std::string>();
            auto ia = index.find(a), ib = index.find(b);
            if (ia == index.end() || ib == index.end()) {
                throw Error(ErrorKind::kDanglingEndpoint,
                            "edge references unknown label '" + (ia == index.end() ? a : b) + "'");
            }
            std::complex<double> c{1.0, 0.0};
            if (e.size() > 2) {
                const auto &cj = e.at(2);
                c = cj.is_array() ? std::complex<double>{cj.at(0).get<double>(), cj.at(1).get<double>()}
                                  : std::complex<double>{cj.get<double>(), 0.0};
            }
            edges.push_back({ia->second, ib->second, c});
        }
        return InteractionGraph(std::move(labels), std::move(edges),
                                geometry_from(j.contains("geometry") ? j["geometry"] : json()));
    } catch (const json::exception &e) {
        throw Error(ErrorKind::kParse, std::string("malformed graph json: ") + e.what());
    }
}

void save_graph(const InteractionGraph &g, const std::string &path) { write_file(path, graph_to_json(g)); }

InteractionGraph load_graph(const std::string &path) { return graph_from_json(read_file(path)); }

std::string scheme_to_json(const InteractionGraph &g, const EnumerationScheme &f) {
    check_scheme(g, f);
    // Keep label order rather than json's sorted map order.
    std::string out = "{\"assignment\":{";
    for (size_t v = 0; v < g.num_modes(); v++) {
        if (v) out += ',';
        out += json(g.labels()[v]).dump() + ":" + std::to_string(f[v]);
    }
    return out + "}}\n";
}

EnumerationScheme scheme_from_json(const InteractionGraph &g, const std::string &text) {
    json j = parse_json(text);
    try {
        const auto &a = j.at("assignment");
        if (a.size() != g.num_modes()) {
            throw Error(ErrorKind::kSchemeMismatch, "scheme assigns " + std::to_string(a.size()) +
                                                        " labels, graph has " + std::to_string(g.num_modes()));
        }
        std::vector<size_t> values(g.num_modes());
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (!g.has_label(it.key())) {
                throw Error(ErrorKind::kSchemeMismatch, "scheme label '" + it.key() + "' not in graph");
            }
            values[g.index_of(it.key())] = it.value().get<size_t>();
        }
        return EnumerationScheme(std::move(values));
    } catch (const json::exception &e) {
        throw Error(ErrorKind::kParse, std::string("malformed scheme json: ") + e.what());
    }
}

void save_scheme(const InteractionGraph &g, const EnumerationScheme &f, const std::string &path) {
    write_file(path, scheme_to_json(g, f));
}

EnumerationScheme load_scheme(const InteractionGraph &g, const std::string &path) {
    return scheme_from_json(g, read_file(path));
}

}  // namespace fqm
