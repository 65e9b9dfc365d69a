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
#include <string>
#include <unordered_map>
#include <vector>

namespace fqm {

struct Geometry {
    enum class Kind { kGeneric, kSquare, kCellular };
    Kind kind = Kind::kGeneric;
    // Square: side = N. Cellular: cell = n, side = N, vertices laid out on the
    // global (nN)x(nN) grid in row-major order.
    size_t cell = 0;
    size_t side = 0;

    // Side of the underlying global grid, 0 for generic graphs.
    size_t grid_side() const {
        if (kind == Kind::kSquare) return side;
        if (kind == Kind::kCellular) return cell * side;
        return 0;
    }
    bool operator==(const Geometry &o) const = default;
};

struct Edge {
    size_t a;
    size_t b;
    std::complex<double> coeff{1.0, 0.0};
    bool operator==(const Edge &o) const = default;
};

// Fermionic interaction graph: modes are vertices, hopping terms are edges.
class InteractionGraph {
  public:
    InteractionGraph() = default;
    // Validates: distinct labels, no self loops, no duplicate undirected edges.
    InteractionGraph(std::vector<std::string> labels, std::vector<Edge> edges, Geometry geometry = {});

    size_t num_modes() const { return labels_.size(); }
    size_t num_edges() const { return edges_.size(); }
    const std::vector<std::string> &labels() const { return labels_; }
    const std::vector<Edge> &edges() const { return edges_; }
    const Geometry &geometry() const { return geometry_; }
    // Throws kDanglingEndpoint for unknown labels.
    size_t index_of(const std::string &label) const;
    bool has_label(const std::string &label) const { return index_.count(label) > 0; }

    bool operator==(const InteractionGraph &o) const {
        return labels_ == o.labels_ && edges_ == o.edges_ && geometry_ == o.geometry_;
    }

  private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    Geometry geometry_;
    std::unordered_map<std::string, size_t> index_;
};

// Bijection from modes (by vertex index) to qubit indices 0..n-1.
class EnumerationScheme {
  public:
    EnumerationScheme() = default;
    // Throws kSchemeMismatch unless values form a permutation of 0..n-1.
    explicit EnumerationScheme(std::vector<size_t> values);

    size_t size() const { return f_.size(); }
    size_t operator[](size_t v) const { return f_[v]; }
    size_t at(size_t v) const { return f_.at(v); }
    const std::vector<size_t> &values() const { return f_; }
    // inverse()[q] is the vertex placed on qubit q.
    std::vector<size_t> inverse() const;
    bool operator==(const EnumerationScheme &o) const = default;

  private:
    std::vector<size_t> f_;
};

bool is_bijection(const std::vector<size_t> &values);

std::string grid_label(size_t row, size_t col);
InteractionGraph square_lattice(size_t N);
// N x N grid of n x n cells. Each cell's top-left vertex is joined to the
// adjacent vertex of the left cell and of the upper cell.
InteractionGraph cellular_lattice(size_t n, size_t N);
InteractionGraph path_graph(size_t n);

// Throws kSchemeMismatch unless the scheme covers exactly the graph's modes.
void check_scheme(const InteractionGraph &g, const EnumerationScheme &f);

// JSON forms:
//   graph:  {"labels": [...], "edges": [[a, b, [re, im]], ...], "geometry": {...}}
//   scheme: {"assignment": {"label": index, ...}}
std::string graph_to_json(const InteractionGraph &g);
InteractionGraph graph_from_json(const std::string &text);
void save_graph(const InteractionGraph &g, const std::string &path);
InteractionGraph load_graph(const std::string &path);

std::string scheme_to_json(const InteractionGraph &g, const EnumerationScheme &f);
EnumerationScheme scheme_from_json(const InteractionGraph &g, const std::string &text);
void save_scheme(const InteractionGraph &g, const EnumerationScheme &f, const std::string &path);
EnumerationScheme load_scheme(const InteractionGraph &g, const std::string &path);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &data);

}  // namespace fqm
