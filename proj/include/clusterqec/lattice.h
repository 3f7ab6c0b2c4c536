// Copyright 2026 The clusterqec Authors
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

#ifndef CLUSTERQEC_LATTICE_H
#define CLUSTERQEC_LATTICE_H

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "clusterqec/pauli_string.h"

namespace clusterqec {

enum class Boundary { kPeriodic, kOpen };

std::string boundary_name(Boundary b);
Boundary parse_boundary(const std::string& name);

/// A D-dimensional square grid. Vertices are linearized row-major with axis 0
/// varying fastest: index = i_0 + L_0 * (i_1 + L_1 * (i_2 + ...)). This order is
/// the generator order, and therefore the syndrome bit order.
class Lattice {
   public:
    Lattice(std::vector<size_t> lengths, std::vector<Boundary> boundaries);
    /// Same boundary on every axis.
    Lattice(std::vector<size_t> lengths, Boundary boundary);
    /// Hypercube: `dimension` axes of length `length`.
    static Lattice cubic(size_t dimension, size_t length, Boundary boundary = Boundary::kPeriodic);

    size_t dimension() const { return lengths_.size(); }
    const std::vector<size_t>& lengths() const { return lengths_; }
    const std::vector<Boundary>& boundaries() const { return boundaries_; }
    size_t num_vertices() const { return num_vertices_; }

    std::vector<size_t> coordinates(size_t index) const;
    size_t index(const std::vector<size_t>& coords) const;

    /// The 2D neighbor slots of `index`, ordered (axis 0 -1, axis 0 +1, axis 1 -1, ...).
    /// Absent slots (open-boundary edges) are std::nullopt.
    std::vector<std::optional<size_t>> neighbor_slots(size_t index) const;
    /// Existing neighbors, sorted and deduplicated.
    std::vector<size_t> neighbors(size_t index) const;

    /// Shortest-path edge count between two vertices.
    size_t hamming_distance(size_t v, size_t w) const;

    bool all_periodic() const;
    size_t min_length() const;

    bool operator==(const Lattice& other) const = default;

   private:
    std::vector<size_t> lengths_;
    std::vector<Boundary> boundaries_;
    std::vector<size_t> strides_;
    size_t num_vertices_ = 0;
};

/// Simple undirected graph with sorted, duplicate-free edges (u < v).
class Graph {
   public:
    Graph(size_t num_vertices, std::vector<std::pair<size_t, size_t>> edges);
    static Graph from_lattice(const Lattice& lattice);

    size_t num_vertices() const { return num_vertices_; }
    const std::vector<std::pair<size_t, size_t>>& edges() const { return edges_; }
    std::vector<size_t> neighbors(size_t v) const;

    bool operator==(const Graph& other) const = default;

   private:
    size_t num_vertices_;
    std::vector<std::pair<size_t, size_t>> edges_;
};

/// Reads "u v" pairs (0-based), one per line; '#' starts a comment. When
/// `num_vertices` is not given it is one more than the largest index seen.
Graph read_edge_list(std::istream& in, std::optional<size_t> num_vertices = std::nullopt);

struct HGate {
    size_t qubit;
    bool operator==(const HGate&) const = default;
};
struct CZGate {
    size_t a;
    size_t b;
    bool operator==(const CZGate&) const = default;
};
/// Measure in the X basis and keep only the +1 branch.
struct MeasureXPostselect {
    size_t qubit;
    bool operator==(const MeasureXPostselect&) const = default;
};
using Gate = std::variant<HGate, CZGate, MeasureXPostselect>;

class Circuit {
   public:
    explicit Circuit(size_t num_qubits) : num_qubits_(num_qubits) {}

    size_t num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }

    Circuit& h(size_t qubit);
    Circuit& cz(size_t a, size_t b);
    Circuit& measure_x_postselect(size_t qubit);
    Circuit& append(const Circuit& other);

    size_t count_h() const;
    size_t count_cz() const;

   private:
    void check_qubit(size_t q) const;

    size_t num_qubits_;
    std::vector<Gate> gates_;
};

/// X on v and Z on every existing neighbor slot of v, one generator per vertex in
/// linear-index order.
std::vector<PauliString> cluster_generators(const Lattice& lattice);

/// 1D generators Z_{i-p}..Z_{i-1} X_i Z_{i+1}..Z_{i+p}. Periodic chains need
/// n > 2p; open chains drop out-of-range sites.
std::vector<PauliString> extended_generators(size_t num_qubits, size_t range, Boundary boundary);

/// Edges (i, i+k) for k = 1..range, the interaction graph of extended_generators.
Graph extended_graph(size_t num_qubits, size_t range, Boundary boundary);

/// X_v prod_{w in N(v)} Z_w for each vertex v.
std::vector<PauliString> graph_generators(const Graph& graph);

/// Generators of the n-qubit GHZ state: X..X and Z_i Z_{i+1}.
std::vector<PauliString> ghz_generators(size_t num_qubits);

/// H on every qubit, then one CZ per edge in sorted edge order.
Circuit graph_state_circuit(const Graph& graph);

}  // namespace clusterqec

#endif
