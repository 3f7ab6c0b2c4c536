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

#include "clusterqec/lattice.h"

#include <algorithm>
#include <istream>
#include <sstream>

#include "clusterqec/errors.h"

namespace clusterqec {

std::string boundary_name(Boundary b) { return b == Boundary::kPeriodic ? "pbc" : "obc"; }

Boundary parse_boundary(const std::string& name) {
    if (name == "pbc" || name == "PBC" || name == "periodic") {
        return Boundary::kPeriodic;
    }
    if (name == "obc" || name == "OBC" || name == "open") {
        return Boundary::kOpen;
    }
    throw InvalidInput("unknown boundary condition \"" + name + "\" (expected pbc or obc)");
}

Lattice::Lattice(std::vector<size_t> lengths, std::vector<Boundary> boundaries)
    : lengths_(std::move(lengths)), boundaries_(std::move(boundaries)) {
    if (lengths_.empty()) {
        throw InvalidInput("lattice dimension must be at least 1");
    }
    if (boundaries_.size() != lengths_.size()) {
        throw InvalidInput("need one boundary condition per axis");
    }
    num_vertices_ = 1;
    for (size_t axis = 0; axis < lengths_.size(); axis++) {
        if (lengths_[axis] == 0) {
            throw InvalidInput("lattice axis lengths must be positive");
        }
        // Below 3 sites a periodic axis would make v-e and v+e coincide.
        if (boundaries_[axis] == Boundary::kPeriodic && lengths_[axis] < 3) {
            throw InvalidInput("periodic axes need at least 3 sites");
        }
        strides_.push_back(num_vertices_);
        num_vertices_ *= lengths_[axis];
    }
}

Lattice::Lattice(std::vector<size_t> lengths, Boundary boundary)
    : Lattice(lengths, std::vector<Boundary>(lengths.size(), boundary)) {}

Lattice Lattice::cubic(size_t dimension, size_t length, Boundary boundary) {
    return Lattice(std::vector<size_t>(dimension, length), boundary);
}

std::vector<size_t> Lattice::coordinates(size_t index) const {
    std::vector<size_t> coords(dimension());
    for (size_t axis = 0; axis < dimension(); axis++) {
        coords[axis] = index % lengths_[axis];
        index /= lengths_[axis];
    }
    return coords;
}

size_t Lattice::index(const std::vector<size_t>& coords) const {
    size_t result = 0;
    for (size_t axis = 0; axis < dimension(); axis++) {
        result += coords[axis] * strides_[axis];
    }
    return result;
}

std::vector<std::optional<size_t>> Lattice::neighbor_slots(size_t index) const {
    std::vector<std::optional<size_t>> slots;
    slots.reserve(2 * dimension());
    auto coords = coordinates(index);
    for (size_t axis = 0; axis < dimension(); axis++) {
        size_t c = coords[axis];
        size_t len = lengths_[axis];
        bool periodic = boundaries_[axis] == Boundary::kPeriodic;
        if (c > 0) {
            slots.push_back(index - strides_[axis]);
        } else if (periodic) {
            slots.push_back(index + (len - 1) * strides_[axis]);
        } else {
            slots.push_back(std::nullopt);
        }
        if (c + 1 < len) {
            slots.push_back(index + strides_[axis]);
        } else if (periodic) {
            slots.push_back(index - (len - 1) * strides_[axis]);
        } else {
            slots.push_back(std::nullopt);
        }
    }
    return slots;
}

std::vector<size_t> Lattice::neighbors(size_t index) const {
    std::vector<size_t> result;
    for (const auto& slot : neighbor_slots(index)) {
        if (slot) {
            result.push_back(*slot);
        }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

size_t Lattice::hamming_distance(size_t v, size_t w) const {
    auto a = coordinates(v);
    auto b = coordinates(w);
    size_t total = 0;
    for (size_t axis = 0; axis < dimension(); axis++) {
        size_t d = a[axis] > b[axis] ? a[axis] - b[axis] : b[axis] - a[axis];
        if (boundaries_[axis] == Boundary::kPeriodic) {
            d = std::min(d, lengths_[axis] - d);
        }
        total += d;
    }
    return total;
}

bool Lattice::all_periodic() const {
    return std::all_of(boundaries_.begin(), boundaries_.end(), [](Boundary b) { return b == Boundary::kPeriodic; });
}

size_t Lattice::min_length() const { return *std::min_element(lengths_.begin(), lengths_.end()); }

Graph::Graph(size_t num_vertices, std::vector<std::pair<size_t, size_t>> edges) : num_vertices_(num_vertices) {
    for (auto [u, v] : edges) {
        if (u == v) {
            throw InvalidInput("graph self-loop at vertex " + std::to_string(u));
        }
        if (u >= num_vertices || v >= num_vertices) {
            throw InvalidInput("graph edge (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") out of range for " + std::to_string(num_vertices) + " vertices");
        }
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Graph Graph::from_lattice(const Lattice& lattice) {
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t v = 0; v < lattice.num_vertices(); v++) {
        for (size_t w : lattice.neighbors(v)) {
            if (v < w) {
                edges.emplace_back(v, w);
            }
        }
    }
    return Graph(lattice.num_vertices(), std::move(edges));
}

std::vector<size_t> Graph::neighbors(size_t v) const {
    std::vector<size_t> result;
    for (auto [a, b] : edges_) {
        if (a == v) {
            result.push_back(b);
        } else if (b == v) {
            result.push_back(a);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

Graph read_edge_list(std::istream& in, std::optional<size_t> num_vertices) {
    std::vector<std::pair<size_t, size_t>> edges;
    size_t max_index = 0;
    bool any = false;
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        line_number++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        long long u = 0;
        long long v = 0;
        if (!(fields >> u)) {
            continue;
        }
        std::string rest;
        if (!(fields >> v) || (fields >> rest) || u < 0 || v < 0) {
            throw InvalidInput("edge list line " + std::to_string(line_number) +
                               ": expected two non-negative integers");
        }
        edges.emplace_back(static_cast<size_t>(u), static_cast<size_t>(v));
        max_index = std::max({max_index, static_cast<size_t>(u), static_cast<size_t>(v)});
        any = true;
    }
    size_t n = num_vertices.value_or(any ? max_index + 1 : 0);
    return Graph(n, std::move(edges));
}

void Circuit::check_qubit(size_t q) const {
    if (q >= num_qubits_) {
        throw InvalidInput("gate qubit " + std::to_string(q) + " out of range for width " +
                           std::to_string(num_qubits_));
    }
}

Circuit& Circuit::h(size_t qubit) {
    check_qubit(qubit);
    gates_.push_back(HGate{qubit});
    return *this;
}

Circuit& Circuit::cz(size_t a, size_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw InvalidInput("CZ endpoints must differ");
    }
    gates_.push_back(CZGate{a, b});
    return *this;
}

Circuit& Circuit::measure_x_postselect(size_t qubit) {
    check_qubit(qubit);
    gates_.push_back(MeasureXPostselect{qubit});
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.num_qubits_ > num_qubits_) {
        throw InvalidInput("appended circuit is wider than the target");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

size_t Circuit::count_h() const {
    return std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return std::holds_alternative<HGate>(g); });
}

size_t Circuit::count_cz() const {
    return std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return std::holds_alternative<CZGate>(g); });
}

std::vector<PauliString> cluster_generators(const Lattice& lattice) {
    const size_t n = lattice.num_vertices();
    std::vector<PauliString> generators;
    generators.reserve(n);
    for (size_t v = 0; v < n; v++) {
        PauliString s = PauliString::single(n, v, Pauli::X);
        for (const auto& slot : lattice.neighbor_slots(v)) {
            if (slot) {
                s *= PauliString::single(n, *slot, Pauli::Z);
            }
        }
        generators.push_back(std::move(s));
    }
    return generators;
}

Graph extended_graph(size_t num_qubits, size_t range, Boundary boundary) {
    if (range == 0) {
        throw InvalidInput("extended cluster range must be at least 1");
    }
    if (boundary == Boundary::kPeriodic && num_qubits <= 2 * range) {
        throw InvalidInput("periodic extended cluster with range " + std::to_string(range) + " needs more than " +
                           std::to_string(2 * range) + " qubits");
    }
    if (num_qubits < 2) {
        throw InvalidInput("extended cluster needs at least 2 qubits");
    }
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t i = 0; i < num_qubits; i++) {
        for (size_t k = 1; k <= range; k++) {
            if (i + k < num_qubits) {
                edges.emplace_back(i, i + k);
            } else if (boundary == Boundary::kPeriodic) {
                edges.emplace_back(i, (i + k) % num_qubits);
            }
        }
    }
    return Graph(num_qubits, std::move(edges));
}

std::vector<PauliString> extended_generators(size_t num_qubits, size_t range, Boundary boundary) {
    return graph_generators(extended_graph(num_qubits, range, boundary));
}

std::vector<PauliString> graph_generators(const Graph& graph) {
    const size_t n = graph.num_vertices();
    std::vector<PauliString> generators;
    generators.reserve(n);
    for (size_t v = 0; v < n; v++) {
        generators.push_back(PauliString::single(n, v, Pauli::X));
    }
    for (auto [u, v] : graph.edges()) {
        generators[u].set(v, Pauli::Z);
        generators[v].set(u, Pauli::Z);
    }
    return generators;
}

std::vector<PauliString> ghz_generators(size_t num_qubits) {
    if (num_qubits < 2) {
        throw InvalidInput("GHZ state needs at least 2 qubits");
    }
    std::vector<PauliString> generators;
    PauliString all_x(num_qubits);
    for (size_t j = 0; j < num_qubits; j++) {
        all_x.set(j, Pauli::X);
    }
    generators.push_back(all_x);
    for (size_t j = 0; j + 1 < num_qubits; j++) {
        PauliString zz(num_qubits);
        zz.set(j, Pauli::Z);
        zz.set(j + 1, Pauli::Z);
        generators.push_back(zz);
    }
    return generators;
}

Circuit graph_state_circuit(const Graph& graph) {
    Circuit circuit(graph.num_vertices());
    for (size_t q = 0; q < graph.num_vertices(); q++) {
        circuit.h(q);
    }
    for (auto [u, v] : graph.edges()) {
        circuit.cz(u, v);
    }
    return circuit;
}

}  // namespace clusterqec
