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

#include "clusterqec/encoding.h"

#include <algorithm>
#include <cmath>

#include "clusterqec/errors.h"
#include "clusterqec/parallel.h"

namespace clusterqec {
namespace {

void check_amplitudes(Complex alpha, Complex beta) {
    double norm = std::norm(alpha) + std::norm(beta);
    if (std::abs(norm - 1.0) > 1e-9) {
        throw InvalidInput("encoding amplitudes are not normalized: |alpha|^2 + |beta|^2 = " + std::to_string(norm));
    }
}

std::vector<QubitSubset> family_members(const Lattice& lattice, size_t k, SubsetFamily family) {
    const size_t n = lattice.num_vertices();
    std::vector<QubitSubset> out;
    if (family == SubsetFamily::kContiguous) {
        const bool wrap = lattice.all_periodic() && k < n;
        const size_t starts = wrap ? n : n - k + 1;
        for (size_t s = 0; s < starts; s++) {
            std::vector<size_t> q;
            for (size_t j = 0; j < k; j++) {
                q.push_back((s + j) % n);
            }
            out.emplace_back(std::move(q), n);
        }
        std::sort(out.begin(), out.end(),
                  [](const QubitSubset& a, const QubitSubset& b) { return a.qubits() < b.qubits(); });
        return out;
    }
    std::vector<size_t> combo(k);
    for (size_t i = 0; i < k; i++) {
        combo[i] = i;
    }
    while (true) {
        out.emplace_back(combo, n);
        size_t i = k;
        while (i > 0 && combo[i - 1] == n - k + i - 1) {
            i--;
        }
        if (i == 0) {
            break;
        }
        combo[i - 1]++;
        for (size_t j = i; j < k; j++) {
            combo[j] = combo[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace

LogicalEncoding::LogicalEncoding(StabilizerGroup base, std::optional<Graph> graph, QubitSubset a, Complex alpha,
                                 Complex beta)
    : base_(std::move(base)), graph_(std::move(graph)), a_(std::move(a)), alpha_(alpha), beta_(beta) {
    check_amplitudes(alpha_, beta_);
    if (a_.size() == 0) {
        throw InvalidInput("logical subset A must be nonempty");
    }
    if (a_.num_qubits() != base_.num_qubits()) {
        throw DimensionError("subset A is defined on " + std::to_string(a_.num_qubits()) +
                             " qubits; base state has " + std::to_string(base_.num_qubits()));
    }
    z_a_ = PauliString::on_qubits(base_.num_qubits(), a_.qubits(), Pauli::Z);
    if (base_.decompose(z_a_)) {
        throw InvalidInput("Z_A is in the base stabilizer group up to sign, so Z_A|cs> is not orthogonal to |cs>");
    }
}

LogicalEncoding LogicalEncoding::from_graph(const Graph& graph, QubitSubset a, Complex alpha, Complex beta) {
    auto base = StabilizerGroup::from_generators(graph.num_vertices(), graph_generators(graph));
    return LogicalEncoding(std::move(base), graph, std::move(a), alpha, beta);
}

LogicalEncoding LogicalEncoding::from_group(StabilizerGroup base, QubitSubset a, Complex alpha, Complex beta) {
    return LogicalEncoding(std::move(base), std::nullopt, std::move(a), alpha, beta);
}

EncodedStates encode_statevector(const LogicalEncoding& enc) {
    const size_t n = enc.base().num_qubits();
    if (n > kMaxEncodeQubits) {
        throw ResourceLimit("statevector encoding supports at most " + std::to_string(kMaxEncodeQubits) + " qubits");
    }
    if (!enc.base().is_state()) {
        throw InvalidInput("encoding needs a base stabilizer state (q == n)");
    }
    const size_t dim = size_t{1} << n;
    const size_t ancilla = n;

    StateVector cs;
    if (enc.graph()) {
        cs = simulate(graph_state_circuit(*enc.graph()), zero_state(n)).state;
    } else {
        cs = state_vector(enc.base());
    }

    StateVector joint = StateVector::Zero(static_cast<Eigen::Index>(2 * dim));
    joint.head(static_cast<Eigen::Index>(dim)) = enc.alpha() * cs;
    joint.tail(static_cast<Eigen::Index>(dim)) = enc.beta() * cs;
    Circuit circuit(n + 1);
    for (size_t q : enc.subset().qubits()) {
        circuit.cz(ancilla, q);
    }
    circuit.measure_x_postselect(ancilla);
    CircuitRun run = simulate(circuit, joint);

    EncodedStates out;
    out.postselection_probability = run.postselection_probability;
    // The ancilla is left in |+>, so both halves carry the same n-qubit state.
    out.circuit_state = run.state.head(static_cast<Eigen::Index>(dim));
    out.circuit_state.normalize();

    StateVector phi = state_vector(enc.base());
    out.formula_state = enc.alpha() * phi + enc.beta() * apply_pauli(enc.logical_z(), phi);
    out.formula_state.normalize();
    return out;
}

LogicalUniformity logical_space_is_m_uniform(const LogicalEncoding& enc, size_t m, const SearchOptions& options) {
    if (!enc.base().is_state()) {
        throw InvalidInput("logical-space uniformity needs a base stabilizer state (q == n)");
    }
    LogicalUniformity out;
    out.stabilizer_report = min_weight_bruteforce(enc.base(), options);
    out.coset_report = coset_min_weight(enc.base(), enc.logical_z(), options, CosetPolicy::kAllowAnticommuting);
    out.uniform = out.stabilizer_report.min_support > m && out.coset_report.min_support > m;
    return out;
}

std::string family_name(SubsetFamily f) { return f == SubsetFamily::kContiguous ? "contiguous" : "all-subsets"; }

SubsetFamily parse_family(const std::string& name) {
    if (name == "contiguous") {
        return SubsetFamily::kContiguous;
    }
    if (name == "all-subsets" || name == "all") {
        return SubsetFamily::kAllSubsets;
    }
    throw InvalidInput("unknown subset family '" + name + "' (expected contiguous or all-subsets)");
}

MinimalASearch minimal_A_search(const Lattice& lattice, size_t m, SubsetFamily family, const SearchOptions& options) {
    const size_t n = lattice.num_vertices();
    if (family == SubsetFamily::kAllSubsets && n > kMaxAllSubsetsQubits) {
        throw ResourceLimit("all-subsets search supports at most " + std::to_string(kMaxAllSubsetsQubits) +
                            " qubits, lattice has " + std::to_string(n));
    }
    auto base = StabilizerGroup::from_generators(n, cluster_generators(lattice));
    MinimalASearch result;
    result.stabilizer_report = min_weight_bruteforce(base, options);
    if (result.stabilizer_report.min_support <= m) {
        return result;
    }

    // Candidates run single-threaded inside; the pool spreads across candidates.
    SearchOptions inner = options;
    inner.threads = 1;
    for (size_t k = 1; k <= n; k++) {
        auto members = family_members(lattice, k, family);
        std::vector<std::optional<WeightReport>> reports(members.size());
        parallel_for(members.size(), options.threads, [&](size_t i) {
            auto z = PauliString::on_qubits(n, members[i].qubits(), Pauli::Z);
            reports[i] = coset_min_weight(base, z, inner, CosetPolicy::kAllowAnticommuting);
        });
        result.candidates_checked += members.size();
        for (size_t i = 0; i < members.size(); i++) {
            if (reports[i]->min_support > m) {
                result.witness = members[i];
                result.coset_report = reports[i];
                return result;
            }
        }
    }
    return result;
}

}  // namespace clusterqec
