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

#include "verify/oracles.h"

#include <bit>
#include <cmath>

#include "clusterqec/errors.h"

namespace clusterqec::oracle {
namespace {

using Mat2 = Eigen::Matrix2cd;

void apply_single(StateVector& psi, size_t qubit, const Mat2& m) {
    const Eigen::Index bit = Eigen::Index{1} << qubit;
    for (Eigen::Index i = 0; i < psi.size(); i++) {
        if (i & bit) {
            continue;
        }
        Complex a0 = psi(i);
        Complex a1 = psi(i | bit);
        psi(i) = m(0, 0) * a0 + m(0, 1) * a1;
        psi(i | bit) = m(1, 0) * a0 + m(1, 1) * a1;
    }
}

// The protocol after the idle period: optional H layer, then U^dagger.
void finish_protocol(StateVector& psi, const BenchmarkSetup& setup, BenchVariant variant) {
    const size_t n = setup.num_qubits;
    if (variant == BenchVariant::kXZX) {
        for (size_t q = 0; q < n; q++) {
            apply_h(psi, q);
        }
    }
    Circuit prep = benchmark_preparation(setup);
    for (auto it = prep.gates().rbegin(); it != prep.gates().rend(); ++it) {
        if (const auto* h = std::get_if<HGate>(&*it)) {
            apply_h(psi, h->qubit);
        } else if (const auto* cz = std::get_if<CZGate>(&*it)) {
            apply_cz(psi, cz->a, cz->b);
        }
    }
}

StateVector prepared_state(const BenchmarkSetup& setup, BenchVariant variant) {
    StateVector psi = simulate(benchmark_preparation(setup), zero_state(setup.num_qubits)).state;
    if (variant == BenchVariant::kXZX) {
        for (size_t q = 0; q < setup.num_qubits; q++) {
            apply_h(psi, q);
        }
    }
    return psi;
}

std::vector<double> confuse(const std::vector<double>& dist, size_t n, double r) {
    std::vector<double> out(dist.size(), 0.0);
    for (size_t b = 0; b < dist.size(); b++) {
        for (size_t f = 0; f < dist.size(); f++) {
            int k = std::popcount(f);
            out[b ^ f] += dist[b] * std::pow(r, k) * std::pow(1 - r, static_cast<int>(n) - k);
        }
    }
    return out;
}

PauliString from_digits(size_t n, uint64_t code) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        p.set(q, static_cast<Pauli>((code >> (2 * q)) & 3));
    }
    return p;
}

}  // namespace

DenseMatrix partial_trace(const StateVector& psi, const QubitSubset& subset) {
    const size_t n = subset.num_qubits();
    if (psi.size() != (Eigen::Index{1} << n)) {
        throw DimensionError("state size does not match the subset's register");
    }
    const auto& a = subset.qubits();
    std::vector<size_t> rest;
    for (size_t q = 0; q < n; q++) {
        if (!subset.contains(q)) {
            rest.push_back(q);
        }
    }
    const size_t da = size_t{1} << a.size();
    const size_t dr = size_t{1} << rest.size();
    auto full_index = [&](size_t local_a, size_t local_r) {
        size_t idx = 0;
        for (size_t k = 0; k < a.size(); k++) {
            idx |= ((local_a >> k) & 1) << a[k];
        }
        for (size_t k = 0; k < rest.size(); k++) {
            idx |= ((local_r >> k) & 1) << rest[k];
        }
        return static_cast<Eigen::Index>(idx);
    };
    DenseMatrix rho = DenseMatrix::Zero(static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(da));
    for (size_t i = 0; i < da; i++) {
        for (size_t j = 0; j < da; j++) {
            Complex s = 0;
            for (size_t r = 0; r < dr; r++) {
                s += psi(full_index(i, r)) * std::conj(psi(full_index(j, r)));
            }
            rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s;
        }
    }
    return rho;
}

DenseMatrix projector_product(const StabilizerGroup& group) {
    const auto dim = Eigen::Index{1} << group.num_qubits();
    DenseMatrix id = DenseMatrix::Identity(dim, dim);
    DenseMatrix proj = id;
    for (const auto& g : group.generators()) {
        proj = proj * ((id + dense_matrix(g)) / 2.0);
    }
    return proj;
}

DenseMatrix projector_sum(const StabilizerGroup& group) {
    const auto dim = Eigen::Index{1} << group.num_qubits();
    DenseMatrix sum = DenseMatrix::Zero(dim, dim);
    for (const auto& e : elements_by_mask(group)) {
        sum += dense_matrix(e);
    }
    return sum / static_cast<double>(dim);
}

std::vector<PauliString> elements_by_mask(const StabilizerGroup& group) {
    const size_t q = group.num_generators();
    if (q > 20) {
        throw ResourceLimit("naive element listing is capped at 2^20 elements");
    }
    std::vector<PauliString> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << q); mask++) {
        PauliString p(group.num_qubits());
        for (size_t i = 0; i < q; i++) {
            if ((mask >> i) & 1) {
                p = p * group.generators()[i];
            }
        }
        out.push_back(p);
    }
    return out;
}

size_t min_weight_naive(const StabilizerGroup& group) {
    size_t best = group.num_qubits() + 1;
    for (const auto& e : elements_by_mask(group)) {
        if (!e.is_identity_up_to_phase()) {
            best = std::min(best, e.weight());
        }
    }
    return best;
}

size_t coset_min_weight_naive(const StabilizerGroup& group, const PauliString& l) {
    size_t best = group.num_qubits() + 1;
    for (const auto& e : elements_by_mask(group)) {
        best = std::min(best, (l * e).weight());
    }
    return best;
}

std::vector<PauliString> subgroup_by_filter(const StabilizerGroup& group, const QubitSubset& subset) {
    std::vector<PauliString> out;
    for (const auto& e : elements_by_mask(group)) {
        bool inside = true;
        for (size_t q : e.support()) {
            inside = inside && subset.contains(q);
        }
        if (inside) {
            out.push_back(e);
        }
    }
    return out;
}

PauliString conjugate_h(const PauliString& p, size_t qubit) {
    PauliString out = p;
    Pauli a = p.at(qubit);
    if (a == Pauli::X) {
        out.set(qubit, Pauli::Z);
    } else if (a == Pauli::Z) {
        out.set(qubit, Pauli::X);
    } else if (a == Pauli::Y) {
        out.set_phase(static_cast<uint8_t>(p.phase() + 2));
    }
    return out;
}

PauliString conjugate_s(const PauliString& p, size_t qubit) {
    PauliString out = p;
    Pauli a = p.at(qubit);
    if (a == Pauli::X) {
        out.set(qubit, Pauli::Y);
    } else if (a == Pauli::Y) {
        out.set(qubit, Pauli::X);
        out.set_phase(static_cast<uint8_t>(p.phase() + 2));
    }
    return out;
}

std::vector<PauliString> random_lc_graph_generators(size_t n, std::mt19937_64& rng) {
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t u = 0; u < n; u++) {
        for (size_t v = u + 1; v < n; v++) {
            if (rng() & 1) {
                edges.emplace_back(u, v);
            }
        }
    }
    auto gens = graph_generators(Graph(n, edges));
    for (size_t q = 0; q < n; q++) {
        // Words over {H, S} of length up to 3 reach every single-qubit Clifford
        // class that matters for Pauli conjugation.
        uint64_t word = rng() % 8;
        for (int step = 0; step < 3; step++) {
            bool use_h = (word >> step) & 1;
            for (auto& g : gens) {
                g = use_h ? conjugate_h(g, q) : conjugate_s(g, q);
            }
        }
    }
    return gens;
}

QubitSubset random_subset(size_t n, std::mt19937_64& rng) {
    while (true) {
        std::vector<size_t> qs;
        for (size_t q = 0; q < n; q++) {
            if (rng() & 1) {
                qs.push_back(q);
            }
        }
        if (!qs.empty()) {
            return QubitSubset(qs, n);
        }
    }
}

std::vector<double> kraus_trajectory_distribution(const BenchmarkSetup& setup, const NoiseModel& noise, double t_us) {
    const size_t n = setup.num_qubits;
    const double gamma = 1.0 - std::exp(-t_us / noise.t1_us);
    const double lambda = std::exp(-t_us / pure_dephasing_time(noise.t1_us, noise.t2_us));
    Mat2 k0, k1, d0, d1;
    k0 << 1, 0, 0, std::sqrt(1 - gamma);
    k1 << 0, std::sqrt(gamma), 0, 0;
    d0 = Mat2::Identity() * std::sqrt((1 + lambda) / 2);
    d1 << std::sqrt((1 - lambda) / 2), 0, 0, -std::sqrt((1 - lambda) / 2);
    const Mat2 kraus[4] = {d0 * k0, d0 * k1, d1 * k0, d1 * k1};

    const StateVector psi0 = prepared_state(setup, noise.variant);
    std::vector<double> dist(size_t{1} << n, 0.0);
    for (uint64_t code = 0; code < (uint64_t{1} << (2 * n)); code++) {
        StateVector psi = psi0;
        for (size_t q = 0; q < n; q++) {
            apply_single(psi, q, kraus[(code >> (2 * q)) & 3]);
        }
        finish_protocol(psi, setup, noise.variant);
        for (size_t b = 0; b < dist.size(); b++) {
            dist[b] += std::norm(psi(static_cast<Eigen::Index>(b)));
        }
    }
    return confuse(dist, n, noise.readout_p);
}

std::vector<double> twirl_sum_distribution(const BenchmarkSetup& setup, const NoiseModel& noise, double t_us) {
    const size_t n = setup.num_qubits;
    const double px = (1 - std::exp(-t_us / noise.t1_us)) / 4;
    const double pz = (1 - std::exp(-t_us / noise.t2_us)) / 2 - px;
    // Indexed by the Pauli enum: I, X, Z, Y.
    const double probs[4] = {1 - 2 * px - pz, px, pz, px};

    const StateVector psi0 = prepared_state(setup, noise.variant);
    std::vector<double> dist(size_t{1} << n, 0.0);
    for (uint64_t code = 0; code < (uint64_t{1} << (2 * n)); code++) {
        double w = 1.0;
        for (size_t q = 0; q < n; q++) {
            w *= probs[(code >> (2 * q)) & 3];
        }
        if (w == 0.0) {
            continue;
        }
        StateVector psi = apply_pauli(from_digits(n, code), psi0);
        finish_protocol(psi, setup, noise.variant);
        for (size_t b = 0; b < dist.size(); b++) {
            dist[b] += w * std::norm(psi(static_cast<Eigen::Index>(b)));
        }
    }
    return confuse(dist, n, noise.readout_p);
}

double max_low_weight_expectation(const StateVector& phi, size_t m) {
    const size_t n = static_cast<size_t>(std::countr_zero(static_cast<uint64_t>(phi.size())));
    double worst = 0.0;
    for (uint64_t code = 1; code < (uint64_t{1} << (2 * n)); code++) {
        PauliString p = from_digits(n, code);
        if (p.weight() > m) {
            continue;
        }
        worst = std::max(worst, std::abs(expectation(p, phi)));
    }
    return worst;
}

}  // namespace clusterqec::oracle
