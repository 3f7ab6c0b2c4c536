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

#include "clusterqec/dense.h"

#include <bit>
#include <cmath>

#include "clusterqec/errors.h"

namespace clusterqec {
namespace {

constexpr Complex kI{0.0, 1.0};

void check_dense_size(size_t n) {
    if (n > kMaxDenseQubits) {
        throw ResourceLimit("dense representation limited to " + std::to_string(kMaxDenseQubits) + " qubits, got " +
                            std::to_string(n));
    }
}

Complex i_power(unsigned k) {
    static const Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPowers[k & 3];
}

uint64_t low_word(const BitVector& bits) { return bits.num_words() ? bits.words()[0] : 0; }

}  // namespace

DenseMatrix dense_matrix(const PauliString& p) {
    const size_t n = p.num_qubits();
    check_dense_size(n);
    Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    Eigen::Matrix2cd y;
    y << 0, -kI, kI, 0;
    Eigen::Matrix2cd z;
    z << 1, 0, 0, -1;

    // Qubit 0 is the least significant index bit, so it is the rightmost factor.
    DenseMatrix result = DenseMatrix::Identity(1, 1) * i_power(p.phase());
    for (size_t j = 0; j < n; j++) {
        const Eigen::Matrix2cd* local = &id;
        switch (p.at(j)) {
            case Pauli::I:
                break;
            case Pauli::X:
                local = &x;
                break;
            case Pauli::Y:
                local = &y;
                break;
            case Pauli::Z:
                local = &z;
                break;
        }
        DenseMatrix next(result.rows() * 2, result.cols() * 2);
        for (int a = 0; a < 2; a++) {
            for (int b = 0; b < 2; b++) {
                next.block(a * result.rows(), b * result.cols(), result.rows(), result.cols()) = (*local)(a, b) * result;
            }
        }
        result = std::move(next);
    }
    return result;
}

StateVector zero_state(size_t num_qubits) {
    check_dense_size(num_qubits);
    StateVector psi = StateVector::Zero(Eigen::Index{1} << num_qubits);
    psi(0) = 1.0;
    return psi;
}

StateVector apply_pauli(const PauliString& p, const StateVector& psi) {
    const size_t n = p.num_qubits();
    check_dense_size(n);
    if (psi.size() != (Eigen::Index{1} << n)) {
        throw DimensionError("state vector size does not match Pauli string width");
    }
    // P = i^phase * i^{#Y} * X^x Z^z, since Y = i X Z on each qubit.
    const uint64_t xmask = low_word(p.x_bits());
    const uint64_t zmask = low_word(p.z_bits());
    const Complex prefactor = i_power(p.phase() + std::popcount(xmask & zmask));
    StateVector out(psi.size());
    for (uint64_t b = 0; b < static_cast<uint64_t>(psi.size()); b++) {
        double sign = (std::popcount(zmask & b) & 1) ? -1.0 : 1.0;
        out(static_cast<Eigen::Index>(b ^ xmask)) = prefactor * sign * psi(static_cast<Eigen::Index>(b));
    }
    return out;
}

void apply_h(StateVector& psi, size_t qubit) {
    const double r = 1.0 / std::sqrt(2.0);
    const uint64_t bit = uint64_t{1} << qubit;
    for (uint64_t b = 0; b < static_cast<uint64_t>(psi.size()); b++) {
        if (b & bit) {
            continue;
        }
        Complex a0 = psi(b);
        Complex a1 = psi(b | bit);
        psi(b) = r * (a0 + a1);
        psi(b | bit) = r * (a0 - a1);
    }
}

void apply_cz(StateVector& psi, size_t a, size_t b) {
    const uint64_t mask = (uint64_t{1} << a) | (uint64_t{1} << b);
    for (uint64_t k = 0; k < static_cast<uint64_t>(psi.size()); k++) {
        if ((k & mask) == mask) {
            psi(k) = -psi(k);
        }
    }
}

CircuitRun simulate(const Circuit& circuit, StateVector initial) {
    check_dense_size(circuit.num_qubits());
    if (initial.size() != (Eigen::Index{1} << circuit.num_qubits())) {
        throw DimensionError("initial state size does not match circuit width");
    }
    CircuitRun run{std::move(initial), 1.0};
    for (const Gate& gate : circuit.gates()) {
        if (const auto* h = std::get_if<HGate>(&gate)) {
            apply_h(run.state, h->qubit);
        } else if (const auto* cz = std::get_if<CZGate>(&gate)) {
            apply_cz(run.state, cz->a, cz->b);
        } else if (const auto* m = std::get_if<MeasureXPostselect>(&gate)) {
            const uint64_t bit = uint64_t{1} << m->qubit;
            for (uint64_t b = 0; b < static_cast<uint64_t>(run.state.size()); b++) {
                if (b & bit) {
                    continue;
                }
                Complex avg = 0.5 * (run.state(b) + run.state(b | bit));
                run.state(b) = avg;
                run.state(b | bit) = avg;
            }
            double prob = run.state.squaredNorm();
            if (prob < 1e-300) {
                throw InvalidInput("postselected outcome has zero probability");
            }
            run.postselection_probability *= prob;
            run.state /= std::sqrt(prob);
        }
    }
    return run;
}

Complex expectation(const PauliString& p, const StateVector& psi) { return psi.dot(apply_pauli(p, psi)); }

}  // namespace clusterqec
