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

#ifndef CLUSTERQEC_DENSE_H
#define CLUSTERQEC_DENSE_H

#include <Eigen/Dense>
#include <complex>

#include "clusterqec/lattice.h"
#include "clusterqec/pauli_string.h"

// Small-n dense linear algebra. Basis index bit j holds the state of qubit j.

namespace clusterqec {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;
using DenseMatrix = Eigen::MatrixXcd;

inline constexpr size_t kMaxDenseQubits = 12;

/// Kronecker product of the local 2x2 Pauli matrices times i^phase.
DenseMatrix dense_matrix(const PauliString& p);

/// |0...0> on `num_qubits` qubits.
StateVector zero_state(size_t num_qubits);

/// P|psi>, computed from the bit representation without forming the matrix.
StateVector apply_pauli(const PauliString& p, const StateVector& psi);

void apply_h(StateVector& psi, size_t qubit);
void apply_cz(StateVector& psi, size_t a, size_t b);

struct CircuitRun {
    StateVector state;
    /// Product of the postselection probabilities, 1 when nothing was postselected.
    double postselection_probability = 1.0;
};

/// Runs `circuit` on `initial`. Postselected qubits are left in |+> and the state
/// is renormalized after each postselection.
CircuitRun simulate(const Circuit& circuit, StateVector initial);

/// <psi|P|psi>.
Complex expectation(const PauliString& p, const StateVector& psi);

}  // namespace clusterqec

#endif
