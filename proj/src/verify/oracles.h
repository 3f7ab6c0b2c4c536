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

#ifndef CLUSTERQEC_VERIFY_ORACLES_H
#define CLUSTERQEC_VERIFY_ORACLES_H

#include <random>
#include <vector>

#include "clusterqec/dense.h"
#include "clusterqec/noisesim.h"
#include "clusterqec/stabilizer_group.h"

// Slow, independent reference implementations. They share no code paths with
// the fast routines they check beyond PauliString and the dense gate helpers.

namespace clusterqec::oracle {

/// Tr_{not A} |psi><psi| by explicit index summation. Local qubit k of the result
/// is subset.qubits()[k].
DenseMatrix partial_trace(const StateVector& psi, const QubitSubset& subset);

/// prod_i (I + g_i) / 2 from dense generator matrices.
DenseMatrix projector_product(const StabilizerGroup& group);

/// 2^{-n} sum over all group elements, each formed as a dense matrix.
DenseMatrix projector_sum(const StabilizerGroup& group);

/// Every element built by direct multiplication over the binary mask, in mask
/// order.
std::vector<PauliString> elements_by_mask(const StabilizerGroup& group);

/// Minimum support over nonidentity elements by direct multiplication.
size_t min_weight_naive(const StabilizerGroup& group);

/// Minimum support over l * S by direct multiplication.
size_t coset_min_weight_naive(const StabilizerGroup& group, const PauliString& l);

/// S_A by filtering all elements for support inside A.
std::vector<PauliString> subgroup_by_filter(const StabilizerGroup& group, const QubitSubset& subset);

/// p -> H_q p H_q and p -> S_q p S_q^dagger with exact phases.
PauliString conjugate_h(const PauliString& p, size_t qubit);
PauliString conjugate_s(const PauliString& p, size_t qubit);

/// Random graph state (edge probability 1/2) followed by random single-qubit
/// H/S conjugations on every qubit.
std::vector<PauliString> random_lc_graph_generators(size_t n, std::mt19937_64& rng);

/// Uniformly random nonempty subset of {0..n-1}.
QubitSubset random_subset(size_t n, std::mt19937_64& rng);

/// Outcome distribution by summing over every product of per-qubit Kraus
/// operators of the composed damping-then-dephasing channel, each trajectory
/// propagated as a state vector.
std::vector<double> kraus_trajectory_distribution(const BenchmarkSetup& setup, const NoiseModel& noise, double t_us);

/// Outcome distribution of the twirled channel by summing over all 4^n Pauli
/// error configurations, each propagated as a state vector.
std::vector<double> twirl_sum_distribution(const BenchmarkSetup& setup, const NoiseModel& noise, double t_us);

/// max |<phi|P|phi>| over all Paulis with 1 <= support <= m.
double max_low_weight_expectation(const StateVector& phi, size_t m);

}  // namespace clusterqec::oracle

#endif
