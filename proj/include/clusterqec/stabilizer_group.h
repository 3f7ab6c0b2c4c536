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

#ifndef CLUSTERQEC_STABILIZER_GROUP_H
#define CLUSTERQEC_STABILIZER_GROUP_H

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "clusterqec/dense.h"
#include "clusterqec/pauli_string.h"

namespace clusterqec {

/// Largest generator count whose 2^q elements may be enumerated by default.
inline constexpr unsigned kDefaultMaxEnumerationLog2 = 30;

enum class DependentPolicy {
    kError,  ///< A generator in the span of earlier ones is an error.
    kDrop,   ///< Consistent dependent generators are dropped.
};

/// Sorted, duplicate-free list of qubit indices, all below the register width.
class QubitSubset {
   public:
    QubitSubset(std::vector<size_t> qubits, size_t num_qubits);
    static QubitSubset all(size_t num_qubits);

    const std::vector<size_t>& qubits() const { return qubits_; }
    size_t size() const { return qubits_.size(); }
    size_t num_qubits() const { return num_qubits_; }
    bool contains(size_t q) const;
    /// Membership mask over the full register.
    BitVector mask() const;

    bool operator==(const QubitSubset&) const = default;

   private:
    std::vector<size_t> qubits_;
    size_t num_qubits_;
};

/// An abelian group of Hermitian Pauli strings not containing -I, given by q
/// independent generators on n qubits. q == n fixes a unique state; q < n a code
/// space of n - q logical qubits.
class StabilizerGroup {
   public:
    /// Validates commutation, Hermiticity, independence, and consistency.
    static StabilizerGroup from_generators(size_t num_qubits, std::vector<PauliString> generators,
                                           DependentPolicy policy = DependentPolicy::kError);
    /// Width taken from the first generator; the list must be nonempty.
    static StabilizerGroup from_generators(std::vector<PauliString> generators,
                                           DependentPolicy policy = DependentPolicy::kError);

    size_t num_qubits() const { return num_qubits_; }
    size_t num_generators() const { return generators_.size(); }
    size_t num_logical_qubits() const { return num_qubits_ - generators_.size(); }
    bool is_state() const { return generators_.size() == num_qubits_; }

    /// Generators in the order given (after dropping dependent ones). Syndrome bit
    /// i refers to generators()[i].
    const std::vector<PauliString>& generators() const { return generators_; }
    /// Reduced row echelon form of the symplectic matrix [x | z], with exact signs.
    const std::vector<PauliString>& canonical() const { return canonical_; }

    /// Product of generators()[i] over the set bits i of `coefficients`.
    PauliString element(const BitVector& coefficients) const;
    PauliString element(uint64_t mask) const;

    /// Coefficients c with element(c) equal to `p` up to phase, if any exist.
    std::optional<BitVector> decompose(const PauliString& p) const;
    /// Exact membership, sign included.
    bool contains(const PauliString& p) const;

   private:
    StabilizerGroup() = default;

    size_t num_qubits_ = 0;
    std::vector<PauliString> generators_;
    std::vector<PauliString> canonical_;
    std::vector<BitVector> canonical_rows_;
    std::vector<BitVector> canonical_combos_;
    std::vector<size_t> pivots_;
};

/// Concatenated [x | z] bits of `p`, length 2n.
BitVector symplectic_bits(const PauliString& p);

/// Visits elements with Gray-code index in [begin, end): element index i has
/// coefficient mask i ^ (i >> 1), so consecutive elements differ by one generator.
/// The callback receives (mask, element); return false to stop early.
void for_each_element_in_range(const StabilizerGroup& group, uint64_t begin, uint64_t end,
                               const std::function<bool(uint64_t, const PauliString&)>& visit);

/// All 2^q elements in Gray-code order, streamed to `visit`.
void for_each_element(const StabilizerGroup& group, const std::function<bool(uint64_t, const PauliString&)>& visit,
                      unsigned max_log2 = kDefaultMaxEnumerationLog2);

/// All elements materialized in Gray-code order; capped at 2^20 elements.
std::vector<PauliString> enumerate_elements(const StabilizerGroup& group, unsigned max_log2 = 20);

/// S_A: generators of the subgroup whose elements act trivially outside `subset`,
/// found from the left kernel of the generators' outside-A columns.
StabilizerGroup restrict_to_subset(const StabilizerGroup& group, const QubitSubset& subset);

/// `p` restricted to the qubits of `subset` (subset.qubits()[k] becomes qubit k).
/// Requires p to act trivially outside the subset.
PauliString compress_to_subset(const PauliString& p, const QubitSubset& subset);

/// rho_A = 2^{-|A|} sum_{sigma in S_A} sigma|_A, a 2^|A| square matrix.
DenseMatrix reduced_density_matrix(const StabilizerGroup& group, const QubitSubset& subset);

/// The normalized +1 eigenvector of every generator, global phase fixed so the
/// first nonzero amplitude is real and positive. Requires q == n <= 12.
StateVector state_vector(const StabilizerGroup& group);

}  // namespace clusterqec

#endif
