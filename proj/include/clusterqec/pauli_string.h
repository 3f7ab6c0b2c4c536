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

#ifndef CLUSTERQEC_PAULI_STRING_H
#define CLUSTERQEC_PAULI_STRING_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clusterqec/bit_vector.h"

namespace clusterqec {

enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_char(Pauli p);

/// An n-qubit Pauli operator i^phase * P_0 (x) P_1 (x) ... (x) P_{n-1}.
///
/// Qubit j carries bits (x_j, z_j): (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y, where Y
/// is the Hermitian Pauli matrix (Y = i X Z). Qubits are 0-based; text rendering
/// lists qubit 0 first.
class PauliString {
   public:
    PauliString() = default;
    /// Identity on `num_qubits` qubits.
    explicit PauliString(size_t num_qubits);
    PauliString(BitVector x, BitVector z, uint8_t phase = 0);

    /// Accepts an optional sign prefix ("+", "-", "i", "+i", "-i") followed by one
    /// of I/X/Y/Z (or '_' for identity) per qubit, e.g. "+XZZ" or "-XXX".
    static PauliString parse(std::string_view text);
    /// Single-qubit Pauli `p` acting on `qubit`.
    static PauliString single(size_t num_qubits, size_t qubit, Pauli p);
    /// Product of `p` on every listed qubit.
    static PauliString on_qubits(size_t num_qubits, std::span<const size_t> qubits, Pauli p);

    size_t num_qubits() const { return x_.size(); }
    const BitVector& x_bits() const { return x_; }
    const BitVector& z_bits() const { return z_; }
    uint8_t phase() const { return phase_; }
    void set_phase(uint8_t phase) { phase_ = phase & 3; }

    Pauli at(size_t qubit) const;
    void set(size_t qubit, Pauli p);

    /// Hermitian iff the prefactor is +-1.
    bool is_hermitian() const { return (phase_ & 1) == 0; }
    /// True when every qubit carries I; the phase is not inspected.
    bool is_identity_up_to_phase() const { return x_.none() && z_.none(); }
    /// Number of qubits where the operator is not the identity.
    size_t weight() const;
    std::vector<size_t> support() const;

    /// In-place right multiplication: *this = *this * rhs, phase exact.
    PauliString& operator*=(const PauliString& rhs);
    friend PauliString operator*(PauliString lhs, const PauliString& rhs) { return lhs *= rhs; }

    /// Equality including phase.
    bool operator==(const PauliString& other) const = default;
    /// Equality of the operator ignoring the scalar prefactor.
    bool equal_up_to_phase(const PauliString& other) const { return x_ == other.x_ && z_ == other.z_; }

    /// "+XZZ", "-XXX", "+iY" style rendering.
    std::string to_string() const;
    /// Rendering without the sign prefix.
    std::string letters() const;

   private:
    BitVector x_;
    BitVector z_;
    uint8_t phase_ = 0;
};

PauliString multiply(const PauliString& p, const PauliString& q);
bool commutes(const PauliString& p, const PauliString& q);
std::vector<size_t> support(const PauliString& p);

/// Power of i picked up by multiplying the operator parts of (x1,z1) and (x2,z2),
/// word by word: sigma_a sigma_b = i^result sigma_{a xor b}. Exposed for hot loops.
uint8_t product_phase(std::span<const uint64_t> x1, std::span<const uint64_t> z1, std::span<const uint64_t> x2,
                      std::span<const uint64_t> z2);

}  // namespace clusterqec

#endif
