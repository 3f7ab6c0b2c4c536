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

#include "clusterqec/pauli_string.h"

#include <bit>

#include "clusterqec/errors.h"

namespace clusterqec {

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I:
            return 'I';
        case Pauli::X:
            return 'X';
        case Pauli::Z:
            return 'Z';
        case Pauli::Y:
            return 'Y';
    }
    return '?';
}

PauliString::PauliString(size_t num_qubits) : x_(num_qubits), z_(num_qubits) {}

PauliString::PauliString(BitVector x, BitVector z, uint8_t phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3) {
    if (x_.size() != z_.size()) {
        throw DimensionError("x and z bit vectors must have equal length");
    }
}

PauliString PauliString::parse(std::string_view text) {
    uint8_t phase = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        phase = text.front() == '-' ? 2 : 0;
        text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
        phase = (phase + 1) & 3;
        text.remove_prefix(1);
    }
    PauliString result(text.size());
    for (size_t j = 0; j < text.size(); j++) {
        switch (text[j]) {
            case 'I':
            case '_':
                break;
            case 'X':
                result.set(j, Pauli::X);
                break;
            case 'Y':
                result.set(j, Pauli::Y);
                break;
            case 'Z':
                result.set(j, Pauli::Z);
                break;
            default:
                throw InvalidInput("invalid Pauli character '" + std::string(1, text[j]) + "' in \"" +
                                   std::string(text) + "\"");
        }
    }
    result.phase_ = phase;
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t qubit, Pauli p) {
    if (qubit >= num_qubits) {
        throw DimensionError("qubit index " + std::to_string(qubit) + " out of range for " +
                             std::to_string(num_qubits) + " qubits");
    }
    PauliString result(num_qubits);
    result.set(qubit, p);
    return result;
}

PauliString PauliString::on_qubits(size_t num_qubits, std::span<const size_t> qubits, Pauli p) {
    PauliString result(num_qubits);
    for (size_t q : qubits) {
        result *= single(num_qubits, q, p);
    }
    return result;
}

Pauli PauliString::at(size_t qubit) const {
    return static_cast<Pauli>(static_cast<uint8_t>(x_.get(qubit)) | (static_cast<uint8_t>(z_.get(qubit)) << 1));
}

void PauliString::set(size_t qubit, Pauli p) {
    auto bits = static_cast<uint8_t>(p);
    x_.set(qubit, bits & 1);
    z_.set(qubit, bits & 2);
}

size_t PauliString::weight() const {
    auto xs = x_.words();
    auto zs = z_.words();
    size_t total = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        total += std::popcount(xs[k] | zs[k]);
    }
    return total;
}

std::vector<size_t> PauliString::support() const { return (x_ | z_).set_bits(); }

uint8_t product_phase(std::span<const uint64_t> x1, std::span<const uint64_t> z1, std::span<const uint64_t> x2,
                      std::span<const uint64_t> z2) {
    // Cyclic products XY=iZ, YZ=iX, ZX=iY contribute +1; the reversed orders -1.
    int acc = 0;
    for (size_t k = 0; k < x1.size(); k++) {
        uint64_t a_x = x1[k] & ~z1[k];
        uint64_t a_y = x1[k] & z1[k];
        uint64_t a_z = ~x1[k] & z1[k];
        uint64_t b_x = x2[k] & ~z2[k];
        uint64_t b_y = x2[k] & z2[k];
        uint64_t b_z = ~x2[k] & z2[k];
        uint64_t pos = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
        uint64_t neg = (a_y & b_x) | (a_z & b_y) | (a_x & b_z);
        acc += std::popcount(pos) - std::popcount(neg);
    }
    return static_cast<uint8_t>(acc & 3);
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
    if (num_qubits() != rhs.num_qubits()) {
        throw DimensionError("cannot multiply Pauli strings on " + std::to_string(num_qubits()) + " and " +
                             std::to_string(rhs.num_qubits()) + " qubits");
    }
    uint8_t extra = product_phase(x_.words(), z_.words(), rhs.x_.words(), rhs.z_.words());
    phase_ = (phase_ + rhs.phase_ + extra) & 3;
    x_ ^= rhs.x_;
    z_ ^= rhs.z_;
    return *this;
}

std::string PauliString::letters() const {
    std::string out(num_qubits(), 'I');
    for (size_t j = 0; j < num_qubits(); j++) {
        out[j] = pauli_char(at(j));
    }
    return out;
}

std::string PauliString::to_string() const {
    static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
    return kPrefix[phase_] + letters();
}

PauliString multiply(const PauliString& p, const PauliString& q) { return p * q; }

bool commutes(const PauliString& p, const PauliString& q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError("cannot compare Pauli strings on " + std::to_string(p.num_qubits()) + " and " +
                             std::to_string(q.num_qubits()) + " qubits");
    }
    return !(dot(p.x_bits(), q.z_bits()) ^ dot(p.z_bits(), q.x_bits()));
}

std::vector<size_t> support(const PauliString& p) { return p.support(); }

}  // namespace clusterqec
