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

#include "clusterqec/stabilizer_group.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "clusterqec/errors.h"
#include "clusterqec/gf2.h"

namespace clusterqec {
namespace {

uint64_t gray(uint64_t i) { return i ^ (i >> 1); }

void check_log2_cap(size_t q, unsigned max_log2) {
    if (q > max_log2) {
        throw ResourceLimit("group has 2^" + std::to_string(q) + " elements; enumeration cap is 2^" +
                            std::to_string(max_log2));
    }
}

// Adds coeff * P (P on the subset's local qubits) into `m` without forming P.
void accumulate_pauli(DenseMatrix& m, const PauliString& p, Complex coeff) {
    const uint64_t xmask = p.x_bits().num_words() ? p.x_bits().words()[0] : 0;
    const uint64_t zmask = p.z_bits().num_words() ? p.z_bits().words()[0] : 0;
    static const Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex prefactor = coeff * kPowers[(p.phase() + std::popcount(xmask & zmask)) & 3];
    for (uint64_t col = 0; col < static_cast<uint64_t>(m.cols()); col++) {
        double sign = (std::popcount(zmask & col) & 1) ? -1.0 : 1.0;
        m(static_cast<Eigen::Index>(col ^ xmask), static_cast<Eigen::Index>(col)) += sign * prefactor;
    }
}

}  // namespace

QubitSubset::QubitSubset(std::vector<size_t> qubits, size_t num_qubits)
    : qubits_(std::move(qubits)), num_qubits_(num_qubits) {
    std::sort(qubits_.begin(), qubits_.end());
    if (std::adjacent_find(qubits_.begin(), qubits_.end()) != qubits_.end()) {
        throw InvalidInput("qubit subset contains a repeated index");
    }
    if (!qubits_.empty() && qubits_.back() >= num_qubits) {
        throw InvalidInput("qubit subset index " + std::to_string(qubits_.back()) + " out of range for " +
                           std::to_string(num_qubits) + " qubits");
    }
}

QubitSubset QubitSubset::all(size_t num_qubits) {
    std::vector<size_t> q(num_qubits);
    for (size_t i = 0; i < num_qubits; i++) {
        q[i] = i;
    }
    return QubitSubset(std::move(q), num_qubits);
}

bool QubitSubset::contains(size_t q) const { return std::binary_search(qubits_.begin(), qubits_.end(), q); }

BitVector QubitSubset::mask() const {
    BitVector m(num_qubits_);
    for (size_t q : qubits_) {
        m.set(q, true);
    }
    return m;
}

BitVector symplectic_bits(const PauliString& p) {
    const size_t n = p.num_qubits();
    BitVector bits(2 * n);
    for (size_t j : p.x_bits().set_bits()) {
        bits.set(j, true);
    }
    for (size_t j : p.z_bits().set_bits()) {
        bits.set(n + j, true);
    }
    return bits;
}

StabilizerGroup StabilizerGroup::from_generators(std::vector<PauliString> generators, DependentPolicy policy) {
    if (generators.empty()) {
        throw InvalidInput("cannot infer the qubit count of an empty generator list");
    }
    size_t n = generators.front().num_qubits();
    return from_generators(n, std::move(generators), policy);
}

StabilizerGroup StabilizerGroup::from_generators(size_t num_qubits, std::vector<PauliString> generators,
                                                 DependentPolicy policy) {
    for (size_t i = 0; i < generators.size(); i++) {
        if (generators[i].num_qubits() != num_qubits) {
            throw DimensionError("generator " + std::to_string(i) + " acts on " +
                                 std::to_string(generators[i].num_qubits()) + " qubits, expected " +
                                 std::to_string(num_qubits));
        }
        if (!generators[i].is_hermitian()) {
            throw InvalidInput("generator " + generators[i].to_string() + " is not Hermitian");
        }
    }
    for (size_t i = 0; i < generators.size(); i++) {
        for (size_t j = i + 1; j < generators.size(); j++) {
            if (!commutes(generators[i], generators[j])) {
                throw InvalidInput("generators " + generators[i].to_string() + " and " + generators[j].to_string() +
                                   " anticommute");
            }
        }
    }

    // Incremental echelon basis: each row is zero at every earlier row's pivot.
    StabilizerGroup group;
    group.num_qubits_ = num_qubits;
    std::vector<BitVector> basis_bits;
    std::vector<PauliString> basis_ops;
    std::vector<size_t> basis_pivots;
    for (auto& g : generators) {
        BitVector v = symplectic_bits(g);
        PauliString op = g;
        for (size_t r = 0; r < basis_bits.size(); r++) {
            if (v.get(basis_pivots[r])) {
                v ^= basis_bits[r];
                op *= basis_ops[r];
            }
        }
        if (v.none()) {
            if (op.phase() != 0) {
                throw InvalidInput("generators are inconsistent: their products contain -I");
            }
            if (policy == DependentPolicy::kError) {
                throw InvalidInput("generator " + g.to_string() + " is a product of the preceding generators");
            }
            continue;
        }
        basis_pivots.push_back(v.first_set());
        basis_bits.push_back(std::move(v));
        basis_ops.push_back(std::move(op));
        group.generators_.push_back(std::move(g));
    }

    const size_t q = group.generators_.size();
    std::vector<BitVector> rows;
    rows.reserve(q);
    for (const auto& g : group.generators_) {
        rows.push_back(symplectic_bits(g));
    }
    group.canonical_ = group.generators_;
    group.canonical_combos_.clear();
    for (size_t i = 0; i < q; i++) {
        BitVector unit(q);
        unit.set(i, true);
        group.canonical_combos_.push_back(std::move(unit));
    }
    group.pivots_ = gf2::reduce(
        rows,
        [&](size_t dst, size_t src) {
            group.canonical_[dst] *= group.canonical_[src];
            group.canonical_combos_[dst] ^= group.canonical_combos_[src];
        },
        [&](size_t a, size_t b) {
            std::swap(group.canonical_[a], group.canonical_[b]);
            std::swap(group.canonical_combos_[a], group.canonical_combos_[b]);
        });
    group.canonical_rows_ = std::move(rows);
    return group;
}

PauliString StabilizerGroup::element(const BitVector& coefficients) const {
    if (coefficients.size() != generators_.size()) {
        throw DimensionError("coefficient vector length does not match generator count");
    }
    PauliString result(num_qubits_);
    for (size_t i : coefficients.set_bits()) {
        result *= generators_[i];
    }
    return result;
}

PauliString StabilizerGroup::element(uint64_t mask) const {
    PauliString result(num_qubits_);
    while (mask) {
        size_t i = std::countr_zero(mask);
        if (i >= generators_.size()) {
            throw DimensionError("mask selects a generator beyond the group's generator count");
        }
        result *= generators_[i];
        mask &= mask - 1;
    }
    return result;
}

std::optional<BitVector> StabilizerGroup::decompose(const PauliString& p) const {
    if (p.num_qubits() != num_qubits_) {
        throw DimensionError("Pauli string width does not match the group");
    }
    BitVector v = symplectic_bits(p);
    BitVector combo(generators_.size());
    for (size_t r = 0; r < pivots_.size(); r++) {
        if (v.get(pivots_[r])) {
            v ^= canonical_rows_[r];
            combo ^= canonical_combos_[r];
        }
    }
    if (v.any()) {
        return std::nullopt;
    }
    return combo;
}

bool StabilizerGroup::contains(const PauliString& p) const {
    auto combo = decompose(p);
    return combo && element(*combo) == p;
}

void for_each_element_in_range(const StabilizerGroup& group, uint64_t begin, uint64_t end,
                               const std::function<bool(uint64_t, const PauliString&)>& visit) {
    if (begin >= end) {
        return;
    }
    PauliString current = group.element(gray(begin));
    for (uint64_t i = begin; i < end; i++) {
        if (!visit(gray(i), current)) {
            return;
        }
        if (i + 1 < end) {
            current *= group.generators()[std::countr_zero(i + 1)];
        }
    }
}

void for_each_element(const StabilizerGroup& group, const std::function<bool(uint64_t, const PauliString&)>& visit,
                      unsigned max_log2) {
    const size_t q = group.num_generators();
    check_log2_cap(q, std::min(max_log2, 63u));
    for_each_element_in_range(group, 0, uint64_t{1} << q, visit);
}

std::vector<PauliString> enumerate_elements(const StabilizerGroup& group, unsigned max_log2) {
    check_log2_cap(group.num_generators(), std::min(max_log2, 30u));
    std::vector<PauliString> out;
    out.reserve(size_t{1} << group.num_generators());
    for_each_element(
        group,
        [&](uint64_t, const PauliString& p) {
            out.push_back(p);
            return true;
        },
        max_log2);
    return out;
}

StabilizerGroup restrict_to_subset(const StabilizerGroup& group, const QubitSubset& subset) {
    const size_t n = group.num_qubits();
    if (subset.num_qubits() != n) {
        throw DimensionError("subset register width does not match the group");
    }
    std::vector<size_t> outside;
    for (size_t j = 0; j < n; j++) {
        if (!subset.contains(j)) {
            outside.push_back(j);
        }
    }
    std::vector<BitVector> rows;
    rows.reserve(group.num_generators());
    for (const auto& g : group.generators()) {
        BitVector row(2 * outside.size());
        for (size_t k = 0; k < outside.size(); k++) {
            row.set(2 * k, g.x_bits().get(outside[k]));
            row.set(2 * k + 1, g.z_bits().get(outside[k]));
        }
        rows.push_back(std::move(row));
    }
    std::vector<PauliString> sub_generators;
    for (const auto& combo : gf2::left_kernel(rows)) {
        sub_generators.push_back(group.element(combo));
    }
    return StabilizerGroup::from_generators(n, std::move(sub_generators));
}

PauliString compress_to_subset(const PauliString& p, const QubitSubset& subset) {
    if (p.num_qubits() != subset.num_qubits()) {
        throw DimensionError("subset register width does not match the Pauli string");
    }
    PauliString local(subset.size());
    size_t covered = 0;
    for (size_t k = 0; k < subset.size(); k++) {
        Pauli local_op = p.at(subset.qubits()[k]);
        local.set(k, local_op);
        covered += local_op != Pauli::I;
    }
    if (covered != p.weight()) {
        throw InvalidInput("Pauli string " + p.to_string() + " acts outside the subset");
    }
    local.set_phase(p.phase());
    return local;
}

DenseMatrix reduced_density_matrix(const StabilizerGroup& group, const QubitSubset& subset) {
    if (!group.is_state()) {
        throw InvalidInput("reduced density matrices need a stabilizer state (q == n)");
    }
    if (subset.size() > kMaxDenseQubits) {
        throw ResourceLimit("reduced density matrix limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    StabilizerGroup restricted = restrict_to_subset(group, subset);
    const Eigen::Index dim = Eigen::Index{1} << subset.size();
    DenseMatrix rho = DenseMatrix::Zero(dim, dim);
    const Complex weight = 1.0 / static_cast<double>(dim);
    for_each_element(restricted, [&](uint64_t, const PauliString& sigma) {
        accumulate_pauli(rho, compress_to_subset(sigma, subset), weight);
        return true;
    });
    if (std::abs(rho.trace() - Complex(1.0)) > 1e-9) {
        throw std::logic_error("reduced density matrix trace is not 1");
    }
    return rho;
}

StateVector state_vector(const StabilizerGroup& group) {
    const size_t n = group.num_qubits();
    if (!group.is_state()) {
        throw InvalidInput("state vector needs a stabilizer state (q == n)");
    }
    if (n > kMaxDenseQubits) {
        throw ResourceLimit("state vector limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    for (Eigen::Index reference = 0; reference < dim; reference++) {
        StateVector psi = StateVector::Zero(dim);
        psi(reference) = 1.0;
        for (const auto& g : group.generators()) {
            psi = 0.5 * (psi + apply_pauli(g, psi));
        }
        double norm = psi.norm();
        if (norm < 1e-6) {
            continue;
        }
        psi /= norm;
        for (Eigen::Index k = 0; k < dim; k++) {
            if (std::abs(psi(k)) > 1e-12) {
                psi *= std::conj(psi(k)) / std::abs(psi(k));
                break;
            }
        }
        return psi;
    }
    throw std::logic_error("stabilizer projector annihilated every computational basis state");
}

}  // namespace clusterqec
