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

#include "clusterqec/syndrome.h"

#include <algorithm>

#include "clusterqec/errors.h"

namespace clusterqec {
namespace {

constexpr Pauli kNonIdentity[3] = {Pauli::X, Pauli::Y, Pauli::Z};

bool table_order(const PauliString& a, const PauliString& b) {
    size_t wa = a.weight();
    size_t wb = b.weight();
    if (wa != wb) {
        return wa < wb;
    }
    return a.letters() < b.letters();
}

uint64_t count_errors(size_t n, size_t t, uint64_t cap) {
    uint64_t total = 0;
    uint64_t binom = 1;
    uint64_t pow3 = 1;
    for (size_t w = 1; w <= t && w <= n; w++) {
        binom = binom * (n - w + 1) / w;
        pow3 *= 3;
        if (binom > cap || pow3 > cap || binom * pow3 > cap) {
            return cap + 1;
        }
        total += binom * pow3;
        if (total > cap) {
            return cap + 1;
        }
    }
    return total;
}

}  // namespace

BitVector syndrome(const StabilizerGroup& group, const PauliString& error) {
    if (error.num_qubits() != group.num_qubits()) {
        throw DimensionError("error has " + std::to_string(error.num_qubits()) + " qubits; group has " +
                             std::to_string(group.num_qubits()));
    }
    const auto& gens = group.generators();
    BitVector bits(gens.size());
    for (size_t i = 0; i < gens.size(); i++) {
        if (!commutes(error, gens[i])) {
            bits.set(i, true);
        }
    }
    return bits;
}

std::vector<BitVector> SyndromeTable::collisions() const {
    std::vector<BitVector> out;
    for (const auto& [syn, errs] : entries) {
        if (errs.size() > 1 || (syn.none() && !errs.empty())) {
            out.push_back(syn);
        }
    }
    return out;
}

SyndromeTable build_table(const StabilizerGroup& group, size_t max_support, std::optional<size_t> assume_qubit,
                          uint64_t max_errors) {
    const size_t n = group.num_qubits();
    if (assume_qubit && *assume_qubit >= n) {
        throw InvalidInput("assumed error qubit " + std::to_string(*assume_qubit) + " out of range for " +
                           std::to_string(n) + " qubits");
    }
    SyndromeTable table;
    table.generator_order = group.generators();
    table.max_support = max_support;
    table.assume_qubit = assume_qubit;

    std::vector<size_t> sites;
    if (assume_qubit) {
        sites.push_back(*assume_qubit);
    } else {
        for (size_t i = 0; i < n; i++) {
            sites.push_back(i);
        }
    }
    const size_t t = std::min(max_support, sites.size());
    uint64_t expected = count_errors(sites.size(), t, max_errors);
    if (expected > max_errors) {
        throw ResourceLimit("syndrome table would hold more than " + std::to_string(max_errors) + " errors");
    }

    // Depth-first over increasing site lists, with a letter choice per site.
    std::vector<size_t> chosen;
    PauliString current(n);
    auto add_current = [&] {
        table.entries[syndrome(group, current)].push_back(current);
        table.num_errors++;
    };
    auto recurse = [&](auto&& self, size_t start) -> void {
        if (chosen.size() == t) {
            return;
        }
        for (size_t s = start; s < sites.size(); s++) {
            chosen.push_back(sites[s]);
            for (Pauli p : kNonIdentity) {
                current.set(sites[s], p);
                add_current();
                self(self, s + 1);
            }
            current.set(sites[s], Pauli::I);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);

    table.pure = true;
    for (auto& [syn, errs] : table.entries) {
        std::sort(errs.begin(), errs.end(), table_order);
        if (errs.size() > 1 || syn.none()) {
            table.pure = false;
        }
    }
    return table;
}

std::string identify_status_name(IdentifyStatus s) {
    switch (s) {
        case IdentifyStatus::kNoError:
            return "no-error";
        case IdentifyStatus::kIdentified:
            return "identified";
        case IdentifyStatus::kAmbiguous:
            return "ambiguous";
        case IdentifyStatus::kUnknown:
            return "unknown";
    }
    return "unknown";
}

Identification identify(const SyndromeTable& table, const BitVector& syndrome_bits) {
    if (syndrome_bits.size() != table.generator_order.size()) {
        throw DimensionError("syndrome has " + std::to_string(syndrome_bits.size()) + " bits; table expects " +
                             std::to_string(table.generator_order.size()));
    }
    Identification result;
    auto it = table.entries.find(syndrome_bits);
    if (syndrome_bits.none()) {
        result.status = IdentifyStatus::kNoError;
        if (it != table.entries.end()) {
            result.candidates = it->second;
        }
        return result;
    }
    if (it == table.entries.end()) {
        result.status = IdentifyStatus::kUnknown;
        return result;
    }
    result.candidates = it->second;
    result.status = it->second.size() == 1 ? IdentifyStatus::kIdentified : IdentifyStatus::kAmbiguous;
    return result;
}

bool pure_code_check(const StabilizerGroup& group, const std::vector<PauliString>& logicals, size_t m,
                     const SearchOptions& options) {
    for (size_t j = 0; j < logicals.size(); j++) {
        const auto& l = logicals[j];
        if (l.num_qubits() != group.num_qubits()) {
            throw DimensionError("logical " + std::to_string(j) + " has " + std::to_string(l.num_qubits()) +
                                 " qubits; group has " + std::to_string(group.num_qubits()));
        }
        for (const auto& g : group.generators()) {
            if (!commutes(l, g)) {
                throw InvalidInput("logical " + l.to_string() + " anticommutes with generator " + g.to_string());
            }
        }
    }
    if (logicals.size() > 20) {
        throw ResourceLimit("pure_code_check supports at most 20 logical operators");
    }
    SearchOptions opts = options;
    opts.stop_at_or_below = m;
    if (group.num_generators() > 0 && min_weight_bruteforce(group, opts).min_support <= m) {
        return false;
    }
    const uint64_t combos = uint64_t{1} << logicals.size();
    for (uint64_t mask = 1; mask < combos; mask++) {
        PauliString l(group.num_qubits());
        for (size_t j = 0; j < logicals.size(); j++) {
            if ((mask >> j) & 1) {
                l *= logicals[j];
            }
        }
        if (coset_min_weight(group, l, opts).min_support <= m) {
            return false;
        }
    }
    return true;
}

}  // namespace clusterqec
