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

#ifndef CLUSTERQEC_SYNDROME_H
#define CLUSTERQEC_SYNDROME_H

#include <map>
#include <optional>
#include <vector>

#include "clusterqec/stabilizer_group.h"
#include "clusterqec/uniformity.h"

namespace clusterqec {

/// Bit i is 1 iff `error` anticommutes with generators()[i]. Phases are ignored.
BitVector syndrome(const StabilizerGroup& group, const PauliString& error);

/// All Pauli errors of support <= max_support grouped by syndrome.
///
/// Errors are stored with phase +1 (tables are phase-blind). Each list is sorted
/// by weight, then by qubit-major letter order, so the lightest explanation of a
/// syndrome comes first. The identity is not stored.
struct SyndromeTable {
    std::vector<PauliString> generator_order;
    size_t max_support = 0;
    /// When set, only errors on this single qubit were enumerated.
    std::optional<size_t> assume_qubit;
    std::map<BitVector, std::vector<PauliString>> entries;
    /// Every nonzero syndrome has exactly one error and no error has the zero
    /// syndrome.
    bool pure = false;
    size_t num_errors = 0;

    /// Syndromes explained by more than one error, plus the zero syndrome if any
    /// error lands there.
    std::vector<BitVector> collisions() const;
};

inline constexpr uint64_t kDefaultMaxTableErrors = 5'000'000;

SyndromeTable build_table(const StabilizerGroup& group, size_t max_support,
                          std::optional<size_t> assume_qubit = std::nullopt,
                          uint64_t max_errors = kDefaultMaxTableErrors);

enum class IdentifyStatus { kNoError, kIdentified, kAmbiguous, kUnknown };

std::string identify_status_name(IdentifyStatus s);

struct Identification {
    IdentifyStatus status = IdentifyStatus::kUnknown;
    /// kIdentified: the single error. kAmbiguous: all candidates. kNoError: any
    /// tabulated errors that are invisible to the generators.
    std::vector<PauliString> candidates;
};

Identification identify(const SyndromeTable& table, const BitVector& syndrome_bits);

/// True iff every nonidentity element of S has support > m and, for every
/// nonempty product l of the given logical operators, every element of l*S has
/// support > m. With no logicals this is m-uniformity (for q == n).
bool pure_code_check(const StabilizerGroup& group, const std::vector<PauliString>& logicals, size_t m,
                     const SearchOptions& options = {});

}  // namespace clusterqec

#endif
