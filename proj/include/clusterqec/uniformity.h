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

#ifndef CLUSTERQEC_UNIFORMITY_H
#define CLUSTERQEC_UNIFORMITY_H

#include <cstdint>
#include <optional>
#include <string>

#include "clusterqec/lattice.h"
#include "clusterqec/stabilizer_group.h"

namespace clusterqec {

enum class SearchMethod { kBrute, kWindowed, kSubsetSweep };

std::string method_name(SearchMethod m);

/// Result of a minimum-support search over a group (or a coset l*S).
///
/// `coefficients` decomposes the witness over the group's generators (for a
/// coset search it decomposes witness * l). Among equal-weight candidates the
/// lexicographically smallest coefficient vector (c_0, c_1, ..., c_{q-1}) wins, so
/// reports do not depend on the thread count.
struct WeightReport {
    size_t min_support = 0;
    PauliString witness;
    BitVector coefficients;
    SearchMethod method = SearchMethod::kBrute;
    uint64_t elements_scanned = 0;
    double wall_seconds = 0.0;
    /// False when an early-stop target cut the scan short; min_support is then
    /// only an upper bound on the true minimum.
    bool exhaustive = true;
    /// Windowed search outside the regime where window radius 4 is proven
    /// sufficient (cluster generators, periodic, every axis >= 8).
    bool heuristic = false;
};

struct SearchOptions {
    /// 0 means default_threads().
    unsigned threads = 0;
    /// Brute-force enumeration refuses groups with more than 2^max_log2 elements.
    unsigned max_log2 = kDefaultMaxEnumerationLog2;
    /// Stop at the first element (in Gray-code order) whose support is at most
    /// this value. The chosen element does not depend on the thread count.
    std::optional<size_t> stop_at_or_below;
    /// Windowed search refuses to evaluate more subsets than this.
    uint64_t max_window_subsets = uint64_t{1} << 36;
};

/// Minimum support over S \ {I}, by Gray-code enumeration of all 2^q - 1
/// nonidentity elements.
WeightReport min_weight_bruteforce(const StabilizerGroup& group, const SearchOptions& options = {});

/// Minimum support over products of generators whose lattice centers are pairwise
/// within `radius` (Hamming distance). Generator i must belong to vertex i.
WeightReport min_weight_windowed(const StabilizerGroup& group, const Lattice& lattice, size_t radius = 4,
                                 const SearchOptions& options = {});

enum class CosetPolicy {
    kRequireCommuting,    ///< `logical` must commute with every generator.
    kAllowAnticommuting,  ///< Any Pauli; e.g. Z_A against a cluster state.
};

/// Minimum support over the coset {l * sigma : sigma in S}. Zero when l is in S
/// up to phase.
WeightReport coset_min_weight(const StabilizerGroup& group, const PauliString& logical,
                              const SearchOptions& options = {},
                              CosetPolicy policy = CosetPolicy::kRequireCommuting);

struct UniformityVerdict {
    bool uniform = false;
    WeightReport report;
};

/// m-uniform iff every nonidentity element has support > m. Uses an early-stop
/// brute-force scan.
UniformityVerdict is_m_uniform(const StabilizerGroup& group, size_t m, const SearchOptions& options = {});

struct SubsetSweepResult {
    bool passed = true;
    std::optional<QubitSubset> first_failure;
    uint64_t subsets_checked = 0;
};

/// Checks S_A == {I} for every |A| = m (lexicographic order of A) through the
/// GF(2) kernel, without any element enumeration.
SubsetSweepResult subset_sweep_check(const StabilizerGroup& group, size_t m, uint64_t max_subsets = 5'000'000);

/// True when the generators are exactly the cluster generators of `lattice`.
bool is_cluster_group(const StabilizerGroup& group, const Lattice& lattice);

}  // namespace clusterqec

#endif
