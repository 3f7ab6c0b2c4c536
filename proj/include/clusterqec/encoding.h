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

#ifndef CLUSTERQEC_ENCODING_H
#define CLUSTERQEC_ENCODING_H

#include <optional>

#include "clusterqec/dense.h"
#include "clusterqec/lattice.h"
#include "clusterqec/stabilizer_group.h"
#include "clusterqec/uniformity.h"

namespace clusterqec {

/// |phi> = alpha |cs> + beta Z_A |cs>, written by an ancilla that applies CZ to
/// every qubit of A and is then measured in the X basis with outcome +1.
class LogicalEncoding {
   public:
    /// Base state given by a graph; the circuit path prepares it with H and CZ.
    static LogicalEncoding from_graph(const Graph& graph, QubitSubset a, Complex alpha, Complex beta);
    /// Base state given only by its stabilizers; the circuit path starts from
    /// state_vector(base).
    static LogicalEncoding from_group(StabilizerGroup base, QubitSubset a, Complex alpha, Complex beta);

    const StabilizerGroup& base() const { return base_; }
    const std::optional<Graph>& graph() const { return graph_; }
    const QubitSubset& subset() const { return a_; }
    /// Product of Z over A.
    const PauliString& logical_z() const { return z_a_; }
    Complex alpha() const { return alpha_; }
    Complex beta() const { return beta_; }

   private:
    LogicalEncoding(StabilizerGroup base, std::optional<Graph> graph, QubitSubset a, Complex alpha, Complex beta);

    StabilizerGroup base_;
    std::optional<Graph> graph_;
    QubitSubset a_;
    PauliString z_a_;
    Complex alpha_;
    Complex beta_;
};

struct EncodedStates {
    /// Ancilla circuit, postselected and renormalized, ancilla traced out.
    StateVector circuit_state;
    /// alpha |cs> + beta Z_A |cs>, normalized.
    StateVector formula_state;
    double postselection_probability = 0.0;
};

inline constexpr size_t kMaxEncodeQubits = 10;

EncodedStates encode_statevector(const LogicalEncoding& enc);

struct LogicalUniformity {
    bool uniform = false;
    /// Minimum support over S \ {I}.
    WeightReport stabilizer_report;
    /// Minimum support over Z_A * S.
    WeightReport coset_report;
};

/// Every state in span{|cs>, Z_A|cs>} is m-uniform iff both minimum supports
/// exceed m.
LogicalUniformity logical_space_is_m_uniform(const LogicalEncoding& enc, size_t m, const SearchOptions& options = {});

enum class SubsetFamily {
    kContiguous,  ///< Runs of consecutive linear indices, wrapping when every axis is periodic.
    kAllSubsets,  ///< Every subset; needs n <= 14.
};

std::string family_name(SubsetFamily f);
SubsetFamily parse_family(const std::string& name);

struct MinimalASearch {
    /// Empty when no subset in the family works (e.g. the base state itself is
    /// not m-uniform).
    std::optional<QubitSubset> witness;
    size_t candidates_checked = 0;
    WeightReport stabilizer_report;
    /// Coset report for the witness.
    std::optional<WeightReport> coset_report;
};

inline constexpr size_t kMaxAllSubsetsQubits = 14;

/// Smallest |A| (lexicographically smallest A among ties) for which the encoded
/// logical space of the cluster state on `lattice` is m-uniform.
MinimalASearch minimal_A_search(const Lattice& lattice, size_t m, SubsetFamily family,
                                const SearchOptions& options = {});

}  // namespace clusterqec

#endif
