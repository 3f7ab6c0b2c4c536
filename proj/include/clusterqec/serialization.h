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

#ifndef CLUSTERQEC_SERIALIZATION_H
#define CLUSTERQEC_SERIALIZATION_H

#include "clusterqec/encoding.h"
#include "clusterqec/lattice.h"
#include "clusterqec/noisesim.h"
#include "clusterqec/stabilizer_group.h"
#include "clusterqec/syndrome.h"
#include "clusterqec/uniformity.h"
#include "json.hpp"

// JSON renderings of the library's result types. Field names are listed in
// docs/schemas.md. Timing fields are emitted only on request so that repeated
// runs produce identical bytes.

namespace clusterqec {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Lattice& lattice);
Json to_json(const Graph& graph);
Json to_json(const StabilizerGroup& group);
Json to_json(const QubitSubset& subset);
/// Nested rows of [re, im] pairs.
Json to_json(const DenseMatrix& m);
Json to_json(const WeightReport& report, bool include_timing);
Json to_json(const SubsetSweepResult& result);
Json to_json(const SyndromeTable& table);
Json to_json(const Identification& id);
Json to_json(const PatternRates& rates);
Json to_json(const LineFit& fit);
Json to_json(const RateFit& fit);
Json to_json(const LogicalUniformity& verdict, bool include_timing);
Json to_json(const MinimalASearch& search, bool include_timing);

/// 1-based label for a one-qubit error, e.g. "X3" for X on qubit index 2.
/// Empty when `error` is not supported on exactly one qubit.
std::string one_based_label(const PauliString& error);

/// Generators parsed from a JSON array of Pauli strings or an object with a
/// "generators" member.
std::vector<PauliString> generators_from_json(const Json& j);

}  // namespace clusterqec

#endif
