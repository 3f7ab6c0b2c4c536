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

#include "clusterqec/encoding.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "clusterqec/errors.h"
#include "verify/oracles.h"

namespace clusterqec {
namespace {

TEST(EncodingTest, CircuitMatchesFormula) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> angle(0, 2 * M_PI);
    for (auto lat : {Lattice::cubic(1, 6, Boundary::kPeriodic), Lattice({2, 3}, Boundary::kOpen)}) {
        Graph g = Graph::from_lattice(lat);
        for (int trial = 0; trial < 10; trial++) {
            QubitSubset a = oracle::random_subset(lat.num_vertices(), rng);
            const double theta = angle(rng) / 2;
            Complex alpha = std::cos(theta);
            Complex beta = std::polar(std::sin(theta), angle(rng));
            auto enc = LogicalEncoding::from_graph(g, a, alpha, beta);
            auto states = encode_statevector(enc);
            EXPECT_LT((states.circuit_state - states.formula_state).cwiseAbs().maxCoeff(), 1e-12);
            EXPECT_NEAR(states.circuit_state.norm(), 1.0, 1e-12);
            EXPECT_GT(states.postselection_probability, 0.0);
        }
    }
}

TEST(EncodingTest, GroupPathMatchesGraphPath) {
    auto lat = Lattice::cubic(1, 5, Boundary::kPeriodic);
    Graph g = Graph::from_lattice(lat);
    QubitSubset a({0, 2}, 5);
    const double h = 1 / std::sqrt(2.0);
    auto from_graph = encode_statevector(LogicalEncoding::from_graph(g, a, h, h));
    auto from_group = encode_statevector(
        LogicalEncoding::from_group(StabilizerGroup::from_generators(graph_generators(g)), a, h, h));
    Complex overlap = from_graph.formula_state.dot(from_group.formula_state);
    EXPECT_NEAR(std::abs(overlap), 1.0, 1e-12);
}

TEST(EncodingTest, ConstructorValidation) {
    Graph g = Graph::from_lattice(Lattice::cubic(1, 4, Boundary::kPeriodic));
    EXPECT_THROW(LogicalEncoding::from_graph(g, QubitSubset({0}, 4), 1.0, 1.0), InvalidInput);
    EXPECT_THROW(LogicalEncoding::from_graph(g, QubitSubset({}, 4), 1.0, 0.0), InvalidInput);
    EXPECT_THROW(LogicalEncoding::from_graph(g, QubitSubset({0}, 5), 1.0, 0.0), DimensionError);
    auto enc = LogicalEncoding::from_graph(g, QubitSubset({1, 3}, 4), 1.0, 0.0);
    EXPECT_EQ(enc.logical_z().to_string(), "+IZIZ");
    auto ghz = StabilizerGroup::from_generators(ghz_generators(3));
    EXPECT_THROW(LogicalEncoding::from_group(ghz, QubitSubset({0, 1}, 3), 1.0, 0.0), InvalidInput);
}

TEST(EncodingTest, UniformVerdictMatchesLowWeightExpectations) {
    std::mt19937_64 rng(5);
    auto lat = Lattice::cubic(1, 8, Boundary::kPeriodic);
    Graph g = Graph::from_lattice(lat);
    // Real and imaginary alpha* beta probe the commuting and anticommuting cross terms.
    const std::vector<std::pair<Complex, Complex>> amplitudes = {
        {0.6, 0.8}, {0.6, Complex(0, 0.8)}, {0.6, std::polar(0.8, 0.7)}};
    int uniform_count = 0;
    for (int trial = 0; trial < 12; trial++) {
        QubitSubset a = oracle::random_subset(8, rng);
        auto verdict = logical_space_is_m_uniform(LogicalEncoding::from_graph(g, a, 0.6, 0.8), 2);
        double worst = 0;
        for (auto [alpha, beta] : amplitudes) {
            auto states = encode_statevector(LogicalEncoding::from_graph(g, a, alpha, beta));
            worst = std::max(worst, oracle::max_low_weight_expectation(states.formula_state, 2));
        }
        EXPECT_EQ(verdict.uniform, worst < 1e-10) << "worst " << worst;
        EXPECT_EQ(verdict.uniform,
                  verdict.stabilizer_report.min_support > 2 && verdict.coset_report.min_support > 2);
        uniform_count += verdict.uniform;
    }
    EXPECT_GT(uniform_count, 0);
    EXPECT_LT(uniform_count, 12);
}

TEST(EncodingTest, MinimalSearchWitnessIsUniform) {
    auto lat = Lattice::cubic(1, 9, Boundary::kPeriodic);
    auto res = minimal_A_search(lat, 2, SubsetFamily::kContiguous);
    ASSERT_TRUE(res.witness.has_value());
    auto enc = LogicalEncoding::from_graph(Graph::from_lattice(lat), *res.witness, 1.0, 0.0);
    EXPECT_TRUE(logical_space_is_m_uniform(enc, 2).uniform);
    auto all = minimal_A_search(lat, 2, SubsetFamily::kAllSubsets);
    ASSERT_TRUE(all.witness.has_value());
    EXPECT_LE(all.witness->size(), res.witness->size());
    if (all.witness->size() > 1) {
        QubitSubset smaller(std::vector<size_t>(all.witness->qubits().begin(), all.witness->qubits().end() - 1), 9);
        EXPECT_NE(smaller, *all.witness);
    }
}

TEST(EncodingTest, SearchReportsNothingWhenBaseFails) {
    auto lat = Lattice::cubic(1, 6, Boundary::kPeriodic);
    auto res = minimal_A_search(lat, 3, SubsetFamily::kAllSubsets);
    EXPECT_FALSE(res.witness.has_value());
}

TEST(EncodingTest, FamilyNames) {
    EXPECT_EQ(parse_family("contiguous"), SubsetFamily::kContiguous);
    EXPECT_EQ(parse_family("all-subsets"), SubsetFamily::kAllSubsets);
    EXPECT_THROW(parse_family("nope"), InvalidInput);
    EXPECT_THROW(minimal_A_search(Lattice::cubic(1, 15, Boundary::kPeriodic), 2, SubsetFamily::kAllSubsets),
                 ResourceLimit);
}

}  // namespace
}  // namespace clusterqec
