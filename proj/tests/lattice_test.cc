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

#include "clusterqec/lattice.h"

#include <gtest/gtest.h>

#include <sstream>

#include "clusterqec/dense.h"
#include "clusterqec/errors.h"
#include "clusterqec/stabilizer_group.h"

namespace clusterqec {
namespace {

TEST(LatticeTest, IndexAndCoordinatesRoundTrip) {
    Lattice lat({3, 4, 5}, Boundary::kPeriodic);
    EXPECT_EQ(lat.num_vertices(), 60u);
    for (size_t v = 0; v < lat.num_vertices(); v++) {
        EXPECT_EQ(lat.index(lat.coordinates(v)), v);
    }
    EXPECT_EQ(lat.coordinates(1), (std::vector<size_t>{1, 0, 0}));
}

TEST(LatticeTest, NeighborCounts) {
    auto pbc = Lattice::cubic(2, 4, Boundary::kPeriodic);
    auto obc = Lattice::cubic(2, 4, Boundary::kOpen);
    for (size_t v = 0; v < 16; v++) {
        EXPECT_EQ(pbc.neighbors(v).size(), 4u);
    }
    EXPECT_EQ(obc.neighbors(0).size(), 2u);
    EXPECT_EQ(obc.neighbors(1).size(), 3u);
    EXPECT_EQ(obc.neighbors(5).size(), 4u);
    EXPECT_EQ(Graph::from_lattice(pbc).edges().size(), 32u);
    EXPECT_EQ(Graph::from_lattice(obc).edges().size(), 24u);
}

TEST(LatticeTest, HammingDistanceWraps) {
    auto ring = Lattice::cubic(1, 10, Boundary::kPeriodic);
    auto chain = Lattice::cubic(1, 10, Boundary::kOpen);
    EXPECT_EQ(ring.hamming_distance(0, 9), 1u);
    EXPECT_EQ(chain.hamming_distance(0, 9), 9u);
    auto torus = Lattice::cubic(2, 5, Boundary::kPeriodic);
    EXPECT_EQ(torus.hamming_distance(torus.index({0, 0}), torus.index({4, 3})), 3u);
}

TEST(LatticeTest, RejectsDegenerateShapes) {
    EXPECT_THROW(Lattice::cubic(1, 2, Boundary::kPeriodic), InvalidInput);
    EXPECT_THROW(Lattice(std::vector<size_t>{}, Boundary::kOpen), InvalidInput);
    EXPECT_THROW(Lattice({3, 0}, Boundary::kOpen), InvalidInput);
    EXPECT_NO_THROW(Lattice::cubic(1, 2, Boundary::kOpen));
}

TEST(LatticeTest, ClusterGeneratorsOnChain) {
    auto chain = Lattice::cubic(1, 4, Boundary::kOpen);
    auto gens = cluster_generators(chain);
    ASSERT_EQ(gens.size(), 4u);
    EXPECT_EQ(gens[0].to_string(), "+XZII");
    EXPECT_EQ(gens[1].to_string(), "+ZXZI");
    EXPECT_EQ(gens[3].to_string(), "+IIZX");
    auto ring = cluster_generators(Lattice::cubic(1, 4, Boundary::kPeriodic));
    EXPECT_EQ(ring[0].to_string(), "+XZIZ");
}

TEST(LatticeTest, ClusterGeneratorsMatchGraphGenerators) {
    for (auto b : {Boundary::kPeriodic, Boundary::kOpen}) {
        auto lat = Lattice({3, 4}, b);
        EXPECT_EQ(cluster_generators(lat), graph_generators(Graph::from_lattice(lat)));
    }
}

TEST(LatticeTest, ExtendedGraphRange) {
    auto g = extended_graph(6, 2, Boundary::kOpen);
    EXPECT_EQ(g.edges().size(), 9u);
    auto gens = extended_generators(7, 2, Boundary::kPeriodic);
    EXPECT_EQ(gens[0].to_string(), "+XZZIIZZ");
    EXPECT_THROW(extended_graph(4, 2, Boundary::kPeriodic), InvalidInput);
}

TEST(LatticeTest, GhzGenerators) {
    auto gens = ghz_generators(3);
    ASSERT_EQ(gens.size(), 3u);
    EXPECT_EQ(gens[0].to_string(), "+XXX");
    EXPECT_EQ(gens[1].to_string(), "+ZZI");
    EXPECT_NO_THROW(StabilizerGroup::from_generators(gens));
}

TEST(LatticeTest, EdgeListParsing) {
    std::istringstream in("# triangle plus a leaf\n0 1\n1 2\n\n2 0  # closing edge\n2 3\n");
    Graph g = read_edge_list(in);
    EXPECT_EQ(g.num_vertices(), 4u);
    EXPECT_EQ(g.edges().size(), 4u);
    std::istringstream bad("0 x\n");
    EXPECT_THROW(read_edge_list(bad), InvalidInput);
    std::istringstream loop("1 1\n");
    EXPECT_THROW(read_edge_list(loop), InvalidInput);
}

TEST(LatticeTest, CircuitPreparesStabilizedState) {
    auto lat = Lattice({2, 3}, Boundary::kOpen);
    Graph g = Graph::from_lattice(lat);
    Circuit c = graph_state_circuit(g);
    EXPECT_EQ(c.count_h(), 6u);
    EXPECT_EQ(c.count_cz(), g.edges().size());
    CircuitRun run = simulate(c, zero_state(6));
    EXPECT_NEAR(run.postselection_probability, 1.0, 1e-12);
    for (const auto& s : graph_generators(g)) {
        EXPECT_NEAR(expectation(s, run.state).real(), 1.0, 1e-12) << s.to_string();
    }
}

TEST(LatticeTest, CircuitRejectsBadGates) {
    Circuit c(3);
    EXPECT_THROW(c.h(3), InvalidInput);
    EXPECT_THROW(c.cz(1, 1), InvalidInput);
}

}  // namespace
}  // namespace clusterqec
