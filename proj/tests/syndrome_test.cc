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

#include <gtest/gtest.h>

#include <random>

#include "clusterqec/errors.h"
#include "clusterqec/lattice.h"
#include "verify/oracles.h"

namespace clusterqec {
namespace {

StabilizerGroup ring(size_t n) {
    return StabilizerGroup::from_generators(cluster_generators(Lattice::cubic(1, n, Boundary::kPeriodic)));
}

TEST(SyndromeTest, SingleQubitPatternsOnRing) {
    auto g = ring(6);
    EXPECT_EQ(syndrome(g, PauliString::parse("IIXIII")).to_string(), "010100");
    EXPECT_EQ(syndrome(g, PauliString::parse("IIZIII")).to_string(), "001000");
    EXPECT_EQ(syndrome(g, PauliString::parse("IIYIII")).to_string(), "011100");
    EXPECT_EQ(syndrome(g, PauliString::parse("XIIIII")).to_string(), "010001");
    EXPECT_THROW(syndrome(g, PauliString::parse("XII")), DimensionError);
}

TEST(SyndromeTest, SyndromeIsLinear) {
    std::mt19937_64 rng(17);
    auto g = StabilizerGroup::from_generators(oracle::random_lc_graph_generators(8, rng));
    for (int trial = 0; trial < 100; trial++) {
        PauliString a(8);
        PauliString b(8);
        for (size_t j = 0; j < 8; j++) {
            a.set(j, static_cast<Pauli>(rng() % 4));
            b.set(j, static_cast<Pauli>(rng() % 4));
        }
        EXPECT_EQ(syndrome(g, a * b), syndrome(g, a) ^ syndrome(g, b));
    }
    for (uint64_t mask = 0; mask < 256; mask++) {
        EXPECT_TRUE(syndrome(g, g.element(mask)).none());
    }
}

TEST(SyndromeTest, RingTableIsPureForSingleErrors) {
    for (size_t n : {5u, 6u, 9u}) {
        auto table = build_table(ring(n), 1);
        EXPECT_TRUE(table.pure) << n;
        EXPECT_EQ(table.num_errors, 3 * n);
        EXPECT_EQ(table.entries.size(), 3 * n);
        EXPECT_TRUE(table.collisions().empty());
    }
}

TEST(SyndromeTest, OpenChainEndsCollide) {
    auto g = StabilizerGroup::from_generators(cluster_generators(Lattice::cubic(1, 5, Boundary::kOpen)));
    auto table = build_table(g, 1);
    EXPECT_FALSE(table.pure);
    auto id = identify(table, syndrome(g, PauliString::parse("XIIII")));
    EXPECT_EQ(id.status, IdentifyStatus::kAmbiguous);
    ASSERT_EQ(id.candidates.size(), 2u);
    EXPECT_EQ(id.candidates[0].to_string(), "+IZIII");
    EXPECT_EQ(id.candidates[1].to_string(), "+XIIII");
}

TEST(SyndromeTest, TwoErrorTableCollidesOnDistanceThreeRing) {
    auto table = build_table(ring(6), 2);
    EXPECT_EQ(table.num_errors, 3 * 6 + 9 * 15);
    EXPECT_FALSE(table.pure);
    EXPECT_FALSE(table.collisions().empty());
}

TEST(SyndromeTest, IdentifyStatuses) {
    auto g = ring(6);
    auto table = build_table(g, 1);
    auto hit = identify(table, BitVector::from_string("011100"));
    EXPECT_EQ(hit.status, IdentifyStatus::kIdentified);
    ASSERT_EQ(hit.candidates.size(), 1u);
    EXPECT_EQ(hit.candidates[0].to_string(), "+IIYIII");
    EXPECT_EQ(identify(table, BitVector(6)).status, IdentifyStatus::kNoError);
    EXPECT_EQ(identify(table, BitVector::from_string("110011")).status, IdentifyStatus::kUnknown);
    EXPECT_THROW(identify(table, BitVector(5)), DimensionError);
    EXPECT_EQ(identify_status_name(IdentifyStatus::kAmbiguous), "ambiguous");
}

TEST(SyndromeTest, AssumedQubitTable) {
    auto g = ring(6);
    auto table = build_table(g, 3, 2);
    EXPECT_EQ(table.num_errors, 3u);
    EXPECT_TRUE(table.pure);
    EXPECT_THROW(build_table(g, 1, 6), InvalidInput);
}

TEST(SyndromeTest, ErrorCapRaisesResourceLimit) {
    EXPECT_THROW(build_table(ring(30), 3, std::nullopt, 1000), ResourceLimit);
}

TEST(SyndromeTest, PureCodeCheck) {
    auto gens = cluster_generators(Lattice::cubic(1, 9, Boundary::kPeriodic));
    std::vector<size_t> a = {0, 3, 6};
    PauliString za = PauliString::on_qubits(9, a, Pauli::Z);
    std::vector<PauliString> kept;
    for (const auto& s : gens) {
        if (commutes(s, za)) {
            kept.push_back(s);
        }
    }
    auto code = StabilizerGroup::from_generators(9, kept);
    const size_t d = coset_min_weight(code, za).min_support;
    EXPECT_TRUE(pure_code_check(code, {za}, 1));
    EXPECT_EQ(pure_code_check(code, {za}, d), false);
    EXPECT_THROW(pure_code_check(code, {PauliString::parse("XIIIIIIII")}, 1), InvalidInput);
}

}  // namespace
}  // namespace clusterqec
