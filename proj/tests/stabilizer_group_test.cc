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

#include <gtest/gtest.h>

#include <random>

#include "clusterqec/errors.h"
#include "clusterqec/lattice.h"
#include "verify/oracles.h"

namespace clusterqec {
namespace {

StabilizerGroup chain_group(size_t n, Boundary b) {
    return StabilizerGroup::from_generators(cluster_generators(Lattice::cubic(1, n, b)));
}

TEST(StabilizerGroupTest, ValidationRejectsBadGenerators) {
    EXPECT_THROW(StabilizerGroup::from_generators({PauliString::parse("XI"), PauliString::parse("ZI")}),
                 InvalidInput);
    EXPECT_THROW(StabilizerGroup::from_generators({PauliString::parse("iXI")}), InvalidInput);
    EXPECT_THROW(StabilizerGroup::from_generators({PauliString::parse("ZZ"), PauliString::parse("-ZZ")}),
                 InvalidInput);
    EXPECT_THROW(StabilizerGroup::from_generators({PauliString::parse("ZZI"), PauliString::parse("ZZ")}),
                 DimensionError);
    auto dropped = StabilizerGroup::from_generators(
        {PauliString::parse("ZZI"), PauliString::parse("IZZ"), PauliString::parse("ZIZ")}, DependentPolicy::kDrop);
    EXPECT_EQ(dropped.num_generators(), 2u);
    EXPECT_THROW(StabilizerGroup::from_generators(
                     {PauliString::parse("ZZI"), PauliString::parse("IZZ"), PauliString::parse("ZIZ")}),
                 InvalidInput);
}

TEST(StabilizerGroupTest, DecomposeInvertsElement) {
    auto g = chain_group(6, Boundary::kPeriodic);
    for (uint64_t mask = 0; mask < 64; mask++) {
        PauliString e = g.element(mask);
        auto c = g.decompose(e);
        ASSERT_TRUE(c.has_value());
        EXPECT_EQ(*c, BitVector::from_uint64(6, mask));
        EXPECT_TRUE(g.contains(e));
        PauliString neg = e;
        neg.set_phase(e.phase() ^ 2);
        EXPECT_FALSE(g.contains(neg));
    }
    EXPECT_FALSE(g.decompose(PauliString::parse("ZIIIII")).has_value());
}

TEST(StabilizerGroupTest, EnumerationMatchesMaskOracle) {
    auto g = chain_group(5, Boundary::kOpen);
    auto gray = enumerate_elements(g);
    auto by_mask = oracle::elements_by_mask(g);
    ASSERT_EQ(gray.size(), by_mask.size());
    auto key = [](const PauliString& p) { return p.to_string(); };
    std::vector<std::string> a;
    std::vector<std::string> b;
    for (size_t i = 0; i < gray.size(); i++) {
        a.push_back(key(gray[i]));
        b.push_back(key(by_mask[i]));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
}

TEST(StabilizerGroupTest, EnumerationCapThrows) {
    auto g = chain_group(12, Boundary::kPeriodic);
    EXPECT_THROW(enumerate_elements(g, 10), ResourceLimit);
}

TEST(StabilizerGroupTest, DenseMatrixIsHomomorphism) {
    auto g = chain_group(4, Boundary::kPeriodic);
    for (uint64_t a = 0; a < 16; a++) {
        for (uint64_t b = 0; b < 16; b++) {
            DenseMatrix lhs = dense_matrix(g.element(a ^ b));
            DenseMatrix rhs = dense_matrix(g.element(a)) * dense_matrix(g.element(b));
            ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(StabilizerGroupTest, ProjectorProductEqualsProjectorSum) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; trial++) {
        auto g = StabilizerGroup::from_generators(oracle::random_lc_graph_generators(5, rng));
        DenseMatrix prod = oracle::projector_product(g);
        DenseMatrix sum = oracle::projector_sum(g);
        EXPECT_LT((prod - sum).cwiseAbs().maxCoeff(), 1e-12);
        StateVector psi = state_vector(g);
        DenseMatrix outer = psi * psi.adjoint();
        EXPECT_LT((outer - prod).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(StabilizerGroupTest, RestrictionMatchesFilterOracle) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; trial++) {
        auto g = StabilizerGroup::from_generators(oracle::random_lc_graph_generators(7, rng));
        QubitSubset a = oracle::random_subset(7, rng);
        auto restricted = restrict_to_subset(g, a);
        auto filtered = oracle::subgroup_by_filter(g, a);
        EXPECT_EQ(size_t{1} << restricted.num_generators(), filtered.size());
        for (const auto& p : filtered) {
            EXPECT_TRUE(restricted.contains(p)) << p.to_string();
        }
    }
}

TEST(StabilizerGroupTest, ReducedDensityMatrixMatchesPartialTrace) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; trial++) {
        auto g = StabilizerGroup::from_generators(oracle::random_lc_graph_generators(6, rng));
        QubitSubset a = oracle::random_subset(6, rng);
        DenseMatrix rho = reduced_density_matrix(g, a);
        DenseMatrix ref = oracle::partial_trace(state_vector(g), a);
        EXPECT_LT((rho - ref).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
        EXPECT_LT((rho - rho.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(StabilizerGroupTest, CompressRejectsOutsideSupport) {
    QubitSubset a({1, 3}, 4);
    EXPECT_EQ(compress_to_subset(PauliString::parse("-IXIZ"), a).to_string(), "-XZ");
    EXPECT_THROW(compress_to_subset(PauliString::parse("XIII"), a), InvalidInput);
    EXPECT_THROW(QubitSubset({1, 1}, 4), InvalidInput);
    EXPECT_THROW(QubitSubset({4}, 4), InvalidInput);
}

}  // namespace
}  // namespace clusterqec
