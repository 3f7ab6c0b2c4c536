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

#include "clusterqec/pauli_string.h"

#include <gtest/gtest.h>

#include <random>

#include "clusterqec/dense.h"
#include "clusterqec/errors.h"

namespace clusterqec {
namespace {

PauliString random_pauli(size_t n, std::mt19937_64& rng) {
    PauliString p(n);
    for (size_t j = 0; j < n; j++) {
        p.set(j, static_cast<Pauli>(rng() % 4));
    }
    p.set_phase(static_cast<uint8_t>(rng() % 4));
    return p;
}

TEST(PauliStringTest, ParseAndRender) {
    EXPECT_EQ(PauliString::parse("XZZ").to_string(), "+XZZ");
    EXPECT_EQ(PauliString::parse("-XYI").to_string(), "-XYI");
    EXPECT_EQ(PauliString::parse("iZ").to_string(), "+iZ");
    EXPECT_EQ(PauliString::parse("-iX_").letters(), "XI");
    EXPECT_THROW(PauliString::parse("XQ"), InvalidInput);
}

TEST(PauliStringTest, SingleQubitProducts) {
    auto x = PauliString::parse("X");
    auto y = PauliString::parse("Y");
    auto z = PauliString::parse("Z");
    EXPECT_EQ((x * y).to_string(), "+iZ");
    EXPECT_EQ((y * x).to_string(), "-iZ");
    EXPECT_EQ((z * x).to_string(), "+iY");
    EXPECT_EQ((y * z).to_string(), "+iX");
    EXPECT_EQ((y * y).to_string(), "+I");
}

TEST(PauliStringTest, WeightAndSupport) {
    auto p = PauliString::parse("XIZYI");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.support(), (std::vector<size_t>{0, 2, 3}));
    EXPECT_EQ(p.at(3), Pauli::Y);
}

TEST(PauliStringTest, CommutationCountsOverlaps) {
    EXPECT_TRUE(commutes(PauliString::parse("XX"), PauliString::parse("ZZ")));
    EXPECT_FALSE(commutes(PauliString::parse("XI"), PauliString::parse("ZZ")));
    EXPECT_THROW(commutes(PauliString::parse("X"), PauliString::parse("ZZ")), DimensionError);
}

TEST(PauliStringTest, ProductAgreesWithDenseMatrices) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        const size_t n = 1 + rng() % 4;
        PauliString a = random_pauli(n, rng);
        PauliString b = random_pauli(n, rng);
        DenseMatrix lhs = dense_matrix(a * b);
        DenseMatrix rhs = dense_matrix(a) * dense_matrix(b);
        ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12) << a.to_string() << " * " << b.to_string();
        DenseMatrix comm = dense_matrix(a) * dense_matrix(b) - dense_matrix(b) * dense_matrix(a);
        EXPECT_EQ(commutes(a, b), comm.cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST(PauliStringTest, WideStringsMultiplyLikeNarrowOnes) {
    std::mt19937_64 rng(5);
    const size_t n = 150;
    PauliString a = random_pauli(n, rng);
    PauliString b = random_pauli(n, rng);
    PauliString ab = a * b;
    uint8_t phase = (a.phase() + b.phase()) & 3;
    for (size_t j = 0; j < n; j++) {
        PauliString aj = PauliString::single(1, 0, a.at(j));
        PauliString bj = PauliString::single(1, 0, b.at(j));
        PauliString cj = aj * bj;
        phase = (phase + cj.phase()) & 3;
        EXPECT_EQ(ab.at(j), cj.at(0));
    }
    EXPECT_EQ(ab.phase(), phase);
}

TEST(PauliStringTest, HermitianSquaresToIdentity) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; trial++) {
        PauliString p = random_pauli(7, rng);
        p.set_phase(p.phase() & 2);
        PauliString sq = p * p;
        EXPECT_TRUE(sq.is_identity_up_to_phase());
        EXPECT_EQ(sq.phase(), 0);
    }
}

}  // namespace
}  // namespace clusterqec
