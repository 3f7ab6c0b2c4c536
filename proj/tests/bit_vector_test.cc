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

#include "clusterqec/bit_vector.h"

#include <gtest/gtest.h>

#include <random>

#include "clusterqec/errors.h"

namespace clusterqec {
namespace {

TEST(BitVectorTest, StringRoundTripAcrossWordBoundary) {
    std::string bits(130, '0');
    bits[0] = bits[63] = bits[64] = bits[129] = '1';
    BitVector v = BitVector::from_string(bits);
    EXPECT_EQ(v.size(), 130u);
    EXPECT_EQ(v.num_words(), 3u);
    EXPECT_EQ(v.popcount(), 4u);
    EXPECT_EQ(v.to_string(), bits);
    EXPECT_EQ(v.set_bits(), (std::vector<size_t>{0, 63, 64, 129}));
}

TEST(BitVectorTest, RejectsBadCharacters) { EXPECT_THROW(BitVector::from_string("01x"), InvalidInput); }

TEST(BitVectorTest, MismatchedLengthsThrow) {
    BitVector a(5);
    BitVector b(6);
    EXPECT_THROW(a ^= b, DimensionError);
}

TEST(BitVectorTest, NextSetWalksAllBits) {
    BitVector v(200);
    for (size_t i : {3u, 64u, 65u, 199u}) {
        v.set(i, true);
    }
    std::vector<size_t> seen;
    for (size_t i = v.first_set(); i < v.size(); i = v.next_set(i + 1)) {
        seen.push_back(i);
    }
    EXPECT_EQ(seen, v.set_bits());
    EXPECT_EQ(BitVector(10).first_set(), 10u);
}

TEST(BitVectorTest, OrderingIsLittleEndianInteger) {
    EXPECT_LT(BitVector::from_uint64(4, 1), BitVector::from_uint64(4, 2));
    EXPECT_LT(BitVector::from_uint64(4, 7), BitVector::from_uint64(4, 8));
    EXPECT_LT(BitVector::from_uint64(3, 7), BitVector::from_uint64(4, 0));
}

TEST(BitVectorTest, XorAndDotMatchScalarReference) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; trial++) {
        const size_t n = 1 + rng() % 150;
        BitVector a(n);
        BitVector b(n);
        for (size_t i = 0; i < n; i++) {
            a.set(i, rng() & 1);
            b.set(i, rng() & 1);
        }
        BitVector c = a ^ b;
        bool parity = false;
        for (size_t i = 0; i < n; i++) {
            ASSERT_EQ(c.get(i), a.get(i) != b.get(i));
            parity ^= a.get(i) && b.get(i);
        }
        EXPECT_EQ(dot(a, b), parity);
        EXPECT_EQ((a & b).popcount() + (a | b).popcount(), a.popcount() + b.popcount());
    }
}

}  // namespace
}  // namespace clusterqec
