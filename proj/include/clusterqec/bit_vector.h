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

#ifndef CLUSTERQEC_BIT_VECTOR_H
#define CLUSTERQEC_BIT_VECTOR_H

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clusterqec {

/// Fixed-length GF(2) vector packed into 64-bit words. Bits past `size()` in
/// the last word are always zero, so word-wise popcount and comparison are exact.
class BitVector {
   public:
    static constexpr size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(size_t num_bits);

    /// Parses a string of '0'/'1' characters; character i becomes bit i.
    static BitVector from_string(std::string_view bits);
    /// Bits 0..63 of `value`, truncated to `num_bits`.
    static BitVector from_uint64(size_t num_bits, uint64_t value);

    size_t size() const { return size_; }
    size_t num_words() const { return words_.size(); }
    std::span<uint64_t> words() { return words_; }
    std::span<const uint64_t> words() const { return words_; }

    bool get(size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    void set(size_t i, bool value);
    void flip(size_t i) { words_[i / kWordBits] ^= uint64_t{1} << (i % kWordBits); }
    void clear();

    size_t popcount() const;
    bool any() const;
    bool none() const { return !any(); }
    /// Index of the lowest set bit, or size() if none.
    size_t first_set() const;
    /// Index of the lowest set bit at or after `from`, or size() if none.
    size_t next_set(size_t from) const;
    std::vector<size_t> set_bits() const;

    BitVector& operator^=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    BitVector& operator|=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

    /// Parity of popcount(a & b).
    friend bool dot(const BitVector& a, const BitVector& b);

    bool operator==(const BitVector& other) const = default;
    /// Orders first by length, then as a little-endian integer (bit 0 least significant).
    std::strong_ordering operator<=>(const BitVector& other) const;

    /// '0'/'1' characters, bit 0 first.
    std::string to_string() const;

   private:
    void check_same_size(const BitVector& other) const;

    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace clusterqec

#endif
