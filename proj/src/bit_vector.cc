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

#include "clusterqec/errors.h"

namespace clusterqec {

BitVector::BitVector(size_t num_bits) : size_(num_bits), words_((num_bits + kWordBits - 1) / kWordBits, 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector result(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            result.set(i, true);
        } else if (bits[i] != '0') {
            throw InvalidInput("bit string may only contain '0' and '1': " + std::string(bits));
        }
    }
    return result;
}

BitVector BitVector::from_uint64(size_t num_bits, uint64_t value) {
    BitVector result(num_bits);
    if (num_bits == 0) {
        return result;
    }
    if (num_bits < kWordBits) {
        value &= (uint64_t{1} << num_bits) - 1;
    }
    result.words_[0] = value;
    return result;
}

void BitVector::set(size_t i, bool value) {
    uint64_t mask = uint64_t{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

void BitVector::clear() {
    for (auto& w : words_) {
        w = 0;
    }
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

size_t BitVector::first_set() const { return next_set(0); }

size_t BitVector::next_set(size_t from) const {
    if (from >= size_) {
        return size_;
    }
    size_t k = from / kWordBits;
    uint64_t w = words_[k] & (~uint64_t{0} << (from % kWordBits));
    while (true) {
        if (w) {
            return k * kWordBits + std::countr_zero(w);
        }
        if (++k == words_.size()) {
            return size_;
        }
        w = words_[k];
    }
}

std::vector<size_t> BitVector::set_bits() const {
    std::vector<size_t> result;
    for (size_t i = first_set(); i < size_; i = next_set(i + 1)) {
        result.push_back(i);
    }
    return result;
}

void BitVector::check_same_size(const BitVector& other) const {
    if (size_ != other.size_) {
        throw DimensionError("bit vector length mismatch: " + std::to_string(size_) + " vs " +
                             std::to_string(other.size_));
    }
}

BitVector& BitVector::operator^=(const BitVector& other) {
    check_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    check_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
    check_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

bool dot(const BitVector& a, const BitVector& b) {
    a.check_same_size(b);
    uint64_t acc = 0;
    for (size_t k = 0; k < a.words_.size(); k++) {
        acc ^= a.words_[k] & b.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::strong_ordering BitVector::operator<=>(const BitVector& other) const {
    if (auto c = size_ <=> other.size_; c != 0) {
        return c;
    }
    for (size_t k = words_.size(); k-- > 0;) {
        if (auto c = words_[k] <=> other.words_[k]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

std::string BitVector::to_string() const {
    std::string out(size_, '0');
    for (size_t i = 0; i < size_; i++) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

}  // namespace clusterqec
