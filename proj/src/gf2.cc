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

#include "clusterqec/gf2.h"

namespace clusterqec::gf2 {

size_t rank(std::vector<BitVector> rows) {
    return reduce(rows, [](size_t, size_t) {}, [](size_t, size_t) {}).size();
}

std::vector<BitVector> left_kernel(const std::vector<BitVector>& rows) {
    const size_t count = rows.size();
    std::vector<BitVector> work = rows;
    std::vector<BitVector> combos;
    combos.reserve(count);
    for (size_t i = 0; i < count; i++) {
        BitVector unit(count);
        unit.set(i, true);
        combos.push_back(std::move(unit));
    }
    auto pivots = reduce(
        work, [&](size_t dst, size_t src) { combos[dst] ^= combos[src]; },
        [&](size_t a, size_t b) { std::swap(combos[a], combos[b]); });
    std::vector<BitVector> kernel;
    for (size_t r = pivots.size(); r < count; r++) {
        kernel.push_back(combos[r]);
    }
    return kernel;
}

}  // namespace clusterqec::gf2
