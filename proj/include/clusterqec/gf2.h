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

#ifndef CLUSTERQEC_GF2_H
#define CLUSTERQEC_GF2_H

#include <cstddef>
#include <vector>

#include "clusterqec/bit_vector.h"

namespace clusterqec::gf2 {

/// Rank of the row set over GF(2). All rows must share one length.
size_t rank(std::vector<BitVector> rows);

/// Row-reduces `rows` in place to reduced row echelon form and returns the pivot
/// column of each nonzero row (zero rows are moved to the end). `on_row_op(dst, src)`
/// is invoked for every elementary `rows[dst] ^= rows[src]`, and `on_swap(a, b)`
/// for every exchange, so callers can mirror the operations on companion data.
template <typename RowOp, typename Swap>
std::vector<size_t> reduce(std::vector<BitVector>& rows, RowOp on_row_op, Swap on_swap) {
    std::vector<size_t> pivots;
    if (rows.empty()) {
        return pivots;
    }
    const size_t width = rows.front().size();
    size_t next_row = 0;
    for (size_t col = 0; col < width && next_row < rows.size(); col++) {
        size_t pivot = next_row;
        while (pivot < rows.size() && !rows[pivot].get(col)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        if (pivot != next_row) {
            std::swap(rows[pivot], rows[next_row]);
            on_swap(pivot, next_row);
        }
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next_row && rows[r].get(col)) {
                rows[r] ^= rows[next_row];
                on_row_op(r, next_row);
            }
        }
        pivots.push_back(col);
        next_row++;
    }
    return pivots;
}

/// Basis of {c : sum_i c_i rows[i] = 0}, i.e. the left null space. Each returned
/// vector has length rows.size().
std::vector<BitVector> left_kernel(const std::vector<BitVector>& rows);

}  // namespace clusterqec::gf2

#endif
