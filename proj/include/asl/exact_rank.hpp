// Copyright 2026 The affine-lyndon Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// =========================================================================
// Rank of an integer matrix by fraction-free (Bareiss) elimination.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace asl {

using BigInt = boost::multiprecision::cpp_int;

/// Rank over Q of the matrix whose rows are given. All intermediate values stay
/// integral: every division below is exact.
inline std::size_t exact_rank(std::vector<std::vector<BigInt>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    BigInt prev_pivot = 1;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const BigInt& p = rows[rank][c];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const BigInt f = rows[r][c];
            for (std::size_t cc = c; cc < cols; ++cc) {
                rows[r][cc] = (p * rows[r][cc] - f * rows[rank][cc]) / prev_pivot;
            }
        }
        prev_pivot = p;
        ++rank;
    }
    return rank;
}

}  // namespace asl
