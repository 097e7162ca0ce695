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
// Shared helpers for the test binaries.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <string_view>
#include <vector>

#include "asl/loop_algebra.hpp"
#include "asl/root_system.hpp"
#include "asl/words.hpp"

namespace asl {

// Readable gtest failure messages.
inline void PrintTo(const Word& w, std::ostream* os) { *os << '"' << to_compact(w, 10) << '"'; }
inline void PrintTo(const LoopElement& e, std::ostream* os) { *os << e.to_string(); }

}  // namespace asl

namespace asl::testing {

inline Word W(std::string_view digits) { return Word::from_digits(digits); }

inline OrderedAlphabet order_of(int rank, std::vector<Letter> order) { return OrderedAlphabet(rank, std::move(order)); }

/// Every total order on {0..n}.
inline std::vector<OrderedAlphabet> all_orders(int rank) {
    std::vector<Letter> p(rank + 1);
    std::iota(p.begin(), p.end(), 0);
    std::vector<OrderedAlphabet> out;
    do out.emplace_back(rank, p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// One canonical representative per dihedral class of orders.
inline std::vector<OrderedAlphabet> canonical_orders(int rank) {
    std::vector<OrderedAlphabet> out;
    for (const auto& a : all_orders(rank)) {
        const auto c = canonicalize_order(a).alphabet;
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    return out;
}

inline std::vector<OrderedAlphabet> sampled_orders(int rank, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Letter> p(rank + 1);
    std::vector<OrderedAlphabet> out;
    for (int s = 0; s < count; ++s) {
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        out.emplace_back(rank, p);
    }
    return out;
}

/// Affine Cartan matrix of A^(1)_n (rank 1: [[2,-2],[-2,2]]).
inline std::vector<std::vector<int>> cartan(int rank) {
    const int m = rank + 1;
    std::vector<std::vector<int>> a(m, std::vector<int>(m, 0));
    for (int x = 0; x < m; ++x) {
        a[x][x] = 2;
        a[x][(x + 1) % m] -= 1;
        a[(x + 1) % m][x] -= 1;
    }
    return a;
}

/// Positive roots as coefficient vectors: nonzero c >= 0 with (c, c) in {0, 2}
/// for the symmetric Cartan form.
inline std::set<std::vector<int>> cartan_roots(int rank, int max_height) {
    const auto a = cartan(rank);
    const int m = rank + 1;
    std::set<std::vector<int>> out;
    std::vector<int> c(m, 0);
    // Odometer over all vectors with coordinate sum <= max_height.
    while (true) {
        int s = std::accumulate(c.begin(), c.end(), 0);
        if (s > 0 && s <= max_height) {
            long q = 0;
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) q += static_cast<long>(c[x]) * a[x][y] * c[y];
            if (q == 0 || q == 2) out.insert(c);
        }
        int p = 0;
        while (p < m) {
            ++c[p];
            if (std::accumulate(c.begin(), c.end(), 0) <= max_height) break;
            c[p] = 0;
            ++p;
        }
        if (p == m) break;
    }
    return out;
}

}  // namespace asl::testing
