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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "asl/root_system.hpp"
#include "test_support.hpp"

using namespace asl;
using asl::testing::cartan_roots;

TEST(Residue, Examples) {
    EXPECT_EQ(residue(5, 4), 0);
    EXPECT_EQ(residue(-1, 4), 4);
    EXPECT_EQ(residue(6, 2), 0);
    EXPECT_EQ(residue(-7, 2), 2);
}

TEST(ArchLetters, Examples) {
    EXPECT_EQ(arch_letters(0, 3, 4), (std::vector<Letter>{0, 1, 2}));
    EXPECT_TRUE(arch_letters(2, 2, 4).empty());
    EXPECT_EQ(arch_letters(3, 1, 3), (std::vector<Letter>{3, 0}));
}

TEST(ArchLetters, ComplementaryArchesPartitionTheCycle) {
    for (int n = 1; n <= 6; ++n) {
        for (Letter i = 0; i <= n; ++i) {
            for (Letter j = 0; j <= n; ++j) {
                if (i == j) continue;
                auto a = arch_letters(i, j, n);
                auto b = arch_letters(j, i, n);
                std::set<Letter> all(a.begin(), a.end());
                for (Letter x : b) EXPECT_TRUE(all.insert(x).second) << "overlap at " << x;
                EXPECT_EQ(static_cast<int>(all.size()), n + 1);
            }
        }
    }
}

TEST(Height, Examples) {
    EXPECT_EQ(height(AffineRoot::real(0, 1, 1), 4), 1);
    EXPECT_EQ(height(AffineRoot::imaginary(2), 2), 6);
    EXPECT_EQ(height(AffineRoot::real(1, 2, 0), 2), 5);
}

TEST(Coefficients, ArchIndicatorPlusDelta) {
    EXPECT_EQ(coefficients(AffineRoot::real(1, 2, 0), 2), (std::vector<int>{2, 1, 2}));
    EXPECT_EQ(coefficients(AffineRoot::real(0, 3, 1), 3), (std::vector<int>{1, 1, 0, 1}));
    EXPECT_EQ(coefficients(AffineRoot::imaginary(3), 2), (std::vector<int>{3, 3, 3}));
}

TEST(Coefficients, RoundTrip) {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& r : enumerate_positive_roots(n, 3 * (n + 1) + n)) {
            auto back = root_from_coefficients(coefficients(r, n));
            ASSERT_TRUE(back.has_value());
            EXPECT_EQ(*back, r) << root_label(r);
        }
    }
    EXPECT_FALSE(root_from_coefficients({0, 0, 0}).has_value());
    EXPECT_FALSE(root_from_coefficients({2, 0, 0}).has_value());
    EXPECT_FALSE(root_from_coefficients({1, 0, 1, 0}).has_value());
    EXPECT_FALSE(root_from_coefficients({-1, 1, 1}).has_value());
}

TEST(EnumeratePositiveRoots, RankOneHeightThree) {
    const auto roots = enumerate_positive_roots(1, 3);
    const std::set<AffineRoot> got(roots.begin(), roots.end());
    const std::set<AffineRoot> want = {AffineRoot::real(0, 1, 1), AffineRoot::real(0, 0, 0), AffineRoot::imaginary(1),
                                       AffineRoot::real(1, 1, 1), AffineRoot::real(1, 0, 0)};
    EXPECT_EQ(got, want);
}

TEST(EnumeratePositiveRoots, RankTwoHeightTwo) {
    const auto roots = enumerate_positive_roots(2, 2);
    const std::set<AffineRoot> got(roots.begin(), roots.end());
    const std::set<AffineRoot> want = {AffineRoot::real(0, 0, 0), AffineRoot::real(0, 1, 1), AffineRoot::real(0, 2, 2),
                                       AffineRoot::real(0, 0, 1), AffineRoot::real(0, 1, 2), AffineRoot::real(0, 2, 0)};
    EXPECT_EQ(got, want);
}

TEST(EnumeratePositiveRoots, RankTwoHeightThreeHasSevenRoots) {
    // Frozen from the Cartan-form brute force: six roots of height <= 2 plus delta.
    const auto roots = enumerate_positive_roots(2, 3);
    EXPECT_EQ(roots.size(), 7u);
    EXPECT_EQ(cartan_roots(2, 3).size(), 7u);
    EXPECT_EQ(roots.back(), AffineRoot::imaginary(1));
}

TEST(EnumeratePositiveRoots, MatchesCartanFormBruteForce) {
    for (int n = 1; n <= 5; ++n) {
        const int h = 3 * (n + 1) + 2;
        std::set<std::vector<int>> got;
        for (const auto& r : enumerate_positive_roots(n, h)) got.insert(coefficients(r, n));
        EXPECT_EQ(got, cartan_roots(n, h)) << "rank " << n;
    }
}

TEST(EnumeratePositiveRoots, BandCountsAndOrdering) {
    for (int n = 1; n <= 6; ++n) {
        const int bands = 4;
        const auto roots = enumerate_positive_roots(n, bands * (n + 1) + n);
        std::map<int, int> real_per_k, imaginary_per_k;
        for (const auto& r : roots) (r.is_real() ? real_per_k : imaginary_per_k)[r.k]++;
        for (int k = 0; k <= bands; ++k) EXPECT_EQ(real_per_k[k], n * (n + 1));
        for (int k = 1; k <= bands; ++k) EXPECT_EQ(imaginary_per_k[k], 1);
        EXPECT_EQ(imaginary_per_k.count(0), 0u);
        for (std::size_t p = 1; p < roots.size(); ++p) {
            const int h0 = height(roots[p - 1], n), h1 = height(roots[p], n);
            ASSERT_LE(h0, h1);
            if (h0 == h1) {
                EXPECT_FALSE(roots[p].is_imaginary());
                if (roots[p - 1].is_real()) EXPECT_LT(std::pair(roots[p - 1].i, roots[p - 1].j), std::pair(roots[p].i, roots[p].j));
            }
        }
    }
}

TEST(EnumeratePositiveRoots, RejectsBadInput) {
    EXPECT_THROW(enumerate_positive_roots(1, 0), InvalidArgument);
    EXPECT_THROW(enumerate_positive_roots(0, 3), InvalidArgument);
}

TEST(OrderedAlphabet, Basics) {
    const auto a = OrderedAlphabet(3, {1, 3, 2, 0});
    EXPECT_EQ(a.min_letter(), 1);
    EXPECT_EQ(a.second_min(), 3);
    EXPECT_TRUE(a.less(2, 0));
    EXPECT_FALSE(a.less(2, 3));
    EXPECT_EQ(a.to_string(), "1<3<2<0");
    EXPECT_TRUE(OrderedAlphabet::standard(4).is_standard());
    EXPECT_EQ(OrderedAlphabet::standard(2).to_string(), "1<2<0");
}

TEST(OrderedAlphabet, RejectsNonPermutations) {
    EXPECT_THROW(OrderedAlphabet(2, {1, 1, 0}), InvalidArgument);
    EXPECT_THROW(OrderedAlphabet(2, {1, 2}), InvalidArgument);
    EXPECT_THROW(OrderedAlphabet(2, {1, 2, 3}), InvalidArgument);
    EXPECT_THROW(OrderedAlphabet(0, {0}), InvalidArgument);
}

TEST(CanonicalizeOrder, AlreadyCanonicalIsIdentity) {
    const auto c = canonicalize_order(OrderedAlphabet::standard(2));
    EXPECT_TRUE(c.map.is_identity());
    EXPECT_EQ(c.alphabet, OrderedAlphabet::standard(2));
}

TEST(CanonicalizeOrder, RotationExample) {
    const auto c = canonicalize_order(OrderedAlphabet(2, {0, 1, 2}));
    EXPECT_FALSE(c.map.reflect);
    EXPECT_EQ(c.map.apply(0), 1);
    EXPECT_EQ(c.map.apply(1), 2);
    EXPECT_EQ(c.map.apply(2), 0);
    EXPECT_EQ(c.alphabet.to_string(), "1<2<0");
}

TEST(CanonicalizeOrder, ReflectionExample) {
    const auto c = canonicalize_order(OrderedAlphabet(2, {2, 1, 0}));
    EXPECT_EQ(c.map.apply(2), 1);
    EXPECT_NE(c.alphabet.second_min(), 0);
    EXPECT_EQ(c.alphabet.min_letter(), 1);
    // A pure rotation would send 1 to 0, so a reflection is needed.
    EXPECT_TRUE(c.map.reflect);
}

TEST(CanonicalizeOrder, EveryOrderBecomesCanonical) {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& a : asl::testing::all_orders(n)) {
            const auto c = canonicalize_order(a);
            EXPECT_TRUE(is_canonical(c.alphabet)) << a.to_string();
            EXPECT_EQ(c.alphabet.min_letter(), 1);
            if (n >= 2) EXPECT_NE(c.alphabet.second_min(), 0);
            for (Letter x = 0; x <= n; ++x) {
                EXPECT_EQ(c.map.inverse().apply(c.map.apply(x)), x);
                // The relabelling preserves the order position of every letter.
                EXPECT_EQ(c.alphabet.position(c.map.apply(x)), a.position(x));
            }
        }
    }
}

TEST(DihedralMap, MapsRootsToRoots) {
    const int n = 4;
    for (int shift = 0; shift <= n; ++shift) {
        for (bool reflect : {false, true}) {
            DihedralMap m{n, shift, reflect};
            std::set<AffineRoot> image;
            const auto roots = enumerate_positive_roots(n, 2 * (n + 1) + n);
            for (const auto& r : roots) {
                const AffineRoot s = m.apply(r);
                EXPECT_EQ(height(s, n), height(r, n));
                EXPECT_EQ(m.inverse().apply(s), r);
                image.insert(s);
            }
            EXPECT_EQ(image.size(), roots.size());
        }
    }
}

TEST(RootLabel, Rendering) {
    EXPECT_EQ(root_label(AffineRoot::real(2, 1, 3)), "2δ+α[1→3]");
    EXPECT_EQ(root_label(AffineRoot::real(0, 4, 4)), "α[4→4]");
    EXPECT_EQ(root_label(AffineRoot::imaginary(1)), "δ");
    EXPECT_EQ(root_label(ExtendedRoot::imaginary(2, 3)), "(2δ,3)");
}
