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
// Positive roots of the affine root system of type A^(1)_n, arch notation and
// the dihedral relabelling of ordered alphabets.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace asl {

/// Letters are labelled 0..n around the cyclic Dynkin diagram.
using Letter = int;

/// Thrown for malformed input (bad ranks, non-permutations, letters out of range).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// k mod (n+1), always in {0,...,n}.
constexpr Letter residue(long long k, int rank) {
    const long long m = rank + 1;
    return static_cast<Letter>(((k % m) + m) % m);
}

/// The cyclic letter set {0,...,n} together with a total order on it.
///
/// `order()` lists the letters from smallest to largest. The cyclic (Dynkin)
/// labelling and the lexicographic order are kept separate: `position(x)` is
/// the rank of letter x in the order.
class OrderedAlphabet {
public:
    OrderedAlphabet(int rank, std::vector<Letter> order) : rank_(rank), order_(std::move(order)) {
        if (rank_ < 1) throw InvalidArgument("rank must be >= 1");
        if (static_cast<int>(order_.size()) != rank_ + 1)
            throw InvalidArgument("order must list exactly rank+1 letters");
        position_.assign(order_.size(), -1);
        for (std::size_t p = 0; p < order_.size(); ++p) {
            const Letter x = order_[p];
            if (x < 0 || x > rank_) throw InvalidArgument("letter out of range in order");
            if (position_[x] != -1) throw InvalidArgument("order is not a permutation");
            position_[x] = static_cast<int>(p);
        }
    }

    /// 1 < 2 < ... < n < 0.
    static OrderedAlphabet standard(int rank) {
        std::vector<Letter> order(rank + 1);
        std::iota(order.begin(), order.end() - 1, 1);
        order.back() = 0;
        return OrderedAlphabet(rank, std::move(order));
    }

    int rank() const { return rank_; }
    int size() const { return rank_ + 1; }
    const std::vector<Letter>& order() const { return order_; }
    int position(Letter x) const { return position_[x]; }
    Letter min_letter() const { return order_[0]; }
    Letter second_min() const { return order_[1]; }
    bool less(Letter x, Letter y) const { return position_[x] < position_[y]; }

    bool is_standard() const { return *this == standard(rank_); }

    friend bool operator==(const OrderedAlphabet& a, const OrderedAlphabet& b) {
        return a.rank_ == b.rank_ && a.order_ == b.order_;
    }

    /// "1<2<0" style rendering.
    std::string to_string() const {
        std::string out;
        for (std::size_t p = 0; p < order_.size(); ++p) {
            if (p) out += '<';
            out += std::to_string(order_[p]);
        }
        return out;
    }

private:
    int rank_;
    std::vector<Letter> order_;
    std::vector<int> position_;
};

/// Letters of the arch [i -> j): i, i+1, ..., j-1 (mod n+1). Empty when i == j.
inline std::vector<Letter> arch_letters(Letter i, Letter j, int rank) {
    std::vector<Letter> out;
    for (Letter x = i; x != j; x = residue(x + 1, rank)) out.push_back(x);
    return out;
}

/// A positive affine root: either k*delta + alpha_{i->j} (real; the arch
/// alpha_i + ... + alpha_j is inclusive of both ends) or k*delta (imaginary).
struct AffineRoot {
    enum class Kind { Real, Imaginary };

    Kind kind = Kind::Real;
    int k = 0;
    Letter i = 0;
    Letter j = 0;

    static AffineRoot real(int k, Letter i, Letter j) { return {Kind::Real, k, i, j}; }
    static AffineRoot imaginary(int k) { return {Kind::Imaginary, k, 0, 0}; }

    bool is_real() const { return kind == Kind::Real; }
    bool is_imaginary() const { return kind == Kind::Imaginary; }

    auto operator<=>(const AffineRoot&) const = default;
};

/// A real root, or an imaginary root k*delta together with a copy index r in 1..n.
struct ExtendedRoot {
    AffineRoot root;
    int r = 0;  // 0 for real roots

    static ExtendedRoot real(const AffineRoot& root) { return {root, 0}; }
    static ExtendedRoot imaginary(int k, int r) { return {AffineRoot::imaginary(k), r}; }

    auto operator<=>(const ExtendedRoot&) const = default;
};

/// Number of simple roots on the (inclusive) arch i -> j.
constexpr int arch_length(Letter i, Letter j, int rank) { return residue(j - i, rank) + 1; }

/// True for admissible real-root arches: j != i-1 (mod n+1).
constexpr bool is_proper_arch(Letter i, Letter j, int rank) { return j != residue(i - 1, rank); }

/// Coefficients (c_0, ..., c_n) of the root over the simple roots.
inline std::vector<int> coefficients(const AffineRoot& root, int rank) {
    std::vector<int> c(rank + 1, root.k);
    if (root.is_real()) {
        for (Letter x : arch_letters(root.i, residue(root.j + 1, rank), rank)) c[x] += 1;
    }
    return c;
}

inline int height(const AffineRoot& root, int rank) {
    if (root.is_imaginary()) return root.k * (rank + 1);
    return root.k * (rank + 1) + arch_length(root.i, root.j, rank);
}

/// Inverse of `coefficients`: recognises positive roots by their coefficient vector.
inline std::optional<AffineRoot> root_from_coefficients(const std::vector<int>& c) {
    const int rank = static_cast<int>(c.size()) - 1;
    if (rank < 1) return std::nullopt;
    const int k = *std::min_element(c.begin(), c.end());
    if (k < 0) return std::nullopt;
    std::vector<int> ones;
    for (Letter x = 0; x <= rank; ++x) {
        const int e = c[x] - k;
        if (e > 1) return std::nullopt;
        if (e == 1) ones.push_back(x);
    }
    if (ones.empty()) {
        if (k == 0) return std::nullopt;
        return AffineRoot::imaginary(k);
    }
    // The ones must form one cyclic interval; find its start (a one preceded by a zero).
    Letter start = -1;
    for (Letter x : ones) {
        if (c[residue(x - 1, rank)] - k == 0) {
            if (start != -1) return std::nullopt;
            start = x;
        }
    }
    if (start == -1) return std::nullopt;
    const Letter end = residue(start + static_cast<int>(ones.size()) - 1, rank);
    return AffineRoot::real(k, start, end);
}

/// All positive roots of height <= max_height, sorted by height; within one
/// height the imaginary root comes first, then real roots by (i, j).
inline std::vector<AffineRoot> enumerate_positive_roots(int rank, int max_height) {
    if (rank < 1) throw InvalidArgument("rank must be >= 1");
    if (max_height < 1) throw InvalidArgument("max_height must be >= 1");
    std::vector<AffineRoot> roots;
    const int h = rank + 1;
    for (int k = 0; k * h < max_height + h; ++k) {
        if (k >= 1 && k * h <= max_height) roots.push_back(AffineRoot::imaginary(k));
        for (Letter i = 0; i <= rank; ++i) {
            for (Letter j = 0; j <= rank; ++j) {
                if (!is_proper_arch(i, j, rank)) continue;
                const auto r = AffineRoot::real(k, i, j);
                if (height(r, rank) <= max_height) roots.push_back(r);
            }
        }
    }
    std::stable_sort(roots.begin(), roots.end(), [rank](const AffineRoot& a, const AffineRoot& b) {
        const int ha = height(a, rank), hb = height(b, rank);
        if (ha != hb) return ha < hb;
        if (a.kind != b.kind) return a.is_imaginary();
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    return roots;
}

/// A symmetry of the cycle {0..n}: x -> shift + x, or x -> shift - x when reflecting.
struct DihedralMap {
    int rank = 1;
    int shift = 0;
    bool reflect = false;

    Letter apply(Letter x) const { return residue(reflect ? shift - x : shift + x, rank); }

    DihedralMap inverse() const {
        if (reflect) return *this;  // reflections are involutions
        return {rank, residue(-shift, rank), false};
    }

    bool is_identity() const { return !reflect && residue(shift, rank) == 0; }

    OrderedAlphabet apply(const OrderedAlphabet& a) const {
        std::vector<Letter> order;
        order.reserve(a.order().size());
        for (Letter x : a.order()) order.push_back(apply(x));
        return OrderedAlphabet(a.rank(), std::move(order));
    }

    AffineRoot apply(const AffineRoot& root) const {
        if (root.is_imaginary()) return root;
        const auto c = coefficients(root, rank);
        std::vector<int> mapped(c.size());
        for (Letter x = 0; x <= rank; ++x) mapped[apply(x)] = c[x];
        return *root_from_coefficients(mapped);
    }

    friend bool operator==(const DihedralMap&, const DihedralMap&) = default;
};

struct CanonicalOrder {
    OrderedAlphabet alphabet;
    DihedralMap map;  // original letter -> canonical letter
};

/// Relabels the alphabet by a dihedral symmetry so that the minimal letter is 1
/// and, for n >= 2, the second-minimal letter is not 0. For n = 1 only the
/// first condition can hold.
inline CanonicalOrder canonicalize_order(const OrderedAlphabet& a) {
    const int n = a.rank();
    const Letter lo = a.min_letter();
    DihedralMap rotation{n, residue(1 - lo, n), false};
    if (n == 1 || rotation.apply(a.second_min()) != 0) return {rotation.apply(a), rotation};
    DihedralMap reflection{n, residue(1 + lo, n), true};
    return {reflection.apply(a), reflection};
}

/// Min letter is 1 and (for n >= 2) the second-minimal letter is not 0.
inline bool is_canonical(const OrderedAlphabet& a) {
    return a.min_letter() == 1 && (a.rank() == 1 || a.second_min() != 0);
}

/// Human readable root label, e.g. "2δ+α[1→3]" or "3δ".
inline std::string root_label(const AffineRoot& root) {
    std::string prefix;
    if (root.k == 1) prefix = "δ";
    else if (root.k > 1) prefix = std::to_string(root.k) + "δ";
    if (root.is_imaginary()) return prefix;
    std::string arch = "α[" + std::to_string(root.i) + "→" + std::to_string(root.j) + "]";
    return prefix.empty() ? arch : prefix + "+" + arch;
}

inline std::string root_label(const ExtendedRoot& x) {
    if (x.root.is_real()) return root_label(x.root);
    return "(" + root_label(x.root) + "," + std::to_string(x.r) + ")";
}

}  // namespace asl
