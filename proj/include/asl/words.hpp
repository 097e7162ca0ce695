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
// Words over the cyclic alphabet: lexicographic order relative to an
// arbitrary alphabet order, Lyndon words and their factorizations.

#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asl/root_system.hpp"

namespace asl {

/// A finite word over integer letters. Value semantics; no alphabet attached.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    explicit Word(std::span<const Letter> letters) : letters_(letters.begin(), letters.end()) {}

    /// Parses digit strings such as "10423" (single-digit letters only).
    static Word from_digits(std::string_view digits) {
        std::vector<Letter> v;
        v.reserve(digits.size());
        for (char ch : digits) {
            if (ch < '0' || ch > '9') throw InvalidArgument("non-digit in word literal");
            v.push_back(ch - '0');
        }
        return Word(std::move(v));
    }

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t p) const { return letters_[p]; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }
    const std::vector<Letter>& letters() const { return letters_; }
    std::span<const Letter> view() const { return letters_; }

    Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
        const std::size_t stop = len == std::string::npos ? letters_.size() : std::min(letters_.size(), pos + len);
        return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + stop));
    }

    Word& operator+=(const Word& other) {
        letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
        return *this;
    }
    Word& operator+=(Letter x) {
        letters_.push_back(x);
        return *this;
    }
    friend Word operator+(Word a, const Word& b) { return a += b; }

    Word repeated(int times) const {
        Word out;
        for (int t = 0; t < times; ++t) out += *this;
        return out;
    }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Letter x : w) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ull;
        return h ^ w.size();
    }
};

/// Letters joined without separator for rank <= 9, dot-separated otherwise.
inline std::string to_compact(const Word& w, int rank) {
    std::string out;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (rank > 9 && p) out += '.';
        out += std::to_string(w[p]);
    }
    return out;
}

enum class Ordering { Less, Equal, Greater };

/// Lexicographic comparison: the first differing letter decides through the
/// alphabet order, and a proper prefix is smaller than its extension.
inline Ordering compare(std::span<const Letter> u, std::span<const Letter> v, const OrderedAlphabet& a) {
    const std::size_t m = std::min(u.size(), v.size());
    for (std::size_t p = 0; p < m; ++p) {
        if (u[p] != v[p]) return a.less(u[p], v[p]) ? Ordering::Less : Ordering::Greater;
    }
    if (u.size() == v.size()) return Ordering::Equal;
    return u.size() < v.size() ? Ordering::Less : Ordering::Greater;
}

inline Ordering compare(const Word& u, const Word& v, const OrderedAlphabet& a) {
    return compare(u.view(), v.view(), a);
}

inline bool lex_less(const Word& u, const Word& v, const OrderedAlphabet& a) {
    return compare(u, v, a) == Ordering::Less;
}

/// Strict-weak-ordering adaptor for std algorithms.
struct LexLess {
    const OrderedAlphabet* alphabet;
    bool operator()(const Word& u, const Word& v) const { return lex_less(u, v, *alphabet); }
};

namespace detail {

// Duval scan: length of the longest prefix of `w` that is a power of a Lyndon
// word, and that Lyndon word's length.
inline std::pair<std::size_t, std::size_t> duval_prefix(std::span<const Letter> w, const OrderedAlphabet& a) {
    std::size_t i = 0, j = 1;
    while (j < w.size()) {
        if (w[j] == w[i]) {
            ++i;
        } else if (a.less(w[i], w[j])) {
            i = 0;
        } else {
            break;
        }
        ++j;
    }
    return {j, j - i};  // period j - i, scanned prefix j
}

}  // namespace detail

/// Lyndon test (w strictly smaller than every proper suffix), linear time.
inline bool is_lyndon(std::span<const Letter> w, const OrderedAlphabet& a) {
    if (w.empty()) throw InvalidArgument("is_lyndon: empty word");
    const auto [scanned, period] = detail::duval_prefix(w, a);
    return scanned == w.size() && period == w.size();
}

inline bool is_lyndon(const Word& w, const OrderedAlphabet& a) { return is_lyndon(w.view(), a); }

/// Quadratic suffix-definition test; kept as a cross-check for the linear scan.
inline bool is_lyndon_by_suffixes(const Word& w, const OrderedAlphabet& a) {
    if (w.empty()) throw InvalidArgument("is_lyndon: empty word");
    for (std::size_t s = 1; s < w.size(); ++s) {
        if (compare(w.view(), w.view().subspan(s), a) != Ordering::Less) return false;
    }
    return true;
}

/// Cyclic-rotation definition: w strictly smaller than all its nontrivial rotations.
inline bool is_lyndon_by_rotations(const Word& w, const OrderedAlphabet& a) {
    if (w.empty()) throw InvalidArgument("is_lyndon: empty word");
    for (std::size_t s = 1; s < w.size(); ++s) {
        Word rot = w.substr(s) + w.substr(0, s);
        if (compare(w, rot, a) != Ordering::Less) return false;
    }
    return true;
}

/// ell = ell1 ell2 with ell2 the longest proper Lyndon suffix.
inline std::pair<Word, Word> costandard_factorization(const Word& w, const OrderedAlphabet& a) {
    if (w.size() < 2) throw InvalidArgument("costandard_factorization: word has fewer than two letters");
    if (!is_lyndon(w, a)) throw InvalidArgument("costandard_factorization: word is not Lyndon");
    for (std::size_t s = 1; s < w.size(); ++s) {
        if (is_lyndon(w.view().subspan(s), a)) return {w.substr(0, s), w.substr(s)};
    }
    // Unreachable: the last letter is always a Lyndon suffix.
    throw InvalidArgument("costandard_factorization: no Lyndon suffix");
}

/// Unique factorization w = l1 l2 ... lk into Lyndon words with l1 >= ... >= lk.
inline std::vector<Word> canonical_factorization(const Word& w, const OrderedAlphabet& a) {
    if (w.empty()) throw InvalidArgument("canonical_factorization: empty word");
    std::vector<Word> parts;
    std::size_t start = 0;
    const auto letters = w.view();
    while (start < letters.size()) {
        const auto [scanned, period] = detail::duval_prefix(letters.subspan(start), a);
        std::size_t consumed = 0;
        while (consumed + period <= scanned) {
            parts.push_back(w.substr(start + consumed, period));
            consumed += period;
        }
        start += consumed;
    }
    return parts;
}

/// Letter counts as a coefficient vector over alpha_0..alpha_n.
inline std::vector<int> degree(const Word& w, int rank) {
    std::vector<int> c(rank + 1, 0);
    for (Letter x : w) {
        if (x < 0 || x > rank) throw InvalidArgument("degree: letter out of range");
        ++c[x];
    }
    return c;
}

}  // namespace asl
