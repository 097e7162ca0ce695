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
// Affine standard Lyndon words of type A^(1)_n.
//
// compute_table builds the words root by root in increasing height:
//   * a simple root alpha_i gets the single letter i;
//   * any other real root gets the lexicographically largest concatenation
//     u v of table words u < v of degrees gamma1 + gamma2 = alpha with
//     [b[u], b[v]] != 0;
//   * the imaginary degree k*delta gets the n largest such concatenations
//     (parts never both imaginary) with linearly independent standard
//     bracketings, chosen greedily from the top.
// oracle_degree is the independent check: it enumerates every Lyndon word of
// a degree and keeps those whose bracketing is not in the span of the
// bracketings of larger Lyndon words.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "asl/loop_algebra.hpp"
#include "asl/root_system.hpp"
#include "asl/words.hpp"

namespace asl {

/// Raised when the table violates one of its own invariants (an engine bug or
/// malformed input that slipped through).
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when an oracle enumeration would exceed its configured size.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SLEntry {
    AffineRoot root;
    int height = 0;
    std::vector<Word> words;                // one word, or n words in decreasing order
    std::vector<LoopElement> bracketings;   // parallel to `words`
};

/// Memoized map from positive roots to their standard Lyndon word(s).
class SLTable {
public:
    SLTable(OrderedAlphabet alphabet, int max_height) : alphabet_(std::move(alphabet)), max_height_(max_height) {}

    const OrderedAlphabet& alphabet() const { return alphabet_; }
    int rank() const { return alphabet_.rank(); }
    int max_height() const { return max_height_; }

    /// Entries in enumeration order (height, then imaginary first, then arch).
    const std::vector<SLEntry>& entries() const { return entries_; }

    const SLEntry* find(const AffineRoot& root) const {
        auto it = index_.find(root);
        return it == index_.end() ? nullptr : &entries_[it->second];
    }

    bool contains(const AffineRoot& root) const { return index_.count(root) != 0; }

    const SLEntry& at(const AffineRoot& root) const {
        const SLEntry* e = find(root);
        if (!e) throw InvalidArgument("root " + root_label(root) + " is beyond the table height");
        return *e;
    }

    /// SL(alpha) for a real root.
    const Word& word(const AffineRoot& root) const {
        if (!root.is_real()) throw InvalidArgument("word(): imaginary root needs an index");
        return at(root).words.front();
    }

    /// SL(x) with SL((k delta, r)) = SL_r(k delta).
    const Word& word(const ExtendedRoot& x) const {
        if (x.root.is_real()) return word(x.root);
        const auto& ws = at(x.root).words;
        if (x.r < 1 || x.r > static_cast<int>(ws.size())) throw InvalidArgument("imaginary index out of range");
        return ws[x.r - 1];
    }

    /// SL_1(k delta) > ... > SL_n(k delta).
    const std::vector<Word>& imaginary_words(int k) const { return at(AffineRoot::imaginary(k)).words; }

    /// Standard bracketings of every stored word.
    const BracketingCache<LoopElement>& bracketings() const { return bracketings_; }

    std::optional<LoopElement> bracketing(const Word& w) const {
        auto it = bracketings_.find(w);
        if (it == bracketings_.end()) return std::nullopt;
        return it->second;
    }

    /// Every real root and every indexed imaginary root in the table.
    std::vector<ExtendedRoot> extended_roots() const {
        std::vector<ExtendedRoot> out;
        for (const auto& e : entries_) {
            if (e.root.is_real()) {
                out.push_back(ExtendedRoot::real(e.root));
            } else {
                for (int r = 1; r <= static_cast<int>(e.words.size()); ++r)
                    out.push_back(ExtendedRoot::imaginary(e.root.k, r));
            }
        }
        return out;
    }

private:
    friend class TableBuilder;

    OrderedAlphabet alphabet_;
    int max_height_;
    std::vector<SLEntry> entries_;
    std::map<AffineRoot, std::size_t> index_;
    BracketingCache<LoopElement> bracketings_;
};

/// Worker count from ASL_THREADS, falling back to the hardware concurrency.
inline unsigned default_thread_count() {
    if (const char* env = std::getenv("ASL_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

class TableBuilder {
public:
    explicit TableBuilder(SLTable& table) : table_(table), backend_{table.rank()} {}

    void build(unsigned threads) {
        const int n = table_.rank();
        const auto roots = enumerate_positive_roots(n, table_.max_height_);
        table_.entries_.reserve(roots.size());
        for (const auto& r : roots) {
            table_.index_.emplace(r, table_.entries_.size());
            table_.entries_.push_back(SLEntry{r, height(r, n), {}, {}});
        }
        std::size_t begin = 0;
        while (begin < roots.size()) {
            std::size_t end = begin;
            const int h = table_.entries_[begin].height;
            while (end < roots.size() && table_.entries_[end].height == h) ++end;
            fill_layer(begin, end, threads);
            for (std::size_t e = begin; e < end; ++e) {
                const auto& entry = table_.entries_[e];
                for (std::size_t w = 0; w < entry.words.size(); ++w)
                    table_.bracketings_.emplace(entry.words[w], entry.bracketings[w]);
            }
            begin = end;
        }
    }

private:
    struct Candidate {
        Word word;
        std::size_t left_entry, left_word, right_entry, right_word;
    };

    void fill_layer(std::size_t begin, std::size_t end, unsigned threads) {
        const std::size_t count = end - begin;
        const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
        if (workers <= 1) {
            for (std::size_t e = begin; e < end; ++e) fill_entry(e);
            return;
        }
        // Roots of one height only read strictly lower layers, so slots are independent.
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t e = begin + t; e < end; e += workers) fill_entry(e);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    void fill_entry(std::size_t slot) {
        SLEntry& entry = table_.entries_[slot];
        const int n = table_.rank();
        const auto& a = table_.alphabet_;
        if (entry.root.is_real() && entry.height == 1) {
            entry.words = {Word{entry.root.i}};
            entry.bracketings = {generator(entry.root.i, n)};
            return;
        }

        auto candidates = collect_candidates(entry);
        std::sort(candidates.begin(), candidates.end(),
                  [&](const Candidate& x, const Candidate& y) { return lex_less(y.word, x.word, a); });

        BracketingCache<LoopElement> scratch;
        const std::size_t wanted = entry.root.is_real() ? 1 : static_cast<std::size_t>(n);
        for (std::size_t c = 0; c < candidates.size() && entry.words.size() < wanted;) {
            // Group equal words; the word qualifies if any of its splittings has a nonzero bracket.
            std::size_t stop = c;
            bool nonzero = false;
            while (stop < candidates.size() && candidates[stop].word == candidates[c].word) {
                nonzero = nonzero || !pair_bracket(candidates[stop]).is_zero();
                ++stop;
            }
            if (nonzero) {
                const Word& w = candidates[c].word;
                LoopElement b = standard_bracketing(w, a, backend_, scratch, &table_.bracketings_);
                if (entry.root.is_real()) {
                    if (b.is_zero())
                        throw InternalInconsistency("standard bracketing of the maximal candidate vanishes at " +
                                                    root_label(entry.root));
                    entry.words.push_back(w);
                    entry.bracketings.push_back(std::move(b));
                } else if (grows_span(entry.bracketings, b)) {
                    entry.words.push_back(w);
                    entry.bracketings.push_back(std::move(b));
                }
            }
            c = stop;
        }
        if (entry.words.size() != wanted)
            throw InternalInconsistency("too few candidates at " + root_label(entry.root));
    }

    LoopElement pair_bracket(const Candidate& c) const {
        const auto& l = table_.entries_[c.left_entry];
        const auto& r = table_.entries_[c.right_entry];
        return bracket(l.bracketings[c.left_word], r.bracketings[c.right_word]);
    }

    std::vector<Candidate> collect_candidates(const SLEntry& entry) const {
        const int n = table_.rank();
        const auto& a = table_.alphabet_;
        const auto target = coefficients(entry.root, n);
        std::vector<Candidate> out;
        for (std::size_t e1 = 0; e1 < table_.entries_.size(); ++e1) {
            const SLEntry& left = table_.entries_[e1];
            if (left.height >= entry.height) break;
            std::vector<int> rest = target;
            const auto lc = coefficients(left.root, n);
            bool positive = true;
            for (int x = 0; x <= n; ++x) {
                rest[x] -= lc[x];
                positive = positive && rest[x] >= 0;
            }
            if (!positive) continue;
            const auto other = root_from_coefficients(rest);
            if (!other) continue;
            if (left.root.is_imaginary() && other->is_imaginary()) continue;
            const std::size_t e2 = table_.index_.at(*other);
            const SLEntry& right = table_.entries_[e2];
            for (std::size_t u = 0; u < left.words.size(); ++u) {
                for (std::size_t v = 0; v < right.words.size(); ++v) {
                    if (lex_less(left.words[u], right.words[v], a))
                        out.push_back(Candidate{left.words[u] + right.words[v], e1, u, e2, v});
                }
            }
        }
        return out;
    }

    SLTable& table_;
    LoopBackend backend_;
};

/// Standard Lyndon words of every positive root of height <= max_height.
inline SLTable compute_table(const OrderedAlphabet& a, int max_height, unsigned threads = default_thread_count()) {
    if (max_height < 1) throw InvalidArgument("compute_table: max_height must be >= 1");
    SLTable table(a, max_height);
    TableBuilder(table).build(threads);
    return table;
}

/// Number of distinct arrangements of a letter multiset (saturates at `cap` + 1).
inline unsigned long long multinomial(const std::vector<int>& counts, unsigned long long cap) {
    // Product of binomials C(prefix, count), computed exactly with early saturation.
    unsigned long long total = 1;
    int prefix = 0;
    for (int c : counts) {
        for (int t = 1; t <= c; ++t) {
            ++prefix;
            // total * prefix / t stays integral at every step.
            const unsigned __int128 next = static_cast<unsigned __int128>(total) * prefix / t;
            if (next > cap) return cap + 1;
            total = static_cast<unsigned long long>(next);
        }
    }
    return total;
}

inline constexpr unsigned long long kDefaultOracleGuard = 5'000'000;

/// Every Lyndon word with the given letter counts, in decreasing order.
inline std::vector<Word> lyndon_words_of_degree(const OrderedAlphabet& a, const std::vector<int>& deg,
                                                unsigned long long guard = kDefaultOracleGuard) {
    if (static_cast<int>(deg.size()) != a.size()) throw InvalidArgument("degree has the wrong length");
    if (multinomial(deg, guard) > guard)
        throw GuardExceeded("oracle enumeration exceeds the guard of " + std::to_string(guard) + " permutations");
    std::vector<Letter> letters;
    for (Letter x = 0; x < static_cast<Letter>(deg.size()); ++x) letters.insert(letters.end(), deg[x], x);
    std::vector<Word> out;
    if (letters.empty()) return out;
    do {
        if (is_lyndon(std::span<const Letter>(letters), a)) out.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    std::sort(out.begin(), out.end(), [&](const Word& u, const Word& v) { return lex_less(v, u, a); });
    return out;
}

/// Definition-level oracle: Lyndon words of degree `deg`, largest first, kept
/// when their bracketing is independent of the bracketings of larger words.
template <BracketBackend Backend>
std::vector<Word> oracle_degree(const OrderedAlphabet& a, const std::vector<int>& deg, const Backend& backend,
                                BracketingCache<typename Backend::Element>& cache,
                                unsigned long long guard = kDefaultOracleGuard) {
    std::vector<Word> kept;
    std::vector<typename Backend::Element> basis;
    for (const Word& w : lyndon_words_of_degree(a, deg, guard)) {
        auto b = standard_bracketing(w, a, backend, cache);
        if (backend.grows_span(std::span<const typename Backend::Element>(basis), b)) {
            kept.push_back(w);
            basis.push_back(std::move(b));
        }
    }
    return kept;
}

inline std::vector<Word> oracle_degree(const OrderedAlphabet& a, const std::vector<int>& deg,
                                       unsigned long long guard = kDefaultOracleGuard) {
    BracketingCache<LoopElement> cache;
    return oracle_degree(a, deg, LoopBackend{a.rank()}, cache, guard);
}

struct OracleMismatch {
    AffineRoot root;
    std::vector<Word> engine;
    std::vector<Word> oracle;
};

struct OracleReport {
    OrderedAlphabet alphabet;
    int max_height = 0;
    std::size_t degrees_checked = 0;
    std::vector<OracleMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Compares compute_table against oracle_degree on every root degree up to max_height.
inline OracleReport verify_oracle(const OrderedAlphabet& a, int max_height,
                                  unsigned long long guard = kDefaultOracleGuard) {
    const SLTable table = compute_table(a, max_height);
    OracleReport report{a, max_height, 0, {}};
    BracketingCache<LoopElement> cache;
    const LoopBackend backend{a.rank()};
    for (const auto& entry : table.entries()) {
        auto expected = oracle_degree(a, coefficients(entry.root, a.rank()), backend, cache, guard);
        ++report.degrees_checked;
        if (expected != entry.words) report.mismatches.push_back({entry.root, entry.words, std::move(expected)});
    }
    return report;
}

}  // namespace asl
