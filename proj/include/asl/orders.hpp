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
// The order on extended positive roots induced by their standard Lyndon
// words, and checks of its properties over a computed table.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asl/engine.hpp"
#include "asl/root_system.hpp"
#include "asl/words.hpp"

namespace asl {

/// compare(SL(x), SL(y)) with SL((k delta, r)) = SL_r(k delta).
inline Ordering induced_compare(const ExtendedRoot& x, const ExtendedRoot& y, const SLTable& t) {
    return compare(t.word(x), t.word(y), t.alphabet());
}

/// First position where u and v differ (the shorter length if one is a prefix).
inline std::size_t first_difference(const Word& u, const Word& v) {
    const std::size_t m = std::min(u.size(), v.size());
    std::size_t p = 0;
    while (p < m && u[p] == v[p]) ++p;
    return p;
}

struct Witness {
    std::vector<ExtendedRoot> roots;
    std::vector<Word> words;
    std::string relation;  // e.g. "w0 < w1 > w2", with first-difference positions
};

struct OrderReport {
    enum class Status { Holds, Violated, Finding };

    std::string property;
    std::map<std::string, std::string> params;
    Status status = Status::Holds;
    std::string verdict;
    std::size_t checked = 0;
    std::vector<Witness> witnesses;

    bool holds() const { return status == Status::Holds; }
};

inline std::string to_string(OrderReport::Status s) {
    switch (s) {
        case OrderReport::Status::Holds: return "holds";
        case OrderReport::Status::Violated: return "violated";
        default: return "finding";
    }
}

namespace detail {

inline char relation_symbol(Ordering o) {
    switch (o) {
        case Ordering::Less: return '<';
        case Ordering::Greater: return '>';
        default: return '=';
    }
}

/// "w0 < w1 (@p) ..." for consecutive comparisons.
inline std::string chain_relation(const std::vector<Word>& words, const OrderedAlphabet& a) {
    std::string out = "w0";
    for (std::size_t p = 1; p < words.size(); ++p) {
        out += ' ';
        out += relation_symbol(compare(words[p - 1], words[p], a));
        out += " w" + std::to_string(p) + " (@" + std::to_string(first_difference(words[p - 1], words[p])) + ")";
    }
    return out;
}

inline std::map<std::string, std::string> base_params(const SLTable& t) {
    return {{"rank", std::to_string(t.rank())}, {"order", t.alphabet().to_string()},
            {"max_height", std::to_string(t.max_height())}};
}

inline void require_height(const SLTable& t, int needed, const char* what) {
    if (t.max_height() < needed)
        throw InvalidArgument(std::string(what) + ": table height " + std::to_string(t.max_height()) +
                              " is below the required " + std::to_string(needed));
}

/// Minimal letter of the alphabet lies on the arch of `root`.
inline bool arch_contains_min(const AffineRoot& root, const OrderedAlphabet& a) {
    const int n = a.rank();
    const auto letters = arch_letters(root.i, residue(root.j + 1, n), n);
    if (letters.empty()) return true;  // never for proper arches; the full cycle contains everything
    return std::find(letters.begin(), letters.end(), a.min_letter()) != letters.end();
}

}  // namespace detail

/// Monotonicity of alpha, alpha+delta, ..., alpha+cap*delta. The expected
/// direction is increasing exactly when the minimal letter lies on the arch.
inline OrderReport chain_check(const AffineRoot& alpha, int cap, const SLTable& t) {
    if (!alpha.is_real()) throw InvalidArgument("chain_check needs a real root");
    const int n = t.rank();
    const AffineRoot top = AffineRoot::real(alpha.k + cap, alpha.i, alpha.j);
    detail::require_height(t, height(top, n), "chain_check");
    OrderReport rep;
    rep.property = "chain";
    rep.params = detail::base_params(t);
    rep.params["root"] = root_label(alpha);
    rep.params["delta_cap"] = std::to_string(cap);

    Witness w;
    for (int s = 0; s <= cap; ++s) {
        const AffineRoot r = AffineRoot::real(alpha.k + s, alpha.i, alpha.j);
        w.roots.push_back(ExtendedRoot::real(r));
        w.words.push_back(t.word(r));
    }
    bool up = true, down = true;
    for (std::size_t p = 1; p < w.words.size(); ++p) {
        const Ordering o = compare(w.words[p - 1], w.words[p], t.alphabet());
        up = up && o == Ordering::Less;
        down = down && o == Ordering::Greater;
    }
    rep.checked = w.words.size() > 1 ? w.words.size() - 1 : 0;
    const bool expect_up = detail::arch_contains_min(alpha, t.alphabet());
    w.relation = detail::chain_relation(w.words, t.alphabet());
    if (up && (expect_up || cap == 0)) {
        rep.verdict = "increasing";
    } else if (down && !expect_up) {
        rep.verdict = "decreasing";
    } else {
        rep.status = OrderReport::Status::Violated;
        rep.verdict = up ? "increasing, expected decreasing"
                      : down ? "decreasing, expected increasing"
                             : "not monotone";
    }
    rep.witnesses.push_back(std::move(w));
    return rep;
}

/// chain_check for every real root with k = 0, i.e. every chain in the table.
inline OrderReport chains_check(int cap, const SLTable& t) {
    OrderReport rep;
    rep.property = "chains";
    rep.params = detail::base_params(t);
    rep.params["delta_cap"] = std::to_string(cap);
    std::size_t up = 0, down = 0;
    for (const auto& e : t.entries()) {
        if (!e.root.is_real() || e.root.k != 0) continue;
        OrderReport one = chain_check(e.root, cap, t);
        rep.checked += one.checked;
        if (!one.holds()) {
            rep.status = OrderReport::Status::Violated;
            rep.witnesses.push_back(std::move(one.witnesses.front()));
        } else if (one.verdict == "increasing") {
            ++up;
        } else {
            ++down;
        }
    }
    rep.verdict = rep.holds() ? std::to_string(up) + " increasing, " + std::to_string(down) + " decreasing"
                              : std::to_string(rep.witnesses.size()) + " chains violate the arch rule";
    return rep;
}

/// SL(delta, r) > SL(2 delta, r) > ... > SL(cap delta, r) for every r.
inline OrderReport imaginary_chains_check(int cap, const SLTable& t) {
    const int n = t.rank();
    detail::require_height(t, cap * (n + 1), "imaginary_chains_check");
    OrderReport rep;
    rep.property = "imaginary-chains";
    rep.params = detail::base_params(t);
    rep.params["delta_cap"] = std::to_string(cap);
    for (int r = 1; r <= n; ++r) {
        Witness w;
        bool down = true;
        for (int k = 1; k <= cap; ++k) {
            const ExtendedRoot x = ExtendedRoot::imaginary(k, r);
            w.roots.push_back(x);
            w.words.push_back(t.word(x));
            if (k > 1) {
                ++rep.checked;
                down = down && compare(w.words[k - 2], w.words[k - 1], t.alphabet()) == Ordering::Greater;
            }
        }
        if (!down) {
            w.relation = detail::chain_relation(w.words, t.alphabet());
            rep.status = OrderReport::Status::Violated;
            rep.witnesses.push_back(std::move(w));
        }
    }
    rep.verdict = rep.holds() ? "all strictly decreasing" : "non-decreasing imaginary chains found";
    return rep;
}

namespace detail {

/// alpha < alpha+beta < beta or beta < alpha+beta < alpha, over unordered
/// pairs of real roots with k <= cap whose sum is a real root with k <= cap.
inline void convexity_scan(const SLTable& t, int cap, OrderReport& rep, OrderReport::Status on_violation) {
    const int n = t.rank();
    const auto& a = t.alphabet();
    std::vector<AffineRoot> reals;
    for (const auto& e : t.entries())
        if (e.root.is_real() && e.root.k <= cap) reals.push_back(e.root);
    for (std::size_t x = 0; x < reals.size(); ++x) {
        const auto cx = coefficients(reals[x], n);
        for (std::size_t y = x + 1; y < reals.size(); ++y) {
            auto c = coefficients(reals[y], n);
            for (int l = 0; l <= n; ++l) c[l] += cx[l];
            const auto sum = root_from_coefficients(c);
            if (!sum || !sum->is_real() || sum->k > cap) continue;
            ++rep.checked;
            const Word& u = t.word(reals[x]);
            const Word& v = t.word(reals[y]);
            const Word& s = t.word(*sum);
            const Ordering us = compare(u, s, a), sv = compare(s, v, a);
            const bool ok = (us == Ordering::Less && sv == Ordering::Less) ||
                            (us == Ordering::Greater && sv == Ordering::Greater);
            if (ok) continue;
            rep.status = on_violation;
            Witness w;
            w.roots = {ExtendedRoot::real(reals[x]), ExtendedRoot::real(*sum), ExtendedRoot::real(reals[y])};
            w.words = {u, s, v};
            w.relation = chain_relation(w.words, a);
            rep.witnesses.push_back(std::move(w));
        }
    }
}

}  // namespace detail

/// Real triples (alpha, beta, alpha+beta) with every delta-count <= cap.
/// Violations are findings: the property is conjectural.
inline OrderReport preconvexity_check(int cap, const SLTable& t) {
    const int n = t.rank();
    detail::require_height(t, (cap + 1) * (n + 1), "preconvexity_check");
    OrderReport rep;
    rep.property = "preconvexity";
    rep.params = detail::base_params(t);
    rep.params["delta_cap"] = std::to_string(cap);
    detail::convexity_scan(t, cap, rep, OrderReport::Status::Finding);
    rep.verdict = rep.holds() ? "no violations" : std::to_string(rep.witnesses.size()) + " violating triples";
    return rep;
}

/// Convexity on the k = 0 band.
inline OrderReport finite_convexity_check(const SLTable& t) {
    const int n = t.rank();
    detail::require_height(t, n, "finite_convexity_check");
    OrderReport rep;
    rep.property = "finite-convexity";
    rep.params = detail::base_params(t);
    detail::convexity_scan(t, 0, rep, OrderReport::Status::Violated);
    rep.verdict = rep.holds() ? "no violations" : std::to_string(rep.witnesses.size()) + " violating triples";
    return rep;
}

/// For nested arches [a -> b+1) strictly inside [a' -> b'+1) whose outer
/// minimum lies in the inner arch: SL(alpha_{a->b}) < SL(alpha_{a'->b'}).
inline OrderReport arch_lemma_check(const SLTable& t) {
    const int n = t.rank();
    detail::require_height(t, n, "arch_lemma_check");
    const auto& a = t.alphabet();
    OrderReport rep;
    rep.property = "arch-lemma";
    rep.params = detail::base_params(t);
    std::vector<AffineRoot> arches;
    for (const auto& e : t.entries())
        if (e.root.is_real() && e.root.k == 0) arches.push_back(e.root);
    auto letters = [&](const AffineRoot& r) { return arch_letters(r.i, residue(r.j + 1, n), n); };
    for (const auto& outer : arches) {
        const auto lo = letters(outer);
        Letter outer_min = lo.front();
        for (Letter x : lo)
            if (a.less(x, outer_min)) outer_min = x;
        for (const auto& inner : arches) {
            const auto li = letters(inner);
            if (li.size() >= lo.size()) continue;
            // Inner arch must be a contiguous piece of the outer arch.
            const auto start = std::find(lo.begin(), lo.end(), inner.i);
            if (start == lo.end() || lo.end() - start < static_cast<std::ptrdiff_t>(li.size())) continue;
            if (!std::equal(li.begin(), li.end(), start)) continue;
            if (std::find(li.begin(), li.end(), outer_min) == li.end()) continue;
            ++rep.checked;
            const Word& u = t.word(inner);
            const Word& v = t.word(outer);
            if (compare(u, v, a) == Ordering::Less) continue;
            rep.status = OrderReport::Status::Violated;
            Witness w;
            w.roots = {ExtendedRoot::real(inner), ExtendedRoot::real(outer)};
            w.words = {u, v};
            w.relation = detail::chain_relation(w.words, a);
            rep.witnesses.push_back(std::move(w));
        }
    }
    rep.verdict = rep.holds() ? "no violations" : std::to_string(rep.witnesses.size()) + " violating pairs";
    return rep;
}

/// The rank-four standard-order quadruple (k2 delta, 4) < beta2 < beta1 < (delta, 1)
/// with beta1 = k delta + alpha_4, beta2 = m delta + alpha_{0->3}, k2 = k + m,
/// so that beta1 + beta2 = (1 + k2) delta although neither imaginary root lies between them.
inline OrderReport counterexample_report(int k = 1, int m = 1) {
    if (k < 1 || m < 1) throw InvalidArgument("counterexample needs k, m >= 1");
    const int n = 4;
    const auto a = OrderedAlphabet::standard(n);
    const int k2 = k + m;
    const ExtendedRoot low = ExtendedRoot::imaginary(k2, 4);
    const ExtendedRoot beta2 = ExtendedRoot::real(AffineRoot::real(m, 0, 3));
    const ExtendedRoot beta1 = ExtendedRoot::real(AffineRoot::real(k, 4, 4));
    const ExtendedRoot high = ExtendedRoot::imaginary(1, 1);
    const int needed = std::max({height(low.root, n), height(beta2.root, n), height(beta1.root, n)});
    const SLTable t = compute_table(a, needed);

    const Word w10423{1, 0, 4, 2, 3};
    const Word w10234{1, 0, 2, 3, 4};
    const std::vector<Word> expected = {
        Word{1, 2, 3, 4} + w10234.repeated(k2 - 1) + Word{0},
        Word{1, 0, 2, 3} + w10423.repeated(m),
        w10423.repeated(k) + Word{4},
        Word{1, 0, 4, 3, 2},
    };

    OrderReport rep;
    rep.property = "counterexample";
    rep.params = detail::base_params(t);
    rep.params["k"] = std::to_string(k);
    rep.params["m"] = std::to_string(m);
    Witness w;
    w.roots = {low, beta2, beta1, high};
    for (const auto& x : w.roots) w.words.push_back(t.word(x));
    w.relation = detail::chain_relation(w.words, a);
    rep.checked = 4;

    auto sum = coefficients(beta1.root, n);
    const auto c2 = coefficients(beta2.root, n);
    for (int l = 0; l <= n; ++l) sum[l] += c2[l];
    const bool degrees = root_from_coefficients(sum) == AffineRoot::imaginary(1 + k2);
    bool chain = true;
    for (std::size_t p = 1; p < w.words.size(); ++p)
        chain = chain && compare(w.words[p - 1], w.words[p], a) == Ordering::Less;
    const bool words = w.words == expected;
    rep.params["beta1+beta2"] = root_label(AffineRoot::imaginary(1 + k2));
    if (words && chain && degrees) {
        rep.verdict = "reproduced";
    } else {
        rep.status = OrderReport::Status::Violated;
        rep.verdict = !words ? "words differ from the expected forms" : !chain ? "chain order fails" : "degree sum fails";
    }
    rep.witnesses.push_back(std::move(w));
    return rep;
}

}  // namespace asl
