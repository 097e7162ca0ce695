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
// Loop realization of the positive part of affine sl(n+1): elements are
// integer combinations of E_{p,q} t^d. Standard bracketings of Lyndon words
// are evaluated here, and exact linear independence is decided by rank.

#pragma once

#include <concepts>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "asl/exact_rank.hpp"
#include "asl/root_system.hpp"
#include "asl/words.hpp"

namespace asl {

/// Matrix unit E_{row,col} (1-based, rows/cols in 1..n+1) times t^power.
struct LoopTerm {
    int row = 1;
    int col = 1;
    int t_power = 0;
    auto operator<=>(const LoopTerm&) const = default;
};

/// Finitely supported integer combination of loop terms; zero coefficients are
/// never stored, so equality is structural.
class LoopElement {
public:
    LoopElement() = default;

    static LoopElement unit(int row, int col, int t_power, BigInt coeff = 1) {
        LoopElement e;
        e.add(LoopTerm{row, col, t_power}, coeff);
        return e;
    }

    void add(const LoopTerm& term, const BigInt& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(term, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<LoopTerm, BigInt>& terms() const { return terms_; }

    /// Coefficient of E_{row,col} t^power (0 when absent).
    BigInt coefficient(int row, int col, int t_power) const {
        auto it = terms_.find(LoopTerm{row, col, t_power});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    LoopElement operator-() const {
        LoopElement out(*this);
        for (auto& [term, c] : out.terms_) c = -c;
        return out;
    }
    LoopElement& operator+=(const LoopElement& o) {
        for (const auto& [term, c] : o.terms_) add(term, c);
        return *this;
    }
    friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
    friend LoopElement operator-(LoopElement a, const LoopElement& b) { return a += -b; }
    friend LoopElement operator*(const BigInt& s, LoopElement a) {
        if (s == 0) return LoopElement{};
        for (auto& [term, c] : a.terms_) c *= s;
        return a;
    }

    friend bool operator==(const LoopElement&, const LoopElement&) = default;

    /// e.g. "(E11-E22)t^2" style rendering; "0" for the zero element.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [term, c] : terms_) {
            std::string coeff = c.str();
            if (!out.empty() && c > 0) out += "+";
            if (c == 1) coeff.clear();
            else if (c == -1) coeff = "-";
            out += coeff + "E" + std::to_string(term.row) + "," + std::to_string(term.col);
            if (term.t_power) out += "t^" + std::to_string(term.t_power);
        }
        return out;
    }

private:
    std::map<LoopTerm, BigInt> terms_;
};

/// [x t^a, y t^b] = [x, y] t^(a+b). No central coordinate is carried; see
/// `central_term` for the (always vanishing on the positive part) cocycle.
inline LoopElement bracket(const LoopElement& x, const LoopElement& y) {
    LoopElement out;
    for (const auto& [s, a] : x.terms()) {
        for (const auto& [u, b] : y.terms()) {
            const int d = s.t_power + u.t_power;
            if (s.col == u.row) out.add(LoopTerm{s.row, u.col, d}, a * b);
            if (u.col == s.row) out.add(LoopTerm{u.row, s.col, d}, -(a * b));
        }
    }
    return out;
}

/// Coefficient of the central element in [x, y]: sum of a * delta_{a,-b} tr(XY).
inline BigInt central_term(const LoopElement& x, const LoopElement& y) {
    BigInt out = 0;
    for (const auto& [s, a] : x.terms()) {
        for (const auto& [u, b] : y.terms()) {
            if (s.t_power + u.t_power != 0) continue;
            if (s.col == u.row && u.col == s.row) out += s.t_power * a * b;
        }
    }
    return out;
}

/// Chevalley generator: e_i -> E_{i,i+1} for i = 1..n, e_0 -> E_{n+1,1} t.
inline LoopElement generator(Letter i, int rank) {
    if (i < 0 || i > rank) throw InvalidArgument("generator: letter out of range");
    if (i == 0) return LoopElement::unit(rank + 1, 1, 1);
    return LoopElement::unit(i, i + 1, 0);
}

/// Candidate is nonzero and not in the rational span of `basis`.
inline bool grows_span(std::span<const LoopElement> basis, const LoopElement& candidate) {
    if (candidate.is_zero()) return false;
    if (basis.empty()) return true;
    std::map<LoopTerm, std::size_t> column;
    auto index = [&](const LoopElement& e) {
        for (const auto& [term, c] : e.terms()) column.try_emplace(term, 0);
    };
    for (const auto& b : basis) index(b);
    index(candidate);
    std::size_t next = 0;
    for (auto& [term, col] : column) col = next++;
    auto row_of = [&](const LoopElement& e) {
        std::vector<BigInt> row(column.size());
        for (const auto& [term, c] : e.terms()) row[column.at(term)] = c;
        return row;
    };
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(basis.size() + 1);
    for (const auto& b : basis) rows.push_back(row_of(b));
    const std::size_t before = exact_rank(rows);
    rows.push_back(row_of(candidate));
    return exact_rank(std::move(rows)) > before;
}

/// The generators + bracket interface the bracketing and the definition-level
/// oracle are written against. Other algebras plug in here.
template <class B>
concept BracketBackend = requires(const B& backend, Letter x, const typename B::Element& e,
                                  std::span<const typename B::Element> basis) {
    { backend.generator(x) } -> std::convertible_to<typename B::Element>;
    { backend.bracket(e, e) } -> std::convertible_to<typename B::Element>;
    { backend.is_zero(e) } -> std::convertible_to<bool>;
    { backend.grows_span(basis, e) } -> std::convertible_to<bool>;
};

/// Type A^(1)_n backend over the loop realization.
struct LoopBackend {
    using Element = LoopElement;
    int rank = 1;

    Element generator(Letter x) const { return asl::generator(x, rank); }
    Element bracket(const Element& a, const Element& b) const { return asl::bracket(a, b); }
    bool is_zero(const Element& e) const { return e.is_zero(); }
    bool grows_span(std::span<const Element> basis, const Element& e) const { return asl::grows_span(basis, e); }
};

template <class Element>
using BracketingCache = std::unordered_map<Word, Element, WordHash>;

namespace detail {

template <BracketBackend Backend>
typename Backend::Element bracketing_of_lyndon(const Word& w, const OrderedAlphabet& a, const Backend& backend,
                                               BracketingCache<typename Backend::Element>& cache,
                                               const BracketingCache<typename Backend::Element>* known) {
    if (w.size() == 1) return backend.generator(w[0]);
    if (known) {
        if (auto it = known->find(w); it != known->end()) return it->second;
    }
    if (auto it = cache.find(w); it != cache.end()) return it->second;
    // Longest proper Lyndon suffix; both factors are Lyndon.
    std::size_t split = 1;
    while (!is_lyndon(w.view().subspan(split), a)) ++split;
    const Word left = w.substr(0, split);
    const Word right = w.substr(split);
    auto value = backend.bracket(bracketing_of_lyndon(left, a, backend, cache, known),
                                 bracketing_of_lyndon(right, a, backend, cache, known));
    return cache.emplace(w, std::move(value)).first->second;
}

}  // namespace detail

/// b[i] = e_i and b[l] = [b[l1], b[l2]] along the costandard factorization.
/// `cache` memoizes intermediate factors; `known` is an optional read-only
/// table consulted first.
template <BracketBackend Backend>
typename Backend::Element standard_bracketing(const Word& w, const OrderedAlphabet& a, const Backend& backend,
                                              BracketingCache<typename Backend::Element>& cache,
                                              const BracketingCache<typename Backend::Element>* known = nullptr) {
    if (w.empty() || !is_lyndon(w, a)) throw InvalidArgument("standard_bracketing: word is not Lyndon");
    return detail::bracketing_of_lyndon(w, a, backend, cache, known);
}

/// Convenience overload for the loop realization without a shared cache.
inline LoopElement standard_bracketing(const Word& w, const OrderedAlphabet& a) {
    BracketingCache<LoopElement> cache;
    return standard_bracketing(w, a, LoopBackend{a.rank()}, cache);
}

/// Shape of a homogeneous element for reports and exports.
struct BracketingSummary {
    std::string kind;  // "matrix_unit", "diagonal", "zero" or "mixed"
    int row = 0;
    int col = 0;
    int t_power = 0;
    BigInt leading_coefficient = 0;
    std::vector<BigInt> diagonal;  // filled for "diagonal"
};

inline BracketingSummary summarize(const LoopElement& e, int rank) {
    BracketingSummary s;
    if (e.is_zero()) {
        s.kind = "zero";
        return s;
    }
    const auto& [first, c] = *e.terms().begin();
    s.t_power = first.t_power;
    s.leading_coefficient = c;
    bool all_diagonal = true;
    bool one_power = true;
    for (const auto& [term, coeff] : e.terms()) {
        all_diagonal = all_diagonal && term.row == term.col;
        one_power = one_power && term.t_power == first.t_power;
    }
    if (!one_power) {
        s.kind = "mixed";
    } else if (e.terms().size() == 1 && first.row != first.col) {
        s.kind = "matrix_unit";
        s.row = first.row;
        s.col = first.col;
    } else if (all_diagonal) {
        s.kind = "diagonal";
        s.diagonal.assign(rank + 1, 0);
        for (const auto& [term, coeff] : e.terms()) s.diagonal[term.row - 1] = coeff;
    } else {
        s.kind = "mixed";
    }
    return s;
}

}  // namespace asl
