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
// Closed formulas for affine standard Lyndon words of type A^(1)_n and a
// verifier that compares them with compute_table.
//
// Internally every formula works in canonical coordinates (minimal letter 1,
// second-minimal letter i != 0) and on letter values, where letter 0 counts
// as n+1 so that 1 < 2 < ... < n < 0 numerically. Results are transported
// back to the caller's alphabet through the dihedral relabelling.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "asl/engine.hpp"
#include "asl/root_system.hpp"
#include "asl/words.hpp"

namespace asl {

/// Raised by the general formula when SL(2 delta + alpha) does not have the
/// shape l1 l_c(delta) l2 it presumes. Verifiers report it as a finding.
class ClosedFormFinding : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// +1, -1 or 0 as a > b, a < b, a == b (plain integer comparison).
constexpr int sgn(int a, int b) { return (a > b) - (a < b); }

namespace detail {

/// Letter <-> value conversion with 0 standing for n+1.
struct Values {
    int n;
    int value(Letter x) const { return x == 0 ? n + 1 : x; }
    Letter letter(int v) const { return v == n + 1 ? 0 : v; }

    /// Letters with values from..to in increasing order; empty when from > to.
    Word asc(int from, int to) const {
        Word w;
        for (int v = from; v <= to; ++v) w += letter(v);
        return w;
    }
    /// Letters with values from..to in decreasing order (from >= to); empty when from < to.
    Word desc(int from, int to) const {
        Word w;
        for (int v = from; v >= to; --v) w += letter(v);
        return w;
    }
};

inline Word single(Letter x) { return Word{x}; }

/// Transports a formula stated for canonical coordinates to an arbitrary alphabet.
struct Transport {
    CanonicalOrder canon;

    explicit Transport(const OrderedAlphabet& a) : canon(canonicalize_order(a)) {}

    ExtendedRoot to_canonical(const ExtendedRoot& x) const {
        if (x.root.is_imaginary()) return x;
        return ExtendedRoot::real(canon.map.apply(x.root));
    }
    AffineRoot to_original(const AffineRoot& r) const { return canon.map.inverse().apply(r); }
    Word to_original(const Word& w) const {
        const DihedralMap back = canon.map.inverse();
        Word out;
        for (Letter x : w) out += back.apply(x);
        return out;
    }
    Word to_canonical(const Word& w) const {
        Word out;
        for (Letter x : w) out += canon.map.apply(x);
        return out;
    }
};

inline void check_extended(const ExtendedRoot& x, int rank) {
    if (x.root.is_real()) {
        if (x.root.k < 0 || x.root.i < 0 || x.root.i > rank || x.root.j < 0 || x.root.j > rank ||
            !is_proper_arch(x.root.i, x.root.j, rank))
            throw InvalidArgument("not a positive real root: " + root_label(x.root));
        return;
    }
    if (x.root.k < 1) throw InvalidArgument("imaginary root needs k >= 1");
    if (x.r < 1 || x.r > rank) throw InvalidArgument("imaginary index out of range");
}

}  // namespace detail

/// Standard Lyndon words of the finite (k = 0) real roots, by the finite
/// Leclerc recursion over sub-arches. In type A every sum of two roots that
/// is a root has a nonzero bracket, so no algebra is consulted.
class FiniteSL {
public:
    explicit FiniteSL(OrderedAlphabet a) : a_(std::move(a)) {}

    const OrderedAlphabet& alphabet() const { return a_; }

    /// SL(alpha_{i -> j}) for a proper arch.
    const Word& operator()(Letter i, Letter j) const {
        const int n = a_.rank();
        if (!is_proper_arch(i, j, n)) throw InvalidArgument("finite SL: arch covers the whole cycle");
        return of(i, arch_length(i, j, n));
    }

private:
    const Word& of(Letter start, int length) const {
        const auto key = std::pair(start, length);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int n = a_.rank();
        Word best;
        if (length == 1) {
            best = detail::single(start);
        } else {
            for (int s = 1; s < length; ++s) {
                const Word& u = of(start, s);
                const Word& v = of(residue(start + s, n), length - s);
                Word cand = lex_less(u, v, a_) ? u + v : v + u;
                if (best.empty() || lex_less(best, cand, a_)) best = std::move(cand);
            }
        }
        return memo_.emplace(key, std::move(best)).first->second;
    }

    OrderedAlphabet a_;
    mutable std::map<std::pair<Letter, int>, Word> memo_;
};

/// l_c(delta) = SL(alpha_{c+1 -> c-1}) c.
inline Word ell_c_delta(Letter c, const OrderedAlphabet& a) {
    const int n = a.rank();
    if (c < 0 || c > n) throw InvalidArgument("ell_c_delta: letter out of range");
    if (c == a.min_letter()) throw InvalidArgument("ell_c_delta: c is the minimal letter");
    FiniteSL sl(a);
    return sl(residue(c + 1, n), residue(c - 1, n)) + detail::single(c);
}

/// The degree-delta words l_c(delta), c != min letter, and the peak letter i.
struct DeltaWordFamily {
    Letter peak = 0;
    std::map<Letter, Word> words;
};

inline DeltaWordFamily delta_word_family(const OrderedAlphabet& a) {
    DeltaWordFamily f;
    f.peak = a.second_min();
    FiniteSL sl(a);
    const int n = a.rank();
    for (Letter c = 0; c <= n; ++c) {
        if (c == a.min_letter()) continue;
        f.words[c] = sl(residue(c + 1, n), residue(c - 1, n)) + detail::single(c);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Rank one: order 1 < 0.

namespace detail {

inline Word a1_canonical(const ExtendedRoot& x) {
    const Word p{1, 0};
    const AffineRoot& r = x.root;
    if (r.is_imaginary()) return Word{1} + p.repeated(r.k - 1) + Word{0};
    if (r.i == 1) return Word{1} + p.repeated(r.k);
    return p.repeated(r.k) + Word{0};
}

inline Word a2_canonical(const ExtendedRoot& x) {
    const Word p{1, 0, 2};
    const AffineRoot& r = x.root;
    const int k = r.k;
    if (r.is_imaginary()) {
        if (x.r == 1) return Word{1, 0} + p.repeated(k - 1) + Word{2};
        return Word{1, 2} + p.repeated(k - 1) + Word{0};
    }
    if (k == 0) {
        static const std::map<std::pair<Letter, Letter>, Word> base = {
            {{1, 1}, Word{1}},    {{2, 2}, Word{2}},    {{0, 0}, Word{0}},
            {{1, 2}, Word{1, 2}}, {{0, 1}, Word{1, 0}}, {{2, 0}, Word{2, 0}},
        };
        return base.at({r.i, r.j});
    }
    if (r.i == 1 && r.j == 1) return Word{1, 2} + p.repeated(k - 1) + Word{1, 0};
    if (r.i == 2 && r.j == 2) return p.repeated(k) + Word{2};
    if (r.i == 0 && r.j == 0) return p.repeated(k) + Word{0};
    if (r.i == 1 && r.j == 2) return Word{1, 2} + p.repeated(k);
    if (r.i == 0 && r.j == 1) return Word{1, 0} + p.repeated(k);
    // alpha_2 + alpha_0
    if (k % 2 == 0) return p.repeated(k / 2) + Word{2} + p.repeated(k / 2) + Word{0};
    return p.repeated((k + 1) / 2) + Word{0} + p.repeated((k - 1) / 2) + Word{2};
}

inline Word standard_canonical(const ExtendedRoot& x, int n) {
    const Values v{n};
    const AffineRoot& r = x.root;
    const int k = r.k;
    if (r.is_imaginary()) {
        const int m = k - 1;
        if (x.r == n) return v.asc(1, n) + (Word{1, 0} + v.asc(2, n)).repeated(m) + Word{0};
        const int q = x.r;
        return Word{1} + v.desc(n + 1, q + 2) + v.asc(2, q) +
               (Word{1} + v.desc(n + 1, q + 1) + v.asc(2, q)).repeated(m) + single(v.letter(q + 1));
    }
    const int va = v.value(r.i), vb = v.value(r.j);
    if (k == 0) {
        if (va <= vb) return v.asc(va, vb);
        return Word{1} + v.desc(n + 1, va) + v.asc(2, vb);
    }
    if (va > vb) {
        const Word head = Word{1} + v.desc(n + 1, va) + v.asc(2, va - 2);
        const Word period = Word{1} + v.desc(n + 1, va - 1) + v.asc(2, va - 2);
        return head + period.repeated(k - 1) + Word{1} + v.desc(n + 1, va - 1) + v.asc(2, vb);
    }
    if (va == 1) return v.asc(1, n) + (Word{1, 0} + v.asc(2, n)).repeated(k - 1) + Word{1, 0} + v.asc(2, vb);
    if (va >= 3) return (Word{1} + v.desc(n + 1, va) + v.asc(2, va - 1)).repeated(k) + v.asc(va, vb);
    const Word p = Word{1} + v.desc(n + 1, 2);
    if (vb == 2) return p.repeated(k) + Word{2};
    if (k % 2 == 0) return p.repeated(k / 2) + Word{2} + p.repeated(k / 2) + v.asc(3, vb);
    return p.repeated((k + 1) / 2) + v.asc(3, vb) + p.repeated((k - 1) / 2) + Word{2};
}

}  // namespace detail

/// Rank one (orders 1<0 and 0<1, the latter by relabelling).
inline Word closed_form_A1(const ExtendedRoot& x, const OrderedAlphabet& a) {
    if (a.rank() != 1) throw InvalidArgument("closed_form_A1 needs rank 1");
    detail::check_extended(x, 1);
    const detail::Transport t(a);
    return t.to_original(detail::a1_canonical(t.to_canonical(x)));
}

/// Rank two; every order of three letters is a relabelling of 1<2<0.
inline Word closed_form_A2(const ExtendedRoot& x, const OrderedAlphabet& a) {
    if (a.rank() != 2) throw InvalidArgument("closed_form_A2 needs rank 2");
    detail::check_extended(x, 2);
    const detail::Transport t(a);
    return t.to_original(detail::a2_canonical(t.to_canonical(x)));
}

/// Orders that relabel to 1<2<...<n<0, n >= 3.
inline Word closed_form_standard(const ExtendedRoot& x, const OrderedAlphabet& a) {
    const int n = a.rank();
    if (n < 3) throw InvalidArgument("closed_form_standard needs rank >= 3");
    const detail::Transport t(a);
    if (!t.canon.alphabet.is_standard()) throw InvalidArgument("closed_form_standard needs the standard order");
    detail::check_extended(x, n);
    return t.to_original(detail::standard_canonical(t.to_canonical(x), n));
}

inline Word closed_form_standard(const ExtendedRoot& x, int n) {
    return closed_form_standard(x, OrderedAlphabet::standard(n));
}

/// Run order of the k = 2 (mod 3) branch for 1 < a < i < b. AsPrinted keeps
/// the order of the other two branches; the oracle rejects it from k = 2 on.
enum class FourBranchReading { Verified, AsPrinted };

/// Formulas for an arbitrary order, n >= 3. Arches through the minimal letter
/// take their constituents l1, l2 and the inserted period from a base table.
class GeneralClosedForm {
public:
    explicit GeneralClosedForm(const SLTable& base, FourBranchReading reading = FourBranchReading::Verified)
        : base_(&base),
          n_(base.rank()),
          transport_(base.alphabet()),
          values_{n_},
          finite_(transport_.canon.alphabet),
          family_(delta_word_family(transport_.canon.alphabet)) {
        if (n_ < 3) throw InvalidArgument("closed_form_general needs rank >= 3");
        if (base.max_height() < 2 * (n_ + 1) + n_)
            throw InvalidArgument("closed_form_general: base table too shallow (need height >= 3n+2)");
        peak_ = values_.value(family_.peak);
        reading_ = reading;
    }

    const OrderedAlphabet& canonical_alphabet() const { return transport_.canon.alphabet; }
    const DeltaWordFamily& family() const { return family_; }

    /// SL(x) in the caller's alphabet.
    Word word(const ExtendedRoot& x) const {
        detail::check_extended(x, n_);
        if (x.root.is_imaginary()) return imaginary_words(x.root.k)[x.r - 1];
        return transport_.to_original(real_canonical(transport_.canon.map.apply(x.root)));
    }

    /// SL_1(k delta) > ... > SL_n(k delta) in the caller's alphabet.
    std::vector<Word> imaginary_words(int k) const {
        if (k < 1) throw InvalidArgument("imaginary root needs k >= 1");
        const auto& a = transport_.canon.alphabet;
        std::vector<Word> out;
        for (const auto& [c, ell] : family_.words) {
            const int vc = values_.value(c);
            const Letter period = values_.letter(vc + sgn(peak_, vc));
            out.push_back(finite_(residue(c + 1, n_), residue(c - 1, n_)) +
                          family_.words.at(period).repeated(k - 1) + detail::single(c));
        }
        std::sort(out.begin(), out.end(), [&](const Word& u, const Word& v) { return lex_less(v, u, a); });
        for (auto& w : out) w = transport_.to_original(w);
        return out;
    }

    /// Constituents (l1, period, l2) for an arch through the minimal letter, canonical coordinates.
    struct WrapParts {
        Word l1, period, l2;
        Letter period_letter = 0;
    };

    WrapParts wrap_parts(const AffineRoot& canonical_arch) const {
        const AffineRoot once = AffineRoot::real(1, canonical_arch.i, canonical_arch.j);
        const AffineRoot twice = AffineRoot::real(2, canonical_arch.i, canonical_arch.j);
        const Word w1 = base_word(once);
        const Word w2 = base_word(twice);
        auto [l1, l2] = costandard_factorization(w1, transport_.canon.alphabet);
        const std::size_t mid = static_cast<std::size_t>(n_ + 1);
        const std::string where = "SL(" + root_label(transport_.to_original(twice)) + ")";
        if (w2.size() != l1.size() + mid + l2.size() || w2.substr(0, l1.size()) != l1 ||
            w2.substr(w2.size() - l2.size()) != l2)
            throw ClosedFormFinding(where + " does not have the form l1 . delta-word . l2");
        const Word middle = w2.substr(l1.size(), mid);
        for (const auto& [c, ell] : family_.words) {
            if (ell == middle) return {std::move(l1), middle, std::move(l2), c};
        }
        throw ClosedFormFinding(where + ": inserted period is not one of the words l_c(delta)");
    }

private:
    Word base_word(const AffineRoot& canonical_root) const {
        return transport_.to_canonical(base_->word(transport_.to_original(canonical_root)));
    }

    Word real_canonical(const AffineRoot& r) const {
        const auto& v = values_;
        const int k = r.k;
        if (k == 0) return finite_(r.i, r.j);
        const int va = v.value(r.i), vb = v.value(r.j);
        const int i = peak_;
        if (va > vb || va == 1) {
            if (k == 1) return base_word(r);
            const WrapParts parts = wrap_parts(r);
            return parts.l1 + parts.period.repeated(k - 1) + parts.l2;
        }
        auto ell = [&](int value) -> const Word& { return family_.words.at(v.letter(value)); };
        if (vb < i) return ell(vb + 1).repeated(k) + v.desc(vb, va);
        if (va > i) return ell(va - 1).repeated(k) + v.asc(va, vb);
        const Word& L = ell(i);
        const Word peak = detail::single(v.letter(i));
        if (va == i && vb == i) return L.repeated(k) + peak;
        if (va == i || vb == i) {
            const Word side = va == i ? v.asc(i + 1, vb) : v.desc(i - 1, va);
            if (k % 2 == 0) return L.repeated(k / 2) + peak + L.repeated(k / 2) + side;
            return L.repeated((k + 1) / 2) + side + L.repeated((k - 1) / 2) + peak;
        }
        // va < i < vb
        const Word below = v.desc(i - 1, va);
        const Word above = v.asc(i + 1, vb);
        const bool below_first = transport_.canon.alphabet.less(v.letter(i + 1), v.letter(i - 1));
        const Word& x = below_first ? below : above;
        const Word& y = below_first ? above : below;
        switch (k % 3) {
            case 0:
                return L.repeated(k / 3) + peak + L.repeated(k / 3) + x + L.repeated(k / 3) + y;
            case 2: {
                // The side runs trade places against the other two branches.
                const bool swap = reading_ == FourBranchReading::Verified;
                const Word& first = swap ? y : x;
                const Word& last = swap ? x : y;
                return L.repeated((k + 1) / 3) + first + L.repeated((k - 2) / 3) + peak + L.repeated((k + 1) / 3) + last;
            }
            default:
                return L.repeated((k + 2) / 3) + x + L.repeated((k - 1) / 3) + peak + L.repeated((k - 1) / 3) + y;
        }
    }

    const SLTable* base_;
    int n_;
    detail::Transport transport_;
    detail::Values values_;
    FiniteSL finite_;
    DeltaWordFamily family_;
    int peak_ = 2;
    FourBranchReading reading_;
};

inline Word closed_form_general(const ExtendedRoot& x, const OrderedAlphabet& a, const SLTable& base) {
    if (!(base.alphabet() == a)) throw InvalidArgument("closed_form_general: base table has a different order");
    return GeneralClosedForm(base).word(x);
}

enum class Theorem { Auto, A1, A2, Standard, General };

inline std::string to_string(Theorem t) {
    switch (t) {
        case Theorem::A1: return "a1";
        case Theorem::A2: return "a2";
        case Theorem::Standard: return "standard";
        case Theorem::General: return "general";
        default: return "auto";
    }
}

/// The theorem that covers an alphabet when none is requested explicitly.
inline Theorem applicable_theorem(const OrderedAlphabet& a) {
    if (a.rank() == 1) return Theorem::A1;
    if (a.rank() == 2) return Theorem::A2;
    return canonicalize_order(a).alphabet.is_standard() ? Theorem::Standard : Theorem::General;
}

struct ClosedFormMismatch {
    ExtendedRoot root;
    Word formula;
    Word engine;
};

struct ClosedFormReport {
    Theorem theorem = Theorem::Auto;
    OrderedAlphabet alphabet;
    int max_height = 0;
    std::size_t roots_checked = 0;
    std::vector<ClosedFormMismatch> mismatches;
    std::vector<std::string> findings;  // shape assumptions of the general formula that failed
    bool ok() const { return mismatches.empty() && findings.empty(); }
};

/// Compares the requested closed formula with compute_table on every
/// extended root of height <= max_height.
inline ClosedFormReport verify_closed_forms(const OrderedAlphabet& a, int max_height, Theorem theorem = Theorem::Auto) {
    if (max_height < 1) throw InvalidArgument("verify_closed_forms: max_height must be >= 1");
    const int n = a.rank();
    if (theorem == Theorem::Auto) theorem = applicable_theorem(a);
    switch (theorem) {
        case Theorem::A1:
            if (n != 1) throw InvalidArgument("the rank-one formulas need rank 1");
            break;
        case Theorem::A2:
            if (n != 2) throw InvalidArgument("the rank-two formulas need rank 2");
            break;
        case Theorem::Standard:
            if (n < 3 || !canonicalize_order(a).alphabet.is_standard())
                throw InvalidArgument("the standard-order formulas need rank >= 3 and the standard order");
            break;
        default:
            if (n < 3) throw InvalidArgument("the general formulas need rank >= 3");
    }
    const int table_height = theorem == Theorem::General ? std::max(max_height, 3 * n + 2) : max_height;
    const SLTable table = compute_table(a, table_height);
    std::optional<GeneralClosedForm> general;
    if (theorem == Theorem::General) general.emplace(table);

    ClosedFormReport report{theorem, a, max_height, 0, {}, {}};
    for (const ExtendedRoot& x : table.extended_roots()) {
        if (height(x.root, n) > max_height) continue;
        ++report.roots_checked;
        Word formula;
        try {
            switch (theorem) {
                case Theorem::A1: formula = closed_form_A1(x, a); break;
                case Theorem::A2: formula = closed_form_A2(x, a); break;
                case Theorem::Standard: formula = closed_form_standard(x, a); break;
                default: formula = general->word(x);
            }
        } catch (const ClosedFormFinding& f) {
            report.findings.emplace_back(f.what());
            continue;
        }
        const Word& engine = table.word(x);
        if (formula != engine) report.mismatches.push_back({x, std::move(formula), engine});
    }
    return report;
}

}  // namespace asl
