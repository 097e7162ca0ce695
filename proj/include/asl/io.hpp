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
// Table and report exporters: JSON (sorted keys), CSV, flat TeX and plain
// text, plus an atomic file writer.

#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "asl/closed_forms.hpp"
#include "asl/engine.hpp"
#include "asl/loop_algebra.hpp"
#include "asl/orders.hpp"

namespace asl {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Format { Json, Csv, Tex, Plain };

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "tex") return Format::Tex;
    if (s == "plain") return Format::Plain;
    throw InvalidArgument("unknown format '" + s + "' (json, csv, tex, plain)");
}

namespace io {

using nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
inline json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

inline json word_to_json(const Word& w) { return json(w.letters()); }

inline json root_to_json(const ExtendedRoot& x) {
    if (x.root.is_imaginary()) return {{"type", "imaginary"}, {"k", x.root.k}, {"r", x.r}};
    return {{"type", "real"}, {"k", x.root.k}, {"i", x.root.i}, {"j", x.root.j}};
}

inline json bracketing_to_json(const LoopElement& e, int rank) {
    const BracketingSummary s = summarize(e, rank);
    json out = {{"kind", s.kind}, {"t_power", s.t_power}, {"leading_coefficient", big_to_json(s.leading_coefficient)}};
    if (s.kind == "matrix_unit") {
        out["row"] = s.row;
        out["col"] = s.col;
    } else if (s.kind == "diagonal") {
        json d = json::array();
        for (const auto& c : s.diagonal) d.push_back(big_to_json(c));
        out["diagonal"] = std::move(d);
    }
    return out;
}

inline json meta(const OrderedAlphabet& a, int max_height) {
    return {{"rank", a.rank()}, {"order", a.order()}, {"max_height", max_height}, {"tool_version", kToolVersion}};
}

/// "δ[1]" for (δ,1), "2δ[2]" for (2δ,2), root_label otherwise.
inline std::string plain_label(const ExtendedRoot& x) {
    if (x.root.is_real()) return root_label(x.root);
    return root_label(x.root) + "[" + std::to_string(x.r) + "]";
}

inline std::string tex_label(const ExtendedRoot& x) {
    std::string d;
    if (x.root.k == 1) d = "\\delta";
    else if (x.root.k > 1) d = std::to_string(x.root.k) + "\\delta";
    if (x.root.is_imaginary()) return "\\mathrm{SL}_{" + std::to_string(x.r) + "}(" + d + ")";
    std::string arch = "\\alpha_{" + std::to_string(x.root.i) + "\\to " + std::to_string(x.root.j) + "}";
    return "\\mathrm{SL}(" + (d.empty() ? arch : d + "+" + arch) + ")";
}

struct Row {
    ExtendedRoot root;
    int height;
    const Word* word;
    const LoopElement* bracketing;
};

inline std::vector<Row> rows(const SLTable& t) {
    std::vector<Row> out;
    for (const auto& e : t.entries()) {
        for (std::size_t w = 0; w < e.words.size(); ++w) {
            const ExtendedRoot x = e.root.is_real() ? ExtendedRoot::real(e.root)
                                                    : ExtendedRoot::imaginary(e.root.k, static_cast<int>(w) + 1);
            out.push_back({x, e.height, &e.words[w], &e.bracketings[w]});
        }
    }
    return out;
}

inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace io

inline nlohmann::json table_to_json(const SLTable& t) {
    using io::json;
    json roots = json::array();
    for (const auto& r : io::rows(t)) {
        roots.push_back({{"root", io::root_to_json(r.root)},
                         {"height", r.height},
                         {"word", io::word_to_json(*r.word)},
                         {"compact", to_compact(*r.word, t.rank())},
                         {"bracketing", io::bracketing_to_json(*r.bracketing, t.rank())}});
    }
    return {{"meta", io::meta(t.alphabet(), t.max_height())}, {"roots", std::move(roots)}};
}

/// Canonical text: sorted keys, two-space indent, trailing newline.
inline std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline std::string render_table(const SLTable& t, Format f) {
    std::ostringstream out;
    switch (f) {
        case Format::Json:
            return dump_json(table_to_json(t));
        case Format::Csv:
            out << "k,type,i,j,r,height,word_compact,t_power,leading_coefficient\n";
            for (const auto& r : io::rows(t)) {
                const BracketingSummary s = summarize(*r.bracketing, t.rank());
                out << r.root.root.k << ',' << (r.root.root.is_real() ? "real" : "imaginary") << ',';
                if (r.root.root.is_real()) out << r.root.root.i << ',' << r.root.root.j << ",,";
                else out << ",," << r.root.r << ',';
                out << r.height << ',' << to_compact(*r.word, t.rank()) << ',' << s.t_power << ','
                    << s.leading_coefficient.str() << '\n';
            }
            return out.str();
        case Format::Tex:
            out << "% order " << t.alphabet().to_string() << ", height <= " << t.max_height() << "\n";
            for (const auto& r : io::rows(t))
                out << io::tex_label(r.root) << " = " << to_compact(*r.word, t.rank()) << " \\\\\n";
            return out.str();
        default:
            for (const auto& r : io::rows(t)) out << io::plain_label(r.root) << ": " << to_compact(*r.word, t.rank()) << '\n';
            return out.str();
    }
}

// ---------------------------------------------------------------------------
// Reports. Every report renders to JSON as {meta?, property, params, verdict,
// witnesses[]}; the other formats flatten the same content.

inline nlohmann::json witness_to_json(const Witness& w, int rank) {
    using io::json;
    json roots = json::array(), words = json::array(), compact = json::array();
    for (const auto& x : w.roots) roots.push_back(io::root_to_json(x));
    for (const auto& v : w.words) {
        words.push_back(io::word_to_json(v));
        compact.push_back(to_compact(v, rank));
    }
    return {{"roots", roots}, {"words", words}, {"compact", compact}, {"relation", w.relation}};
}

inline nlohmann::json report_to_json(const OrderReport& r, int rank) {
    using io::json;
    json witnesses = json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(witness_to_json(w, rank));
    return {{"property", r.property},
            {"params", r.params},
            {"status", to_string(r.status)},
            {"verdict", r.verdict},
            {"checked", r.checked},
            {"witnesses", std::move(witnesses)}};
}

inline nlohmann::json report_to_json(const ClosedFormReport& r) {
    using io::json;
    const int n = r.alphabet.rank();
    json witnesses = json::array();
    for (const auto& m : r.mismatches) {
        Witness w{{m.root}, {m.formula, m.engine}, "formula vs engine"};
        witnesses.push_back(witness_to_json(w, n));
    }
    for (const auto& f : r.findings) witnesses.push_back({{"relation", f}});
    return {{"property", "closed-forms:" + to_string(r.theorem)},
            {"params", {{"rank", std::to_string(n)}, {"order", r.alphabet.to_string()},
                        {"max_height", std::to_string(r.max_height)}}},
            {"status", r.mismatches.empty() ? (r.findings.empty() ? "holds" : "finding") : "violated"},
            {"verdict", std::to_string(r.mismatches.size()) + " mismatches, " + std::to_string(r.findings.size()) +
                            " findings"},
            {"checked", r.roots_checked},
            {"witnesses", std::move(witnesses)}};
}

inline nlohmann::json report_to_json(const OracleReport& r) {
    using io::json;
    const int n = r.alphabet.rank();
    json witnesses = json::array();
    for (const auto& m : r.mismatches) {
        Witness w{{ExtendedRoot::real(m.root)}, {}, "engine words then oracle words"};
        if (m.root.is_imaginary()) w.roots = {ExtendedRoot::imaginary(m.root.k, 1)};
        w.words = m.engine;
        w.words.insert(w.words.end(), m.oracle.begin(), m.oracle.end());
        witnesses.push_back(witness_to_json(w, n));
    }
    return {{"property", "oracle"},
            {"params", {{"rank", std::to_string(n)}, {"order", r.alphabet.to_string()},
                        {"max_height", std::to_string(r.max_height)}}},
            {"status", r.ok() ? "holds" : "violated"},
            {"verdict", std::to_string(r.mismatches.size()) + " mismatches"},
            {"checked", r.degrees_checked},
            {"witnesses", std::move(witnesses)}};
}

/// Flattens report JSON (a single report or an array of them) into the other formats.
inline std::string render_report(const nlohmann::json& reports, Format f) {
    using io::json;
    if (f == Format::Json) return dump_json(reports);
    const json list = reports.is_array() ? reports : json::array({reports});
    std::ostringstream out;
    if (f == Format::Csv) out << "property,order,status,verdict,checked,witness,relation,words\n";
    for (const auto& r : list) {
        const std::string order = r["params"].value("order", "");
        if (f == Format::Csv) {
            auto head = io::csv_cell(r["property"].get<std::string>()) + ',' + io::csv_cell(order) + ',' +
                        r["status"].get<std::string>() + ',' + io::csv_cell(r["verdict"].get<std::string>()) + ',' +
                        std::to_string(r["checked"].get<std::size_t>());
            if (r["witnesses"].empty()) out << head << ",,,\n";
            std::size_t idx = 0;
            for (const auto& w : r["witnesses"]) {
                std::string words;
                for (const auto& c : w.value("compact", json::array())) words += (words.empty() ? "" : " ") + c.get<std::string>();
                out << head << ',' << idx++ << ',' << io::csv_cell(w.value("relation", "")) << ',' << io::csv_cell(words)
                    << '\n';
            }
            continue;
        }
        const bool tex = f == Format::Tex;
        out << (tex ? "% " : "") << r["property"].get<std::string>() << " [" << order << "]: "
            << r["status"].get<std::string>() << " (" << r["verdict"].get<std::string>() << "; "
            << r["checked"].get<std::size_t>() << " checked)\n";
        for (const auto& w : r["witnesses"]) {
            std::string words;
            for (const auto& c : w.value("compact", json::array())) words += (words.empty() ? "" : ", ") + c.get<std::string>();
            out << (tex ? "% " : "") << "  " << words << (words.empty() ? "" : "  ") << w.value("relation", "") << '\n';
        }
    }
    return out.str();
}

/// Writes `content` to `path` through a temporary file and a rename, so
/// readers never see a partial file. An empty path means standard output.
inline void write_atomically(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::fwrite(content.data(), 1, content.size(), stdout);
        std::fflush(stdout);
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << content;
        f.flush();
        if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    fs::rename(tmp, target);
}

}  // namespace asl
