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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "asl/io.hpp"
#include "test_support.hpp"

using namespace asl;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

bool has_line(const std::string& text, const std::string& line) {
    const auto ls = lines(text);
    return std::find(ls.begin(), ls.end(), line) != ls.end();
}

}  // namespace

TEST(ParseFormat, KnownAndUnknown) {
    EXPECT_EQ(parse_format("json"), Format::Json);
    EXPECT_EQ(parse_format("plain"), Format::Plain);
    EXPECT_THROW(parse_format("yaml"), InvalidArgument);
}

TEST(TableJson, RankOneRecordForTwoDelta) {
    const SLTable t = compute_table(OrderedAlphabet(1, {1, 0}), 4);
    const auto j = table_to_json(t);
    EXPECT_EQ(j["meta"]["rank"], 1);
    EXPECT_EQ(j["meta"]["order"], (std::vector<int>{1, 0}));
    EXPECT_EQ(j["meta"]["max_height"], 4);
    EXPECT_EQ(j["meta"]["tool_version"], kToolVersion);
    bool found = false;
    for (const auto& r : j["roots"]) {
        if (r["root"] == nlohmann::json{{"type", "imaginary"}, {"k", 2}, {"r", 1}}) {
            found = true;
            EXPECT_EQ(r["word"], (std::vector<int>{1, 1, 0, 0}));
            EXPECT_EQ(r["compact"], "1100");
            EXPECT_EQ(r["height"], 4);
            EXPECT_EQ(r["bracketing"]["kind"], "diagonal");
            EXPECT_EQ(r["bracketing"]["t_power"], 2);
            EXPECT_EQ(r["bracketing"]["diagonal"], (std::vector<int>{-2, 2}));
        }
    }
    EXPECT_TRUE(found);
}

TEST(TableJson, RoundTripIsByteIdentical) {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& a : asl::testing::sampled_orders(n, 2, 2000 + n)) {
            const std::string text = render_table(compute_table(a, 3 * (n + 1)), Format::Json);
            EXPECT_EQ(dump_json(nlohmann::json::parse(text)), text);
        }
    }
}

TEST(TableJson, LargeCoefficientsBecomeStrings) {
    EXPECT_EQ(io::big_to_json(BigInt(-12)), -12);
    BigInt big = 1;
    for (int s = 0; s < 70; ++s) big *= 2;
    EXPECT_EQ(io::big_to_json(big), "1180591620717411303424");
}

TEST(TablePlain, DeltaLines) {
    const std::string text = render_table(compute_table(OrderedAlphabet::standard(2), 3), Format::Plain);
    EXPECT_TRUE(has_line(text, "δ[1]: 102"));
    EXPECT_TRUE(has_line(text, "δ[2]: 120"));
    EXPECT_TRUE(has_line(text, "α[1→2]: 12"));
    EXPECT_EQ(lines(text).size(), 8u);
}

TEST(TableCsv, HeaderAndDeltaRow) {
    const std::string text = render_table(compute_table(OrderedAlphabet::standard(4), 5), Format::Csv);
    const auto ls = lines(text);
    EXPECT_EQ(ls.front(), "k,type,i,j,r,height,word_compact,t_power,leading_coefficient");
    EXPECT_NE(text.find("\n1,imaginary,,,1,5,10432,1,"), std::string::npos);
    EXPECT_TRUE(has_line(text, "0,real,4,4,,1,4,0,1"));
}

TEST(TableTex, FlatWords) {
    const std::string text = render_table(compute_table(OrderedAlphabet(1, {1, 0}), 4), Format::Tex);
    EXPECT_TRUE(has_line(text, "\\mathrm{SL}_{1}(2\\delta) = 1100 \\\\"));
    EXPECT_TRUE(has_line(text, "\\mathrm{SL}(\\delta+\\alpha_{1\\to 1}) = 110 \\\\"));
}

TEST(Reports, OrderReportJsonAndPlain) {
    const auto r = counterexample_report();
    const auto j = report_to_json(r, 4);
    EXPECT_EQ(j["property"], "counterexample");
    EXPECT_EQ(j["status"], "holds");
    EXPECT_EQ(j["witnesses"][0]["compact"],
              (std::vector<std::string>{"1234102340", "102310423", "104234", "10432"}));
    EXPECT_EQ(j["witnesses"][0]["roots"][1], (nlohmann::json{{"type", "real"}, {"k", 1}, {"i", 0}, {"j", 3}}));
    const std::string plain = render_report(j, Format::Plain);
    EXPECT_NE(plain.find("1234102340, 102310423, 104234, 10432"), std::string::npos);
    const std::string csv = render_report(j, Format::Csv);
    EXPECT_EQ(lines(csv).front(), "property,order,status,verdict,checked,witness,relation,words");
    EXPECT_EQ(lines(csv).size(), 2u);
}

TEST(Reports, VerifierReports) {
    const auto c = report_to_json(verify_closed_forms(OrderedAlphabet::standard(2), 9));
    EXPECT_EQ(c["property"], "closed-forms:a2");
    EXPECT_EQ(c["status"], "holds");
    const auto o = report_to_json(verify_oracle(OrderedAlphabet::standard(2), 6));
    EXPECT_EQ(o["property"], "oracle");
    EXPECT_EQ(o["verdict"], "0 mismatches");
}

TEST(WriteAtomically, ReplacesTheTargetWholesale) {
    const auto dir = std::filesystem::temp_directory_path() / "asl_io_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "out.txt").string();
    write_atomically(path, "first\n");
    write_atomically(path, "second\n");
    std::ifstream in(path);
    std::stringstream got;
    got << in.rdbuf();
    EXPECT_EQ(got.str(), "second\n");
    EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove_all(dir);
}
