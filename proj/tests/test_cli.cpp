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
// Runs the asl binary as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
    int status;
    std::string out;
};

CliResult run(const std::string& args) {
    const std::string cmd = std::string(ASL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, got);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

bool contains_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line) return true;
    return false;
}

}  // namespace

TEST(Cli, EnumerateJson) {
    const CliResult r = run("enumerate --rank 1 --order 1,0 --max-height 4 --format json");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto& rec : j["roots"])
        if (rec["root"] == nlohmann::json{{"type", "imaginary"}, {"k", 2}, {"r", 1}})
            found = rec["word"] == nlohmann::json{1, 1, 0, 0};
    EXPECT_TRUE(found);
    EXPECT_EQ(j.dump(2) + "\n", r.out);
}

TEST(Cli, EnumeratePlainAndCsv) {
    const CliResult plain = run("enumerate --rank 2 --order 1,2,0 --max-height 3 --format plain");
    ASSERT_EQ(plain.status, 0);
    EXPECT_TRUE(contains_line(plain.out, "δ[1]: 102"));
    EXPECT_TRUE(contains_line(plain.out, "δ[2]: 120"));
    const CliResult csv = run("enumerate --rank 4 --order 1,2,3,4,0 --max-height 5 --format csv");
    ASSERT_EQ(csv.status, 0);
    EXPECT_NE(csv.out.find("\n1,imaginary,,,1,5,10432,"), std::string::npos);
}

TEST(Cli, VerifyTargets) {
    EXPECT_EQ(run("verify --target a2 --rank 2 --order 1,2,0 --max-height 30").status, 0);
    EXPECT_EQ(run("verify --target oracle --rank 2 --order 1,2,0 --max-height 9").status, 0);
    EXPECT_EQ(run("verify --target standard --rank 3 --order 1,2,3,0 --max-height 16").status, 0);
    EXPECT_EQ(run("verify --target general --rank 4 --sample-orders 3 --seed 5 --max-height 10").status, 0);
    const CliResult json = run("verify --target a1 --rank 1 --order 1,0 --max-height 12 --format json");
    ASSERT_EQ(json.status, 0);
    EXPECT_EQ(nlohmann::json::parse(json.out)["status"], "holds");
}

TEST(Cli, CheckProperties) {
    EXPECT_EQ(run("check --property chains --rank 2 --order 1,2,0 --delta-cap 6").status, 0);
    EXPECT_EQ(run("check --property preconvexity --rank 4 --order 1,2,3,4,0 --delta-cap 2").status, 0);
    EXPECT_EQ(run("check --property finite-convexity --rank 5 --order 1,2,3,4,5,0").status, 0);
    EXPECT_EQ(run("check --property imaginary-chains --rank 3 --delta-cap 4").status, 0);
    EXPECT_EQ(run("check --property arch-lemma --rank 5 --sample-orders 4").status, 0);
}

TEST(Cli, Counterexample) {
    const CliResult r = run("counterexample");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("1234102340, 102310423, 104234, 10432"), std::string::npos);
    EXPECT_NE(r.out.find("w0 < w1"), std::string::npos);
    const CliResult k2 = run("counterexample --k 2 --m 1 --format json");
    ASSERT_EQ(k2.status, 0);
    EXPECT_EQ(nlohmann::json::parse(k2.out)["witnesses"][0]["compact"][2], "10423104234");
}

TEST(Cli, InvalidConfigurationExitsTwo) {
    EXPECT_EQ(run("enumerate --rank 2 --order 1,2 --max-height 3").status, 2);
    EXPECT_EQ(run("enumerate --rank 2 --order 1,1,0 --max-height 3").status, 2);
    EXPECT_EQ(run("enumerate --rank 2 --max-height 3 --delta-cap 1").status, 2);
    EXPECT_EQ(run("enumerate --rank 2").status, 2);
    EXPECT_EQ(run("enumerate --max-height 3").status, 2);
    EXPECT_EQ(run("enumerate --rank 2 --max-height 3 --format yaml").status, 2);
    EXPECT_EQ(run("verify --target a1 --rank 2 --max-height 5").status, 2);
    EXPECT_EQ(run("verify --target oracle --rank 2 --max-height 12 --guard 10").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("counterexample --k 0").status, 2);
}

TEST(Cli, OutputFileIsWrittenOnce) {
    const auto dir = std::filesystem::temp_directory_path() / "asl_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "table.json").string();
    const CliResult r = run("enumerate --rank 2 --max-height 6 --format json --output " + path);
    ASSERT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(nlohmann::json::parse(text.str())["meta"]["max_height"], 6);
    EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
    // A failing run leaves no file behind.
    const auto bad = (dir / "bad.json").string();
    EXPECT_EQ(run("enumerate --rank 2 --order 0,0,1 --max-height 3 --output " + bad).status, 2);
    EXPECT_FALSE(std::filesystem::exists(bad));
    std::filesystem::remove_all(dir);
}

TEST(Cli, Version) {
    const CliResult r = run("--version");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("0.1.0"), std::string::npos);
}
