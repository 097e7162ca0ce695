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
// asl: enumerate affine standard Lyndon words, verify closed formulas, check
// order properties and reproduce the rank-four counterexample.
//
// Exit status: 0 ok, 1 mismatch or internal error, 2 invalid configuration,
// 3 counter-finding for a conjectured property.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asl/closed_forms.hpp"
#include "asl/engine.hpp"
#include "asl/io.hpp"
#include "asl/orders.hpp"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInvalid = 2, kFinding = 3 };

struct RunConfig {
    int rank = 0;
    std::string order;
    std::optional<int> max_height;
    std::optional<int> delta_cap;
    std::string format = "plain";
    std::string output;
    std::uint64_t seed = 20240607;
    int sample_orders = 0;
};

std::vector<asl::Letter> parse_order(const std::string& text) {
    std::vector<asl::Letter> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw asl::InvalidArgument("order must be a comma-separated list of letters, got '" + text + "'");
        out.push_back(std::stoi(item));
    }
    return out;
}

/// The alphabets a command runs over: the given order, the standard order, or seeded samples.
std::vector<asl::OrderedAlphabet> alphabets(const RunConfig& cfg) {
    if (cfg.rank < 1) throw asl::InvalidArgument("--rank must be >= 1");
    if (cfg.sample_orders < 0) throw asl::InvalidArgument("--sample-orders must be >= 0");
    if (cfg.sample_orders > 0) {
        if (!cfg.order.empty()) throw asl::InvalidArgument("--order and --sample-orders are exclusive");
        std::mt19937_64 rng(cfg.seed);
        std::vector<asl::OrderedAlphabet> out;
        std::vector<asl::Letter> perm(cfg.rank + 1);
        for (int s = 0; s < cfg.sample_orders; ++s) {
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            out.emplace_back(cfg.rank, perm);
        }
        return out;
    }
    if (cfg.order.empty()) return {asl::OrderedAlphabet::standard(cfg.rank)};
    return {asl::OrderedAlphabet(cfg.rank, parse_order(cfg.order))};
}

/// Height bound from exactly one of --max-height / --delta-cap (the slice of delta-count <= cap).
int height_bound(const RunConfig& cfg) {
    if (cfg.max_height && cfg.delta_cap) throw asl::InvalidArgument("give only one of --max-height and --delta-cap");
    if (cfg.max_height) {
        if (*cfg.max_height < 1) throw asl::InvalidArgument("--max-height must be >= 1");
        return *cfg.max_height;
    }
    if (cfg.delta_cap) {
        if (*cfg.delta_cap < 0) throw asl::InvalidArgument("--delta-cap must be >= 0");
        return *cfg.delta_cap * (cfg.rank + 1) + cfg.rank;
    }
    throw asl::InvalidArgument("one of --max-height and --delta-cap is required");
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool needs_rank = true) {
    auto* rank = cmd->add_option("--rank,-n", cfg.rank, "rank n of A^(1)_n");
    if (needs_rank) rank->required();
    cmd->add_option("--order", cfg.order, "letters from smallest to largest, e.g. 1,2,0");
    cmd->add_option("--max-height", cfg.max_height, "largest root height");
    cmd->add_option("--delta-cap", cfg.delta_cap, "largest delta-count");
    cmd->add_option("--format", cfg.format, "json, csv, tex or plain")->check(CLI::IsMember({"json", "csv", "tex", "plain"}));
    cmd->add_option("--output,-o", cfg.output, "output file (default: stdout)");
    cmd->add_option("--seed", cfg.seed, "seed for --sample-orders");
    cmd->add_option("--sample-orders", cfg.sample_orders, "run over this many seeded random orders");
}

int cmd_enumerate(const RunConfig& cfg) {
    const auto as = alphabets(cfg);
    if (as.size() != 1) throw asl::InvalidArgument("enumerate takes a single order");
    const asl::SLTable table = asl::compute_table(as.front(), height_bound(cfg));
    asl::write_atomically(cfg.output, asl::render_table(table, asl::parse_format(cfg.format)));
    return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& target, unsigned long long guard) {
    const auto as = alphabets(cfg);
    const int h = height_bound(cfg);
    const asl::Format format = asl::parse_format(cfg.format);
    nlohmann::json reports = nlohmann::json::array();
    bool ok = true;
    for (const auto& a : as) {
        if (target == "oracle") {
            const auto r = asl::verify_oracle(a, h, guard);
            ok = ok && r.ok();
            reports.push_back(asl::report_to_json(r));
            continue;
        }
        asl::Theorem t = asl::Theorem::General;
        if (target == "a1") t = asl::Theorem::A1;
        else if (target == "a2") t = asl::Theorem::A2;
        else if (target == "standard") t = asl::Theorem::Standard;
        const auto r = asl::verify_closed_forms(a, h, t);
        ok = ok && r.ok();
        reports.push_back(asl::report_to_json(r));
    }
    asl::write_atomically(cfg.output, asl::render_report(reports.size() == 1 ? reports[0] : reports, format));
    return ok ? kOk : kMismatch;
}

int cmd_check(const RunConfig& cfg, const std::string& property) {
    const auto as = alphabets(cfg);
    const asl::Format format = asl::parse_format(cfg.format);
    const int n = cfg.rank;
    const bool needs_cap = property == "chains" || property == "imaginary-chains" || property == "preconvexity";
    int cap = 0;
    int h = n;
    if (needs_cap) {
        if (cfg.max_height && cfg.delta_cap) throw asl::InvalidArgument("give only one of --max-height and --delta-cap");
        if (cfg.delta_cap) {
            cap = *cfg.delta_cap;
        } else if (cfg.max_height) {
            // Largest cap whose requirement fits under the height.
            const int slack = property == "preconvexity" ? n + 1 : property == "chains" ? n : 0;
            cap = (*cfg.max_height - slack) / (n + 1);
        } else {
            throw asl::InvalidArgument("one of --max-height and --delta-cap is required");
        }
        if (cap < (property == "imaginary-chains" ? 1 : 0)) throw asl::InvalidArgument("delta cap too small");
        h = property == "preconvexity" ? (cap + 1) * (n + 1) : property == "chains" ? cap * (n + 1) + n : cap * (n + 1);
    } else if (cfg.delta_cap || cfg.max_height) {
        if (cfg.max_height && cfg.delta_cap) throw asl::InvalidArgument("give only one of --max-height and --delta-cap");
        h = std::max(n, height_bound(cfg));
    }

    nlohmann::json reports = nlohmann::json::array();
    bool violated = false, finding = false;
    for (const auto& a : as) {
        const asl::SLTable t = asl::compute_table(a, h);
        asl::OrderReport r;
        if (property == "chains") r = asl::chains_check(cap, t);
        else if (property == "imaginary-chains") r = asl::imaginary_chains_check(cap, t);
        else if (property == "preconvexity") r = asl::preconvexity_check(cap, t);
        else if (property == "finite-convexity") r = asl::finite_convexity_check(t);
        else r = asl::arch_lemma_check(t);
        violated = violated || r.status == asl::OrderReport::Status::Violated;
        finding = finding || r.status == asl::OrderReport::Status::Finding;
        reports.push_back(asl::report_to_json(r, n));
    }
    asl::write_atomically(cfg.output, asl::render_report(reports.size() == 1 ? reports[0] : reports, format));
    if (violated) return kMismatch;
    return finding ? kFinding : kOk;
}

int cmd_counterexample(const RunConfig& cfg, int k, int m) {
    const auto r = asl::counterexample_report(k, m);
    asl::write_atomically(cfg.output, asl::render_report(asl::report_to_json(r, 4), asl::parse_format(cfg.format)));
    return r.holds() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affine standard Lyndon words of type A^(1)_n"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(asl::kToolVersion));

    RunConfig enum_cfg, verify_cfg, check_cfg, cex_cfg;
    auto* enumerate = app.add_subcommand("enumerate", "write the table of standard Lyndon words");
    add_common(enumerate, enum_cfg);

    std::string target;
    unsigned long long guard = asl::kDefaultOracleGuard;
    auto* verify = app.add_subcommand("verify", "compare closed formulas or the oracle with the table");
    add_common(verify, verify_cfg);
    verify->add_option("--target", target, "a1, a2, standard, general or oracle")
        ->required()
        ->check(CLI::IsMember({"a1", "a2", "standard", "general", "oracle"}));
    verify->add_option("--guard", guard, "largest permutation count the oracle may enumerate");

    std::string property;
    auto* check = app.add_subcommand("check", "check a property of the induced order");
    add_common(check, check_cfg);
    check->add_option("--property", property, "chains, preconvexity, finite-convexity, imaginary-chains or arch-lemma")
        ->required()
        ->check(CLI::IsMember({"chains", "preconvexity", "finite-convexity", "imaginary-chains", "arch-lemma"}));

    int k = 1, m = 1;
    auto* cex = app.add_subcommand("counterexample", "reproduce the rank-four quadruple");
    cex->add_option("--k", k, "delta-count of beta1")->check(CLI::PositiveNumber);
    cex->add_option("--m", m, "delta-count of beta2")->check(CLI::PositiveNumber);
    cex->add_option("--format", cex_cfg.format, "json, csv, tex or plain")->check(CLI::IsMember({"json", "csv", "tex", "plain"}));
    cex->add_option("--output,-o", cex_cfg.output, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*enumerate) return cmd_enumerate(enum_cfg);
        if (*verify) return cmd_verify(verify_cfg, target, guard);
        if (*check) return cmd_check(check_cfg, property);
        return cmd_counterexample(cex_cfg, k, m);
    } catch (const asl::InvalidArgument& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kInvalid;
    } catch (const asl::GuardExceeded& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMismatch;
    }
}
