#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pairrank/fuzzy.hpp"
#include "pairrank/metrics.hpp"
#include "pairrank/oracle.hpp"
#include "pairrank/verifiable.hpp"

using nlohmann::json;
using namespace pairrank;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return j;
}

int cmd_check_constraints(const std::string& mode, int n, double alpha,
                          std::optional<double> beta) {
    json out;
    if (mode == "verifiable") {
        const auto report = check_alpha_constraints(n, alpha);
        out = {{"mode", "verifiable"},
               {"n", report.n},
               {"alpha", report.alpha},
               {"assumption3_threshold", report.assumption3_threshold},
               {"assumption4_threshold", report.assumption4_threshold},
               {"assumption3_ok", report.assumption3_ok},
               {"assumption4_ok", report.assumption4_ok},
               {"ok", report.overall_ok},
               {"note", "thresholds assume beta = 1"}};
        if (report.witness) out["witness"] = *report.witness;
    } else if (mode == "fuzzy") {
        if (!beta) throw ConfigError("--beta is required for fuzzy mode");
        const auto report = check_beta_constraint(n, alpha, *beta);
        out = {{"mode", "fuzzy"},
               {"n", report.n},
               {"alpha", report.alpha},
               {"beta", report.beta},
               {"degenerate", report.degenerate},
               {"ok", report.ok}};
        if (report.threshold) out["threshold"] = *report.threshold;
        if (report.witness) out["witness"] = *report.witness;
    } else {
        throw ConfigError("unknown mode: " + mode);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_oracle(int n, int m, double alpha) {
    const auto table = closed_form_vs_brute_force(n, m, alpha);
    std::cout << "sample  kind       rank  brute-force  closed-form  match\n";
    for (const auto& row : table.rows) {
        std::cout << std::left << std::setw(8) << row.sample << std::setw(11)
                  << (row.correct ? "correct" : "incorrect") << std::setw(6)
                  << (row.rank >= 0 ? std::to_string(row.rank) : "-") << std::setw(13)
                  << row.brute_force << std::setw(13) << row.closed_form
                  << (row.brute_force == row.closed_form ? "yes" : "MISMATCH") << '\n';
    }
    std::cout << "mismatches: " << table.mismatches << '\n';
    return table.mismatches == 0 ? 0 : 1;
}

int cmd_pointwise(const std::string& path) {
    const json j = read_json_file(path);
    PointwiseGroup group;
    group.scores = j.at("scores").get<std::vector<double>>();
    group.lengths = j.at("lengths").get<std::vector<long long>>();
    const auto rewards = compute_pointwise_rewards(group);
    const json out{{"d", rewards.d}, {"c", rewards.c}, {"r", rewards.r}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_relative_advantage(const std::string& path) {
    const json j = read_json_file(path);
    std::vector<ComparisonRecord> records;
    for (const auto& entry : j.at("records")) {
        ComparisonRecord rec;
        rec.prompt_id = entry.value("prompt_id", "");
        const std::string verdict = entry.at("verdict").get<std::string>();
        if (verdict == "win")
            rec.verdict = CompareVerdict::Win;
        else if (verdict == "loss")
            rec.verdict = CompareVerdict::Loss;
        else if (verdict == "tie")
            rec.verdict = CompareVerdict::Tie;
        else
            throw ConfigError("unknown verdict: " + verdict);
        records.push_back(std::move(rec));
    }
    std::cout << json{{"relative_advantage", relative_advantage(records)}}.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pairwise reward shaping engine and desk-scale RL simulator"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string config_path;
    bool allow_unsafe = false;
    auto* run = app.add_subcommand("run", "run an experiment from a JSON config");
    run->add_option("config", config_path, "experiment config JSON")->required();
    run->add_flag("--allow-unsafe", allow_unsafe,
                  "skip the alpha/beta constraint checks at config load");

    std::string mode;
    int n = 0;
    double alpha = 0.0;
    std::optional<double> beta;
    auto* check = app.add_subcommand("check-constraints",
                                     "check the derived alpha/beta parameter bounds");
    check->add_option("--mode", mode, "verifiable or fuzzy")->required();
    check->add_option("--n", n, "group size")->required();
    check->add_option("--alpha", alpha, "correctness/preference reward")->required();
    check->add_option("--beta", beta, "length reward (fuzzy mode)");

    int oracle_n = 0;
    int oracle_m = 0;
    double oracle_alpha = 0.0;
    auto* oracle = app.add_subcommand(
        "oracle", "closed-form rank rewards vs brute-force pairwise enumeration");
    oracle->add_option("--n", oracle_n, "group size")->required();
    oracle->add_option("--m", oracle_m, "number of incorrect samples")->required();
    oracle->add_option("--alpha", oracle_alpha, "correctness reward")->required();

    std::string pointwise_path;
    auto* pointwise = app.add_subcommand(
        "pointwise", "score-adjusted pointwise rewards from {scores, lengths} JSON");
    pointwise->add_option("group", pointwise_path, "group JSON file")->required();

    std::string records_path;
    auto* reladv = app.add_subcommand("relative-advantage",
                                      "(win-loss)/total over comparison records JSON");
    reladv->add_option("records", records_path, "records JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) return run_experiment(config_path, allow_unsafe);
        if (check->parsed()) return cmd_check_constraints(mode, n, alpha, beta);
        if (oracle->parsed()) return cmd_oracle(oracle_n, oracle_m, oracle_alpha);
        if (pointwise->parsed()) return cmd_pointwise(pointwise_path);
        if (reladv->parsed()) return cmd_relative_advantage(records_path);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 4;
    } catch (const RewardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
