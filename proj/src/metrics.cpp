#include "pairrank/metrics.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "pairrank/fuzzy.hpp"
#include "pairrank/verifiable.hpp"

namespace pairrank {

namespace fs = std::filesystem;
using nlohmann::json;

double relative_advantage(const std::vector<ComparisonRecord>& records) {
    if (records.empty()) throw EmptyGroup("relative_advantage: no comparison records");
    long long wins = 0;
    long long losses = 0;
    for (const auto& rec : records) {
        if (rec.verdict == CompareVerdict::Win) ++wins;
        if (rec.verdict == CompareVerdict::Loss) ++losses;
    }
    return static_cast<double>(wins - losses) / static_cast<double>(records.size());
}

namespace {

TaskMode parse_mode(const std::string& mode) {
    if (mode == "verifiable") return TaskMode::Verifiable;
    if (mode == "fuzzy_pairwise" || mode == "fuzzy") return TaskMode::FuzzyPairwise;
    if (mode == "fuzzy_pointwise") return TaskMode::FuzzyPointwise;
    throw ConfigError("unknown mode: " + mode);
}

RewardVariant parse_variant(const std::string& name) {
    if (name == "ours") return RewardVariant::Ours;
    if (name == "baseline_correctness_only") return RewardVariant::BaselineCorrectnessOnly;
    if (name == "fuzzy_ours") return RewardVariant::FuzzyOurs;
    if (name == "fuzzy_baseline") return RewardVariant::FuzzyBaseline;
    throw ConfigError("unknown reward variant: " + name);
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_file_atomic(const fs::path& target, const std::string& content) {
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw IoError("rename failed for " + target.string() + ": " + ec.message());
}

json constraint_report_json(const ConstraintReport& report) {
    json j{{"n", report.n},
           {"alpha", report.alpha},
           {"assumption3_threshold", report.assumption3_threshold},
           {"assumption4_threshold", report.assumption4_threshold},
           {"assumption3_ok", report.assumption3_ok},
           {"assumption4_ok", report.assumption4_ok},
           {"ok", report.overall_ok},
           {"note", "thresholds assume beta = 1"}};
    if (report.witness) j["witness"] = *report.witness;
    return j;
}

json beta_report_json(const BetaReport& report) {
    json j{{"n", report.n},
           {"alpha", report.alpha},
           {"beta", report.beta},
           {"degenerate", report.degenerate},
           {"ok", report.ok}};
    if (report.threshold) j["threshold"] = *report.threshold;
    if (report.witness) j["witness"] = *report.witness;
    return j;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text, bool allow_unsafe) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }

    ExperimentConfig cfg;
    try {
        cfg.reward.mode = parse_mode(root.at("mode").get<std::string>());

        const auto& reward = root.at("reward");
        cfg.reward.alpha = reward.at("alpha").get<double>();
        cfg.reward.beta = reward.at("beta").get<double>();
        cfg.reward.group_size = reward.at("n").get<int>();
        cfg.reward.include_artificial = reward.value("include_artificial", false);

        const auto& env = root.at("env");
        cfg.env.mode = cfg.reward.mode;
        cfg.env.num_questions = env.at("num_questions").get<int>();
        cfg.env.length_bins = env.at("length_bins").get<std::vector<long long>>();
        for (const auto& level : env.at("difficulty_levels")) {
            DifficultyLevel d;
            d.id = level.at("id").get<int>();
            d.min_sufficient_length = level.at("min_sufficient_length").get<long long>();
            d.p_correct_at_sufficient = level.at("p_correct_at_sufficient").get<double>();
            d.p_correct_below = level.at("p_correct_below").get<double>();
            d.quality_noise = level.value("quality_noise", 0.05);
            cfg.env.difficulty_levels.push_back(d);
        }

        const auto& trainer = root.at("trainer");
        cfg.steps = trainer.at("steps").get<int>();
        cfg.questions_per_step = trainer.at("questions_per_step").get<int>();
        cfg.learning_rate = trainer.at("learning_rate").get<double>();
        cfg.env.seed = trainer.at("seed").get<std::uint64_t>();

        cfg.output_dir = root.at("output_dir").get<std::string>();

        const std::string default_variant =
            cfg.reward.mode == TaskMode::Verifiable ? "ours" : "fuzzy_ours";
        cfg.variant = parse_variant(root.value("variant", default_variant));

        if (root.contains("judge")) {
            JudgeSettings judge;
            judge.endpoint = root["judge"].at("endpoint").get<std::string>();
            judge.timeout_ms = root["judge"].value("timeout_ms", 5000);
            judge.max_retries = root["judge"].value("max_retries", 2);
            cfg.judge = judge;
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config schema violation: ") + e.what());
    }

    try {
        cfg.reward.validate();
        cfg.env.validate();
        if (cfg.steps < 1) throw InvalidSpec("trainer.steps must be >= 1");
        if (cfg.questions_per_step < 1) throw InvalidSpec("trainer.questions_per_step must be >= 1");
        if (!(cfg.learning_rate > 0.0)) throw InvalidSpec("trainer.learning_rate must be > 0");
    } catch (const RewardError& e) {
        throw ConfigError(e.what());
    }

    if (!allow_unsafe) {
        // Fail closed: the derived guarantees are void outside these bounds.
        if (cfg.reward.mode == TaskMode::Verifiable) {
            const auto report = check_alpha_constraints(cfg.reward.group_size, cfg.reward.alpha);
            if (!report.overall_ok)
                throw ConstraintViolation("alpha constraint violated: " +
                                          report.witness.value_or(""));
        } else if (cfg.reward.mode == TaskMode::FuzzyPairwise) {
            const auto report =
                check_beta_constraint(cfg.reward.group_size, cfg.reward.alpha, cfg.reward.beta);
            if (!report.ok)
                throw ConstraintViolation("beta constraint violated: " +
                                          report.witness.value_or(""));
        }
    }
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path, bool allow_unsafe) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_experiment_config(buffer.str(), allow_unsafe);
}

std::string train_log_to_csv(const TrainLog& log) {
    std::ostringstream out;
    out << "step,mean_reward,mean_length,accuracy_or_quality,modal_bins\n";
    for (const auto& rec : log.steps) {
        out << rec.step << ',' << format_double(rec.mean_reward) << ','
            << format_double(rec.mean_length) << ',' << format_double(rec.accuracy_or_quality)
            << ',';
        for (size_t i = 0; i < rec.modal_bins.size(); ++i) {
            if (i > 0) out << ';';
            out << rec.modal_bins[i];
        }
        out << '\n';
    }
    return out.str();
}

TrainLog train_log_from_csv(const std::string& csv_text) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line) ||
        line != "step,mean_reward,mean_length,accuracy_or_quality,modal_bins")
        throw IoError("metrics CSV header mismatch");

    TrainLog log;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        StepRecord rec;
        if (!std::getline(row, field, ',')) throw IoError("bad CSV row: " + line);
        rec.step = std::stoi(field);
        if (!std::getline(row, field, ',')) throw IoError("bad CSV row: " + line);
        rec.mean_reward = std::stod(field);
        if (!std::getline(row, field, ',')) throw IoError("bad CSV row: " + line);
        rec.mean_length = std::stod(field);
        if (!std::getline(row, field, ',')) throw IoError("bad CSV row: " + line);
        rec.accuracy_or_quality = std::stod(field);
        if (!std::getline(row, field)) throw IoError("bad CSV row: " + line);
        std::istringstream bins(field);
        std::string bin;
        while (std::getline(bins, bin, ';')) rec.modal_bins.push_back(std::stoi(bin));
        log.steps.push_back(std::move(rec));
    }
    return log;
}

int run_experiment(const std::string& config_path, bool allow_unsafe) {
    ExperimentConfig cfg;
    try {
        cfg = load_experiment_config(config_path, allow_unsafe);
    } catch (const ConstraintViolation& e) {
        std::cerr << "constraint violation: " << e.what()
                  << "\nre-run with --allow-unsafe to override\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 4;
    } catch (const RewardError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    try {
        PolicyParams policy = PolicyParams::uniform(
            static_cast<int>(cfg.env.difficulty_levels.size()),
            static_cast<int>(cfg.env.length_bins.size()), cfg.learning_rate);

        std::optional<HttpJudge> judge;
        PairJudgeFn judge_fn;
        const PairJudgeFn* judge_ptr = nullptr;
        if (cfg.judge && cfg.env.mode == TaskMode::FuzzyPairwise) {
            judge.emplace(*cfg.judge);
            judge_fn = judge->as_pair_judge("synthetic-group-comparison");
            judge_ptr = &judge_fn;
        }

        const TrainLog log = train(cfg.env, policy, cfg.reward, cfg.steps,
                                   cfg.questions_per_step, cfg.variant, judge_ptr);

        fs::create_directories(cfg.output_dir);
        write_file_atomic(fs::path(cfg.output_dir) / "metrics.csv", train_log_to_csv(log));

        // Final metrics are trailing-window means (last 10% of steps, at
        // least one) to damp per-step sampling noise.
        const size_t window = std::max<size_t>(1, log.steps.size() / 10);
        double acc = 0.0;
        double len = 0.0;
        double rew = 0.0;
        for (size_t i = log.steps.size() - window; i < log.steps.size(); ++i) {
            acc += log.steps[i].accuracy_or_quality;
            len += log.steps[i].mean_length;
            rew += log.steps[i].mean_reward;
        }
        acc /= static_cast<double>(window);
        len /= static_cast<double>(window);
        rew /= static_cast<double>(window);

        json summary;
        summary["final_accuracy_or_quality"] = acc;
        summary["final_mean_length"] = len;
        summary["final_mean_reward"] = rew;
        summary["initial_mean_length"] = log.steps.front().mean_length;
        summary["length_reduction_fraction"] =
            1.0 - len / log.steps.front().mean_length;
        summary["final_modal_bins"] = log.steps.back().modal_bins;
        summary["trailing_window_steps"] = window;
        if (cfg.reward.mode == TaskMode::Verifiable) {
            summary["alpha_constraints"] = constraint_report_json(
                check_alpha_constraints(cfg.reward.group_size, cfg.reward.alpha));
        } else {
            summary["beta_constraint"] = beta_report_json(check_beta_constraint(
                cfg.reward.group_size, cfg.reward.alpha, cfg.reward.beta));
        }
        write_file_atomic(fs::path(cfg.output_dir) / "summary.json", summary.dump(2) + "\n");
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 4;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 4;
    } catch (const RewardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace pairrank
