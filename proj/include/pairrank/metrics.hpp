#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pairrank/sim_env.hpp"
#include "pairrank/trainer.hpp"
#include "pairrank/types.hpp"

namespace pairrank {

enum class CompareVerdict { Win, Loss, Tie };

/// One judged comparison from the evaluated model's perspective.
struct ComparisonRecord {
    std::string prompt_id;
    CompareVerdict verdict = CompareVerdict::Tie;
};

/// (wins - losses) / total, in [-1, 1]. Ties count in the denominator only.
double relative_advantage(const std::vector<ComparisonRecord>& records);

/// Optional external pairwise judge over HTTP.
struct JudgeSettings {
    std::string endpoint;  // e.g. http://host:port/judge
    int timeout_ms = 5000;
    int max_retries = 2;
};

struct ExperimentConfig {
    RewardConfig reward;
    EnvSpec env;
    int steps = 1;
    int questions_per_step = 32;
    double learning_rate = 0.05;
    std::string output_dir;
    RewardVariant variant = RewardVariant::Ours;
    std::optional<JudgeSettings> judge;
};

struct ConfigError : RewardError {
    using RewardError::RewardError;
};
struct ConstraintViolation : RewardError {
    using RewardError::RewardError;
};
struct IoError : RewardError {
    using RewardError::RewardError;
};
struct JudgeError : RewardError {
    using RewardError::RewardError;
};

/// Parses and validates an experiment config. Constraint checks are enforced
/// at load unless allow_unsafe is set.
ExperimentConfig load_experiment_config(const std::string& path, bool allow_unsafe);
ExperimentConfig parse_experiment_config(const std::string& json_text, bool allow_unsafe);

/// CSV schema: header `step,mean_reward,mean_length,accuracy_or_quality,modal_bins`;
/// modal_bins is a semicolon-separated list of per-difficulty bin indices.
std::string train_log_to_csv(const TrainLog& log);
TrainLog train_log_from_csv(const std::string& csv_text);

/// Exit codes: 0 success, 2 config error, 3 constraint violation without
/// override, 4 I/O error. Artifacts (metrics.csv, summary.json) are written
/// to temp files and renamed, so failures leave no partial outputs.
int run_experiment(const std::string& config_path, bool allow_unsafe);

/// POSTs {prompt, response_a, response_b} and expects {"better": "a"|"b"|"tie"}.
/// Sends JUDGE_API_KEY (when set) as a bearer credential. Throws JudgeError
/// after max_retries failed attempts.
class HttpJudge {
public:
    explicit HttpJudge(JudgeSettings settings);
    Verdict compare(const std::string& prompt, const std::string& response_a,
                    const std::string& response_b) const;

    /// Adapter for the trainer: renders samples as synthetic response text.
    PairJudgeFn as_pair_judge(std::string prompt) const;

private:
    JudgeSettings settings_;
};

}  // namespace pairrank
