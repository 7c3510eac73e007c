#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pairrank/fuzzy.hpp"
#include "pairrank/reward_core.hpp"
#include "pairrank/sim_env.hpp"
#include "pairrank/types.hpp"

namespace pairrank {

/// Tabular softmax policy over length bins, one logit row per difficulty.
struct PolicyParams {
    std::vector<std::vector<double>> logits;  // [difficulty][bin]
    double learning_rate = 0.05;

    static PolicyParams uniform(int num_difficulties, int num_bins, double learning_rate);
};

std::vector<double> softmax(const std::vector<double>& logits);

/// Group-normalized advantages over real samples only.
struct AdvantageVector {
    std::vector<double> values;
};

enum class RewardVariant { Ours, BaselineCorrectnessOnly, FuzzyOurs, FuzzyBaseline };

struct StepRecord {
    int step = 0;
    double mean_reward = 0.0;
    double mean_length = 0.0;
    double accuracy_or_quality = 0.0;
    std::vector<int> modal_bins;  // argmax policy bin per difficulty
};

struct TrainLog {
    std::vector<StepRecord> steps;
};

/// Samples n group members for one question: bin choices from the
/// question-difficulty softmax, each realized through the environment.
/// Deterministic given (seed, step, question).
std::vector<RolloutOutcome> sample_group(const PolicyParams& policy, const EnvSpec& env,
                                         const Question& question, int n, std::uint64_t seed,
                                         std::uint64_t step);

/// (r - mean) / population std; all zeros when std < 1e-12.
AdvantageVector group_advantages(const GroupRewards& rewards);

/// REINFORCE step: logits[difficulty] += lr * advantage * (one_hot - probs)
/// per group member. No clipping, no KL term.
void policy_update(PolicyParams& policy, const Question& question,
                   const std::vector<RolloutOutcome>& outcomes,
                   const AdvantageVector& advantages);

/// Full training loop: sample -> reward (per variant) -> advantage -> update.
/// An external pair judge may replace the simulated one for fuzzy variants.
TrainLog train(const EnvSpec& env, PolicyParams& policy, const RewardConfig& config, int steps,
               int questions_per_step, RewardVariant variant,
               const PairJudgeFn* external_judge = nullptr);

}  // namespace pairrank
