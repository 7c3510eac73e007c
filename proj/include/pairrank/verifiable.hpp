#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pairrank/reward_core.hpp"
#include "pairrank/types.hpp"

namespace pairrank {

/// A group of verifiable-mode samples. M (incorrect count) is derived.
struct VerifiableGroup {
    std::vector<ResponseSample> samples;

    int incorrect_count() const;
};

/// Result of checking alpha against the two derived lower bounds. Both
/// thresholds assume the length reward is normalized to beta = 1.
struct ConstraintReport {
    int n = 0;
    double alpha = 0.0;
    double assumption3_threshold = 0.0;  // 3 - 3/N
    double assumption4_threshold = 0.0;  // (N-2)/2
    bool assumption3_ok = false;
    bool assumption4_ok = false;
    bool overall_ok = false;
    std::optional<std::string> witness;  // violating extreme configuration
};

/// The verifiable-task rule set:
///   s0: both incorrect            -> (0, 0)
///   s1: correct vs incorrect      -> (+alpha, -alpha), correct positive
///   s2: both correct, len differ  -> (+beta, -beta), shorter positive
///   s3: both correct, equal len   -> (0, 0)
std::vector<ScenarioRule> verifiable_rule_set(const RewardConfig& config);

/// Correctness-only ablation: s0/s1 as above, any both-correct pair -> (0, 0).
/// Removes all shortening pressure; the baseline variant in training runs.
std::vector<ScenarioRule> correctness_only_rule_set(const RewardConfig& config);

/// Pairwise rewards for a verifiable group. When config.include_artificial is
/// set, one artificial correct sample (strictly longer than every real one)
/// and one artificial incorrect sample join the pair matrix; their own totals
/// are discarded and only real-sample totals are returned.
GroupRewards compute_group_rewards(const VerifiableGroup& group, const RewardConfig& config);

struct IncorrectKind {};
struct CorrectAtRank {
    int rank = 0;  // 0 = longest correct
};
using RewardKind = std::variant<IncorrectKind, CorrectAtRank>;

/// Closed-form total for one sample in a group of n with m incorrect samples,
/// assuming beta = 1 and all correct lengths distinct:
///   incorrect            -> -alpha * (n - m)
///   correct at rank r    -> (1 + alpha) * m - n + 1 + 2 * r
double closed_form_reward(int n, int m, const RewardKind& kind, double alpha);

/// Checks the two strict lower bounds on alpha for group size n.
ConstraintReport check_alpha_constraints(int n, double alpha);

}  // namespace pairrank
