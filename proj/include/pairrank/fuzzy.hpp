#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pairrank/reward_core.hpp"
#include "pairrank/types.hpp"

namespace pairrank {

/// Outcome of one better/worse comparison.
struct JudgedPair {
    int better = 0;
    int worse = 0;
};

/// Verdict of a pairwise judge over (a, b).
enum class Verdict { First, Second, Tie };

/// Result of checking beta against the fuzzy ordering bound beta < 2a/(N-2).
struct BetaReport {
    int n = 0;
    double alpha = 0.0;
    double beta = 0.0;
    std::optional<double> threshold;  // absent when n <= 2 (bound degenerate)
    bool degenerate = false;          // n <= 2: any beta is safe
    bool ok = false;
    std::optional<std::string> witness;
};

/// The fuzzy-task rule set over quality-ranked samples:
///   f1: better response strictly shorter -> (+alpha+beta, -alpha-beta)
///   f0: better response longer or equal  -> (+alpha, -alpha)
std::vector<ScenarioRule> fuzzy_rule_set(const RewardConfig& config);

/// Pairwise rewards for a quality-ranked fuzzy group (ranks must be a
/// permutation of 0..N-1).
GroupRewards compute_fuzzy_group_rewards(const std::vector<ResponseSample>& samples,
                                         const RewardConfig& config);

/// Pair matrix driven by an external judge rather than precomputed ranks.
/// A Tie verdict contributes (0, 0) for that pair — an extension beyond the
/// strict-order rule set, used for judges that may report ties.
using PairJudgeFn = std::function<Verdict(const ResponseSample&, const ResponseSample&)>;
PairMatrix build_fuzzy_matrix_from_judge(const std::vector<ResponseSample>& samples,
                                         const PairJudgeFn& judge, const RewardConfig& config);

BetaReport check_beta_constraint(int n, double alpha, double beta);

/// Pointwise scores from a Bradley-Terry reward model plus lengths.
struct PointwiseGroup {
    std::vector<double> scores;
    std::vector<long long> lengths;
};

struct PointwiseRewards {
    std::vector<double> d;  // minimum downward score gaps
    std::vector<int> c;     // shorter-but-no-worse peer counts
    std::vector<double> r;  // adjusted rewards r[i] = s[i] - (c[i]/N) * d[i]
};

/// Score-adjusted pointwise rewards. Samples with no strictly-lower-scored
/// peer take the average gap of those that have one; when all scores tie,
/// d is 0 everywhere and r equals the scores.
PointwiseRewards compute_pointwise_rewards(const PointwiseGroup& group);

}  // namespace pairrank
