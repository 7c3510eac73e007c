#include "pairrank/verifiable.hpp"

#include <algorithm>
#include <sstream>

namespace pairrank {

int VerifiableGroup::incorrect_count() const {
    return static_cast<int>(
        std::count_if(samples.begin(), samples.end(), [](const ResponseSample& s) {
            return !s.correct();
        }));
}

std::vector<ScenarioRule> verifiable_rule_set(const RewardConfig& config) {
    if (config.mode != TaskMode::Verifiable)
        throw ModeMismatch("verifiable_rule_set requires Verifiable mode");
    config.validate();
    const double alpha = config.alpha;
    const double beta = config.beta;

    std::vector<ScenarioRule> rules;
    rules.push_back({"s0", 0.0, 0.0,
                     [](const ResponseSample& a, const ResponseSample& b)
                         -> std::optional<PositiveMember> {
                         if (!a.correct() && !b.correct()) return PositiveMember::First;
                         return std::nullopt;
                     }});
    rules.push_back({"s1", alpha, -alpha,
                     [](const ResponseSample& a, const ResponseSample& b)
                         -> std::optional<PositiveMember> {
                         if (a.correct() && !b.correct()) return PositiveMember::First;
                         if (!a.correct() && b.correct()) return PositiveMember::Second;
                         return std::nullopt;
                     }});
    rules.push_back({"s2", beta, -beta,
                     [](const ResponseSample& a, const ResponseSample& b)
                         -> std::optional<PositiveMember> {
                         if (!a.correct() || !b.correct() || a.length == b.length)
                             return std::nullopt;
                         return a.length < b.length ? PositiveMember::First
                                                    : PositiveMember::Second;
                     }});
    rules.push_back({"s3", 0.0, 0.0,
                     [](const ResponseSample& a, const ResponseSample& b)
                         -> std::optional<PositiveMember> {
                         if (a.correct() && b.correct() && a.length == b.length)
                             return PositiveMember::First;
                         return std::nullopt;
                     }});
    return rules;
}

std::vector<ScenarioRule> correctness_only_rule_set(const RewardConfig& config) {
    if (config.mode != TaskMode::Verifiable)
        throw ModeMismatch("correctness_only_rule_set requires Verifiable mode");
    config.validate();
    const double alpha = config.alpha;

    std::vector<ScenarioRule> rules;
    rules.push_back({"s0", 0.0, 0.0,
                     [](const ResponseSample& a, const ResponseSample& b)
                         -> std::optional<PositiveMember> {
                         if (!a.correct() && !b.correct()) return PositiveMember::First;
                         return std::nullopt;
                     }});
    rules.push_back({"s1", alpha, -alpha,
                     [](const ResponseSample& a, const ResponseSample& b)
                         -> std::optional<PositiveMember> {
                         if (a.correct() && !b.correct()) return PositiveMember::First;
                         if (!a.correct() && b.correct()) return PositiveMember::Second;
                         return std::nullopt;
                     }});
    rules.push_back({"s_both_correct", 0.0, 0.0,
                     [](const ResponseSample& a, const ResponseSample& b)
                         -> std::optional<PositiveMember> {
                         if (a.correct() && b.correct()) return PositiveMember::First;
                         return std::nullopt;
                     }});
    return rules;
}

GroupRewards compute_group_rewards(const VerifiableGroup& group, const RewardConfig& config) {
    if (group.samples.empty()) throw EmptyGroup("compute_group_rewards: empty group");

    std::vector<ResponseSample> samples = group.samples;
    const size_t real_count = samples.size();

    if (config.include_artificial) {
        long long max_len = 0;
        int max_id = 0;
        for (const auto& s : samples) {
            max_len = std::max(max_len, s.length);
            max_id = std::max(max_id, s.id);
        }
        // Artificial correct sample is strictly the longest; artificial
        // incorrect sample length is irrelevant to any pairwise reward.
        samples.push_back(make_verifiable_sample(max_id + 1, max_len + 1, true, true));
        samples.push_back(make_verifiable_sample(max_id + 2, 0, false, true));
    }

    const auto matrix = build_pair_matrix(samples, verifiable_rule_set(config));
    auto rewards = aggregate_rewards(matrix);
    rewards.totals.resize(real_count);
    return rewards;
}

double closed_form_reward(int n, int m, const RewardKind& kind, double alpha) {
    if (m < 0 || m > n) throw InvalidSpec("closed_form_reward: m out of range");
    if (std::holds_alternative<IncorrectKind>(kind)) {
        if (m == 0) throw InvalidSpec("closed_form_reward: no incorrect samples in group");
        return -alpha * static_cast<double>(n - m);
    }
    const int rank = std::get<CorrectAtRank>(kind).rank;
    if (rank < 0 || rank >= n - m)
        throw RankOutOfRange("closed_form_reward: rank " + std::to_string(rank) +
                             " outside [0, " + std::to_string(n - m) + ")");
    return (1.0 + alpha) * m - n + 1 + 2.0 * rank;
}

ConstraintReport check_alpha_constraints(int n, double alpha) {
    if (n < 2) throw InvalidGroupSize("check_alpha_constraints requires n >= 2");

    ConstraintReport report;
    report.n = n;
    report.alpha = alpha;
    report.assumption3_threshold = 3.0 - 3.0 / n;
    report.assumption4_threshold = (n - 2) / 2.0;
    report.assumption3_ok = alpha > report.assumption3_threshold;
    report.assumption4_ok = alpha > report.assumption4_threshold;
    report.overall_ok = report.assumption3_ok && report.assumption4_ok;

    if (!report.overall_ok) {
        std::ostringstream w;
        if (!report.assumption3_ok) {
            w << "length-penalty dominance fails at M=0 (all correct, distinct lengths): "
              << "the correct-reward spread 2N-2 = " << 2 * n - 2
              << " is not dominated; requires alpha > " << report.assumption3_threshold << ". ";
        }
        if (!report.assumption4_ok) {
            w << "correct-above-incorrect ordering fails: with one incorrect sample and all "
              << "other correct samples shorter, the longest correct total alpha-(N-2) = "
              << alpha - (n - 2) << " does not exceed -alpha = " << -alpha
              << ", the best incorrect total (attained when only one sample is correct).";
        }
        report.witness = w.str();
    }
    return report;
}

}  // namespace pairrank
