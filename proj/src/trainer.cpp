#include "pairrank/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pairrank/verifiable.hpp"

namespace pairrank {

PolicyParams PolicyParams::uniform(int num_difficulties, int num_bins, double learning_rate) {
    PolicyParams p;
    p.logits.assign(static_cast<size_t>(num_difficulties),
                    std::vector<double>(static_cast<size_t>(num_bins), 0.0));
    p.learning_rate = learning_rate;
    return p;
}

std::vector<double> softmax(const std::vector<double>& logits) {
    const double max_logit = *std::max_element(logits.begin(), logits.end());
    std::vector<double> probs(logits.size());
    double sum = 0.0;
    for (size_t i = 0; i < logits.size(); ++i) {
        probs[i] = std::exp(logits[i] - max_logit);
        sum += probs[i];
    }
    for (auto& p : probs) p /= sum;
    return probs;
}

std::vector<RolloutOutcome> sample_group(const PolicyParams& policy, const EnvSpec& env,
                                         const Question& question, int n, std::uint64_t seed,
                                         std::uint64_t step) {
    if (n < 2) throw InvalidGroupSize("sample_group requires n >= 2");
    const auto probs = softmax(policy.logits[static_cast<size_t>(question.difficulty_index)]);

    std::vector<RolloutOutcome> group;
    group.reserve(static_cast<size_t>(n));
    for (int m = 0; m < n; ++m) {
        rng::StreamKey key{seed, step, static_cast<std::uint64_t>(question.id),
                           static_cast<std::uint64_t>(m), rng::Purpose::BinChoice, 0};
        const double u = rng::uniform01(key);
        int bin = static_cast<int>(probs.size()) - 1;
        double cdf = 0.0;
        for (size_t b = 0; b < probs.size(); ++b) {
            cdf += probs[b];
            if (u < cdf) {
                bin = static_cast<int>(b);
                break;
            }
        }
        group.push_back(realize_response(env, question, bin, key));
    }
    return group;
}

AdvantageVector group_advantages(const GroupRewards& rewards) {
    const auto& r = rewards.totals;
    const double n = static_cast<double>(r.size());
    const double mean = std::accumulate(r.begin(), r.end(), 0.0) / n;
    double var = 0.0;
    for (double x : r) var += (x - mean) * (x - mean);
    const double stddev = std::sqrt(var / n);  // population std

    AdvantageVector adv;
    adv.values.assign(r.size(), 0.0);
    if (stddev < 1e-12) return adv;
    for (size_t i = 0; i < r.size(); ++i) adv.values[i] = (r[i] - mean) / stddev;
    return adv;
}

void policy_update(PolicyParams& policy, const Question& question,
                   const std::vector<RolloutOutcome>& outcomes,
                   const AdvantageVector& advantages) {
    if (outcomes.size() != advantages.values.size())
        throw ShapeMismatch("policy_update: outcomes and advantages differ in length");
    auto& row = policy.logits[static_cast<size_t>(question.difficulty_index)];
    for (size_t m = 0; m < outcomes.size(); ++m) {
        const auto probs = softmax(row);
        const double scale = policy.learning_rate * advantages.values[m];
        for (size_t b = 0; b < row.size(); ++b) {
            const double grad =
                (static_cast<int>(b) == outcomes[m].bin_index ? 1.0 : 0.0) - probs[b];
            row[b] += scale * grad;
        }
    }
}

namespace {

GroupRewards fuzzy_group_rewards(const std::vector<RolloutOutcome>& group,
                                 const RewardConfig& config, bool length_bonus,
                                 const PairJudgeFn* external_judge) {
    const int n = static_cast<int>(group.size());
    PairMatrix matrix(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Verdict v;
            if (external_judge) {
                v = (*external_judge)(group[i].sample, group[j].sample);
            } else {
                const JudgedPair jp = simulated_judge(group[i], group[j]);
                v = jp.better == group[i].sample.id ? Verdict::First : Verdict::Second;
            }
            if (v == Verdict::Tie) continue;
            const int b = v == Verdict::First ? i : j;
            const int w = v == Verdict::First ? j : i;
            double reward = config.alpha;
            if (length_bonus && group[b].sample.length < group[w].sample.length)
                reward += config.beta;
            matrix.at(b, w) = reward;
            matrix.at(w, b) = -reward;
        }
    }
    return aggregate_rewards(matrix);
}

GroupRewards verifiable_group_rewards(const std::vector<RolloutOutcome>& group,
                                      const RewardConfig& config, bool length_scenarios) {
    VerifiableGroup vgroup;
    vgroup.samples.reserve(group.size());
    for (const auto& o : group) vgroup.samples.push_back(o.sample);

    if (length_scenarios) return compute_group_rewards(vgroup, config);

    std::vector<ResponseSample> samples = vgroup.samples;
    if (config.include_artificial) {
        long long max_len = 0;
        int max_id = 0;
        for (const auto& s : samples) {
            max_len = std::max(max_len, s.length);
            max_id = std::max(max_id, s.id);
        }
        samples.push_back(make_verifiable_sample(max_id + 1, max_len + 1, true, true));
        samples.push_back(make_verifiable_sample(max_id + 2, 0, false, true));
    }
    auto rewards = aggregate_rewards(build_pair_matrix(samples, correctness_only_rule_set(config)));
    rewards.totals.resize(vgroup.samples.size());
    return rewards;
}

}  // namespace

TrainLog train(const EnvSpec& env, PolicyParams& policy, const RewardConfig& config, int steps,
               int questions_per_step, RewardVariant variant, const PairJudgeFn* external_judge) {
    if (steps < 1) throw InvalidSpec("train requires steps >= 1");
    if (questions_per_step < 1) throw InvalidSpec("train requires questions_per_step >= 1");
    config.validate();
    const bool fuzzy =
        variant == RewardVariant::FuzzyOurs || variant == RewardVariant::FuzzyBaseline;
    if (fuzzy != (env.mode == TaskMode::FuzzyPairwise))
        throw ModeMismatch("reward variant does not match the environment mode");

    const auto bank = generate_question_bank(env);
    const int n = config.group_size;

    TrainLog log;
    log.steps.reserve(static_cast<size_t>(steps));

    for (int step = 0; step < steps; ++step) {
        double reward_sum = 0.0;
        double length_sum = 0.0;
        double signal_sum = 0.0;  // correctness or latent quality
        long long sample_count = 0;

        for (int q = 0; q < questions_per_step; ++q) {
            const auto& question =
                bank[(static_cast<size_t>(step) * questions_per_step + q) % bank.size()];
            const auto group = sample_group(policy, env, question, n,
                                            env.seed, static_cast<std::uint64_t>(step));

            GroupRewards rewards;
            switch (variant) {
                case RewardVariant::Ours:
                    rewards = verifiable_group_rewards(group, config, true);
                    break;
                case RewardVariant::BaselineCorrectnessOnly:
                    rewards = verifiable_group_rewards(group, config, false);
                    break;
                case RewardVariant::FuzzyOurs:
                    rewards = fuzzy_group_rewards(group, config, true, external_judge);
                    break;
                case RewardVariant::FuzzyBaseline:
                    rewards = fuzzy_group_rewards(group, config, false, external_judge);
                    break;
            }

            const auto advantages = group_advantages(rewards);
            policy_update(policy, question, group, advantages);

            for (size_t m = 0; m < group.size(); ++m) {
                reward_sum += rewards.totals[m];
                length_sum += static_cast<double>(group[m].sample.length);
                signal_sum += fuzzy ? group[m].latent_quality
                                    : (group[m].sample.correct() ? 1.0 : 0.0);
                ++sample_count;
            }
        }

        StepRecord record;
        record.step = step;
        record.mean_reward = reward_sum / static_cast<double>(sample_count);
        record.mean_length = length_sum / static_cast<double>(sample_count);
        record.accuracy_or_quality = signal_sum / static_cast<double>(sample_count);
        for (const auto& row : policy.logits) {
            record.modal_bins.push_back(static_cast<int>(
                std::max_element(row.begin(), row.end()) - row.begin()));
        }
        log.steps.push_back(std::move(record));
    }
    return log;
}

}  // namespace pairrank
