#include "pairrank/fuzzy.hpp"

#include <algorithm>
#include <sstream>

namespace pairrank {

std::vector<ScenarioRule> fuzzy_rule_set(const RewardConfig& config) {
    if (config.mode != TaskMode::FuzzyPairwise)
        throw ModeMismatch("fuzzy_rule_set requires FuzzyPairwise mode");
    config.validate();
    const double alpha = config.alpha;
    const double beta = config.beta;

    std::vector<ScenarioRule> rules;
    rules.push_back(
        {"f1", alpha + beta, -alpha - beta,
         [](const ResponseSample& a, const ResponseSample& b) -> std::optional<PositiveMember> {
             if (a.quality_rank() == b.quality_rank()) return std::nullopt;
             const bool a_better = a.quality_rank() < b.quality_rank();
             const ResponseSample& better = a_better ? a : b;
             const ResponseSample& worse = a_better ? b : a;
             if (better.length < worse.length)
                 return a_better ? PositiveMember::First : PositiveMember::Second;
             return std::nullopt;
         }});
    // f0 covers the remainder: better response longer or equal in length.
    rules.push_back(
        {"f0", alpha, -alpha,
         [](const ResponseSample& a, const ResponseSample& b) -> std::optional<PositiveMember> {
             if (a.quality_rank() == b.quality_rank()) return std::nullopt;
             const bool a_better = a.quality_rank() < b.quality_rank();
             const ResponseSample& better = a_better ? a : b;
             const ResponseSample& worse = a_better ? b : a;
             if (better.length >= worse.length)
                 return a_better ? PositiveMember::First : PositiveMember::Second;
             return std::nullopt;
         }});
    return rules;
}

GroupRewards compute_fuzzy_group_rewards(const std::vector<ResponseSample>& samples,
                                         const RewardConfig& config) {
    if (samples.size() < 2) throw InvalidGroupSize("fuzzy group needs at least 2 samples");
    const int n = static_cast<int>(samples.size());
    std::vector<bool> seen(n, false);
    for (const auto& s : samples) {
        if (!s.has_quality_rank())
            throw MissingQualityOrder("sample " + std::to_string(s.id) + " has no quality rank");
        const int r = s.quality_rank();
        if (r < 0 || r >= n || seen[r])
            throw MissingQualityOrder("quality ranks are not a permutation of 0..N-1");
        seen[r] = true;
    }
    return aggregate_rewards(build_pair_matrix(samples, fuzzy_rule_set(config)));
}

PairMatrix build_fuzzy_matrix_from_judge(const std::vector<ResponseSample>& samples,
                                         const PairJudgeFn& judge, const RewardConfig& config) {
    if (config.mode != TaskMode::FuzzyPairwise)
        throw ModeMismatch("build_fuzzy_matrix_from_judge requires FuzzyPairwise mode");
    config.validate();
    const int n = static_cast<int>(samples.size());
    PairMatrix matrix(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Verdict v = judge(samples[i], samples[j]);
            if (v == Verdict::Tie) continue;  // tie contributes (0, 0)
            const int b = v == Verdict::First ? i : j;
            const int w = v == Verdict::First ? j : i;
            const bool shorter_better = samples[b].length < samples[w].length;
            const double reward = shorter_better ? config.alpha + config.beta : config.alpha;
            matrix.at(b, w) = reward;
            matrix.at(w, b) = -reward;
        }
    }
    return matrix;
}

BetaReport check_beta_constraint(int n, double alpha, double beta) {
    BetaReport report;
    report.n = n;
    report.alpha = alpha;
    report.beta = beta;
    if (n <= 2) {
        // With at most one other sample the extreme layout does not exist;
        // the bound is vacuous and any beta preserves the quality ordering.
        report.degenerate = true;
        report.ok = true;
        return report;
    }
    report.threshold = 2.0 * alpha / (n - 2);
    report.ok = beta < *report.threshold;
    if (!report.ok) {
        std::ostringstream w;
        w << "with best response the longest and second-best the shortest, best total (N-1)a = "
          << (n - 1) * alpha << " does not exceed second-best total (N-2)(a+b)-a = "
          << (n - 2) * (alpha + beta) - alpha << "; requires beta < " << *report.threshold << ".";
        report.witness = w.str();
    }
    return report;
}

PointwiseRewards compute_pointwise_rewards(const PointwiseGroup& group) {
    const size_t n = group.scores.size();
    if (n == 0 || group.lengths.size() != n)
        throw ShapeMismatch("pointwise group: scores and lengths must be equal-length, non-empty");

    PointwiseRewards out;
    out.d.assign(n, 0.0);
    out.c.assign(n, 0);
    out.r.assign(n, 0.0);

    std::vector<bool> has_gap(n, false);
    double gap_sum = 0.0;
    size_t gap_count = 0;
    for (size_t i = 0; i < n; ++i) {
        double best = 0.0;
        bool found = false;
        for (size_t j = 0; j < n; ++j) {
            if (j == i || !(group.scores[i] > group.scores[j])) continue;
            const double gap = group.scores[i] - group.scores[j];
            if (!found || gap < best) best = gap;
            found = true;
        }
        if (found) {
            out.d[i] = best;
            has_gap[i] = true;
            gap_sum += best;
            ++gap_count;
        }
    }
    // Samples at the minimum score take the average gap of the others; with
    // all scores equal there is nothing to average and d stays 0.
    const double fallback = gap_count > 0 ? gap_sum / static_cast<double>(gap_count) : 0.0;
    for (size_t i = 0; i < n; ++i) {
        if (!has_gap[i]) out.d[i] = fallback;
    }

    for (size_t i = 0; i < n; ++i) {
        int count = 0;
        for (size_t j = 0; j < n; ++j) {
            if (j != i && group.scores[j] >= group.scores[i] && group.lengths[j] < group.lengths[i])
                ++count;
        }
        out.c[i] = count;
        out.r[i] = group.scores[i] -
                   (static_cast<double>(count) / static_cast<double>(n)) * out.d[i];
    }
    return out;
}

}  // namespace pairrank
