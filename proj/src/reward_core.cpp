#include "pairrank/reward_core.hpp"

namespace pairrank {

namespace {

void check_same_mode(const std::vector<ResponseSample>& samples) {
    if (samples.empty()) throw EmptyGroup("build_pair_matrix: no samples");
    const size_t variant = samples.front().outcome.index();
    for (const auto& s : samples) {
        if (s.outcome.index() != variant)
            throw ModeMismatch("samples mix outcome variants within one group");
        if (s.length < 0) throw InvalidSpec("negative sample length");
    }
}

}  // namespace

PairMatrix build_pair_matrix(const std::vector<ResponseSample>& samples,
                             const std::vector<ScenarioRule>& rules) {
    check_same_mode(samples);
    const int n = static_cast<int>(samples.size());
    PairMatrix matrix(n);

    // Evaluate each unordered pair once and write both directions, so
    // antisymmetry is structural rather than a property of the matchers.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const ScenarioRule* matched = nullptr;
            PositiveMember pos = PositiveMember::First;
            for (const auto& rule : rules) {
                auto m = rule.match(samples[i], samples[j]);
                if (!m) continue;
                if (matched)
                    throw AmbiguousScenario("pair (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ") matches rules " + matched->id +
                                            " and " + rule.id);
                matched = &rule;
                pos = *m;
            }
            if (!matched)
                throw NoMatchingScenario("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                         ") matches no scenario");
            const int p = pos == PositiveMember::First ? i : j;
            const int q = pos == PositiveMember::First ? j : i;
            matrix.at(p, q) = matched->gamma_plus;
            matrix.at(q, p) = matched->gamma_minus;
        }
    }
    return matrix;
}

GroupRewards aggregate_rewards(const PairMatrix& matrix) {
    const int n = matrix.size();
    GroupRewards rewards;
    rewards.totals.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double total = 0.0;
        for (int k = 0; k < n; ++k) {
            if (k != i) total += matrix.at(i, k);
        }
        rewards.totals[i] = total;
    }
    return rewards;
}

}  // namespace pairrank
