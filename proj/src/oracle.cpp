#include "pairrank/oracle.hpp"

#include <cmath>

#include "pairrank/verifiable.hpp"

namespace pairrank {

OracleTable closed_form_vs_brute_force(int n, int m, double alpha) {
    if (n < 1) throw InvalidGroupSize("oracle: n must be >= 1");
    if (m < 0 || m > n) throw InvalidSpec("oracle: m must lie in [0, n]");

    // Canonical layout: correct samples first, longest to shortest, then the
    // incorrect samples. Lengths are distinct among correct samples.
    VerifiableGroup group;
    const int correct_count = n - m;
    for (int r = 0; r < correct_count; ++r)
        group.samples.push_back(make_verifiable_sample(r, 1000 - 10 * r, true));
    for (int k = 0; k < m; ++k)
        group.samples.push_back(make_verifiable_sample(correct_count + k, 500 + k, false));

    RewardConfig config;
    config.alpha = alpha;
    config.beta = 1.0;
    config.group_size = n;
    config.mode = TaskMode::Verifiable;
    config.include_artificial = false;

    const auto rewards = compute_group_rewards(group, config);

    OracleTable table;
    for (int i = 0; i < n; ++i) {
        OracleRow row;
        row.sample = i;
        row.correct = i < correct_count;
        row.rank = row.correct ? i : -1;
        row.brute_force = rewards.totals[static_cast<size_t>(i)];
        row.closed_form = row.correct
                              ? closed_form_reward(n, m, CorrectAtRank{i}, alpha)
                              : closed_form_reward(n, m, IncorrectKind{}, alpha);
        if (row.brute_force != row.closed_form) ++table.mismatches;
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace pairrank
