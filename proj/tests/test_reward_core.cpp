#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "pairrank/fuzzy.hpp"
#include "pairrank/reward_core.hpp"
#include "pairrank/verifiable.hpp"
#include "oracles.hpp"

using namespace pairrank;

namespace {

RewardConfig verifiable_config(double alpha = 5.0, double beta = 1.0, int n = 8) {
    RewardConfig c;
    c.alpha = alpha;
    c.beta = beta;
    c.group_size = n;
    c.mode = TaskMode::Verifiable;
    return c;
}

RewardConfig fuzzy_config(double alpha, double beta, int n) {
    RewardConfig c;
    c.alpha = alpha;
    c.beta = beta;
    c.group_size = n;
    c.mode = TaskMode::FuzzyPairwise;
    return c;
}

std::vector<ResponseSample> random_verifiable_group(std::mt19937_64& gen, int n) {
    std::uniform_int_distribution<long long> len(0, 200);
    std::bernoulli_distribution coin(0.5);
    std::vector<ResponseSample> samples;
    for (int i = 0; i < n; ++i)
        samples.push_back(make_verifiable_sample(i, len(gen), coin(gen)));
    return samples;
}

std::vector<ResponseSample> random_fuzzy_group(std::mt19937_64& gen, int n) {
    std::uniform_int_distribution<long long> len(0, 200);
    std::vector<int> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 0);
    std::shuffle(ranks.begin(), ranks.end(), gen);
    std::vector<ResponseSample> samples;
    for (int i = 0; i < n; ++i)
        samples.push_back(make_ranked_sample(i, len(gen), ranks[i]));
    return samples;
}

}  // namespace

TEST_CASE("two verifiable samples, one correct one incorrect") {
    const auto rules = verifiable_rule_set(verifiable_config());
    std::vector<ResponseSample> samples{make_verifiable_sample(0, 30, true),
                                        make_verifiable_sample(1, 50, false)};
    const auto matrix = build_pair_matrix(samples, rules);
    CHECK(matrix.at(0, 1) == 5.0);
    CHECK(matrix.at(1, 0) == -5.0);
    CHECK(matrix.at(0, 0) == 0.0);
    CHECK(matrix.at(1, 1) == 0.0);

    const auto rewards = aggregate_rewards(matrix);
    CHECK(rewards.totals == std::vector<double>{5.0, -5.0});
}

TEST_CASE("single sample yields a 1x1 zero matrix and zero reward") {
    const auto rules = verifiable_rule_set(verifiable_config());
    std::vector<ResponseSample> samples{make_verifiable_sample(0, 10, true)};
    const auto matrix = build_pair_matrix(samples, rules);
    CHECK(matrix.size() == 1);
    CHECK(matrix.at(0, 0) == 0.0);
    CHECK(aggregate_rewards(matrix).totals == std::vector<double>{0.0});
}

TEST_CASE("three fuzzy samples, quality A>B>C, lengths 10, 2, 5") {
    const auto rules = fuzzy_rule_set(fuzzy_config(5.0, 3.0, 3));
    std::vector<ResponseSample> samples{make_ranked_sample(0, 10, 0),
                                        make_ranked_sample(1, 2, 1),
                                        make_ranked_sample(2, 5, 2)};
    const auto matrix = build_pair_matrix(samples, rules);
    CHECK(matrix.at(0, 1) == 5.0);   // A better but longer -> f0
    CHECK(matrix.at(1, 0) == -5.0);
    CHECK(matrix.at(0, 2) == 5.0);   // A better but longer -> f0
    CHECK(matrix.at(2, 0) == -5.0);
    CHECK(matrix.at(1, 2) == 8.0);   // B better and shorter -> f1
    CHECK(matrix.at(2, 1) == -8.0);

    const auto rewards = aggregate_rewards(matrix);
    CHECK(rewards.totals == std::vector<double>{10.0, 3.0, -13.0});

    const auto oracle = testing::brute_force_fuzzy_totals(samples, 5.0, 3.0);
    CHECK(rewards.totals == oracle);
}

TEST_CASE("zero matrix aggregates to all-zero totals") {
    PairMatrix matrix(4);
    const auto rewards = aggregate_rewards(matrix);
    CHECK(rewards.totals == std::vector<double>(4, 0.0));
}

TEST_CASE("malformed rule sets are rejected") {
    std::vector<ResponseSample> samples{make_verifiable_sample(0, 10, true),
                                        make_verifiable_sample(1, 20, false)};
    SUBCASE("no rule matches") {
        std::vector<ScenarioRule> rules{{"never", 1.0, -1.0,
                                         [](const ResponseSample&, const ResponseSample&) {
                                             return std::optional<PositiveMember>{};
                                         }}};
        CHECK_THROWS_AS(build_pair_matrix(samples, rules), NoMatchingScenario);
    }
    SUBCASE("two rules match") {
        const auto always = [](const ResponseSample&, const ResponseSample&) {
            return std::optional<PositiveMember>{PositiveMember::First};
        };
        std::vector<ScenarioRule> rules{{"a", 1.0, -1.0, always}, {"b", 2.0, -2.0, always}};
        CHECK_THROWS_AS(build_pair_matrix(samples, rules), AmbiguousScenario);
    }
}

TEST_CASE("mixed outcome variants within one group are rejected") {
    std::vector<ResponseSample> samples{make_verifiable_sample(0, 10, true),
                                        make_ranked_sample(1, 20, 0)};
    CHECK_THROWS_AS(build_pair_matrix(samples, verifiable_rule_set(verifiable_config())),
                    ModeMismatch);
}

TEST_CASE("antisymmetry and zero-sum over random groups") {
    std::mt19937_64 gen(20260823);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(gen() % 9);
        const double alpha = 1.0 + static_cast<double>(gen() % 80) / 8.0;
        const double beta = 0.25 + static_cast<double>(gen() % 40) / 8.0;

        const bool fuzzy = gen() % 2 == 0;
        const auto samples = fuzzy ? random_fuzzy_group(gen, n) : random_verifiable_group(gen, n);
        const auto rules = fuzzy ? fuzzy_rule_set(fuzzy_config(alpha, beta, n))
                                 : verifiable_rule_set(verifiable_config(alpha, beta, n));
        const auto matrix = build_pair_matrix(samples, rules);

        for (int i = 0; i < n; ++i) {
            CHECK(matrix.at(i, i) == 0.0);
            for (int k = 0; k < n; ++k) CHECK(matrix.at(i, k) == -matrix.at(k, i));
        }
        const auto rewards = aggregate_rewards(matrix);
        const double sum = std::accumulate(rewards.totals.begin(), rewards.totals.end(), 0.0);
        CHECK(std::abs(sum) < 1e-9);
    }
}

TEST_CASE("permutation equivariance of totals") {
    std::mt19937_64 gen(77);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(gen() % 6);
        auto samples = random_verifiable_group(gen, n);
        const auto rules = verifiable_rule_set(verifiable_config(4.0, 1.0, n));
        const auto base = aggregate_rewards(build_pair_matrix(samples, rules)).totals;

        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), gen);
        std::vector<ResponseSample> permuted(samples.size());
        for (int i = 0; i < n; ++i) permuted[perm[i]] = samples[i];
        const auto shuffled = aggregate_rewards(build_pair_matrix(permuted, rules)).totals;

        for (int i = 0; i < n; ++i) CHECK(base[i] == shuffled[perm[i]]);
    }
}

TEST_CASE("determinism: identical inputs, bit-identical outputs") {
    std::mt19937_64 gen(5);
    const auto samples = random_verifiable_group(gen, 8);
    const auto rules = verifiable_rule_set(verifiable_config());
    const auto a = aggregate_rewards(build_pair_matrix(samples, rules)).totals;
    const auto b = aggregate_rewards(build_pair_matrix(samples, rules)).totals;
    CHECK(a == b);
}
