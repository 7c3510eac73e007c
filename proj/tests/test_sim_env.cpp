#include <doctest.h>

#include <map>

#include "pairrank/sim_env.hpp"

using namespace pairrank;

namespace {

EnvSpec basic_spec(TaskMode mode = TaskMode::Verifiable) {
    EnvSpec spec;
    spec.num_questions = 10;
    spec.length_bins = {64, 128, 256, 512, 1024, 2048};
    spec.difficulty_levels = {
        {0, 64, 0.9, 0.2, 0.05},
        {1, 512, 0.85, 0.3, 0.05},
    };
    spec.mode = mode;
    spec.seed = 42;
    return spec;
}

}  // namespace

TEST_CASE("question bank: round-robin difficulty counts, deterministic order") {
    const auto spec = basic_spec();
    const auto bank = generate_question_bank(spec);
    REQUIRE(bank.size() == 10);

    std::map<int, int> counts;
    for (const auto& q : bank) counts[q.difficulty_index]++;
    CHECK(counts[0] == 5);
    CHECK(counts[1] == 5);

    const auto again = generate_question_bank(spec);
    for (size_t i = 0; i < bank.size(); ++i) {
        CHECK(bank[i].id == static_cast<int>(i));
        CHECK(bank[i].difficulty_index == again[i].difficulty_index);
    }
}

TEST_CASE("invalid specs are rejected") {
    auto spec = basic_spec();
    SUBCASE("zero questions") {
        spec.num_questions = 0;
        CHECK_THROWS_AS(generate_question_bank(spec), InvalidSpec);
    }
    SUBCASE("non-increasing bins") {
        spec.length_bins = {64, 64, 128};
        CHECK_THROWS_AS(spec.validate(), InvalidSpec);
    }
    SUBCASE("probability out of range") {
        spec.difficulty_levels[0].p_correct_at_sufficient = 1.5;
        CHECK_THROWS_AS(spec.validate(), InvalidSpec);
    }
    SUBCASE("sufficiency outside the bin range") {
        spec.difficulty_levels[0].min_sufficient_length = 9999;
        CHECK_THROWS_AS(spec.validate(), InvalidSpec);
    }
}

TEST_CASE("correctness draw honors the Bernoulli contract") {
    const auto spec = basic_spec();
    const Question easy{0, 0};  // min sufficient 64, p 0.9
    int correct = 0;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        rng::StreamKey key{spec.seed, static_cast<std::uint64_t>(i), 0, 0,
                           rng::Purpose::BinChoice, 0};
        const auto outcome = realize_response(spec, easy, 3, key);  // bin 512 >= 64
        if (outcome.sample.correct()) ++correct;
    }
    const double rate = static_cast<double>(correct) / draws;
    CHECK(rate > 0.88);
    CHECK(rate < 0.92);
}

TEST_CASE("zero below-sufficiency probability means always incorrect") {
    auto spec = basic_spec();
    spec.difficulty_levels[1].p_correct_below = 0.0;
    const Question hard{0, 1};  // min sufficient 512
    for (int i = 0; i < 200; ++i) {
        rng::StreamKey key{spec.seed, static_cast<std::uint64_t>(i), 0, 0,
                           rng::Purpose::BinChoice, 0};
        CHECK_FALSE(realize_response(spec, hard, 1, key).sample.correct());  // bin 128
    }
}

TEST_CASE("correctness probability is monotone in length and plateaus") {
    const DifficultyLevel level{1, 512, 0.85, 0.3, 0.05};
    double previous = -1.0;
    for (long long len : {64, 128, 256, 511, 512, 1024, 2048}) {
        const double p = correct_probability(level, len);
        CHECK(p >= previous);
        previous = p;
    }
    CHECK(correct_probability(level, 512) == 0.85);
    CHECK(correct_probability(level, 2048) == 0.85);
    CHECK(correct_probability(level, 256) == doctest::Approx(0.3 * 256.0 / 512.0));
}

TEST_CASE("same stream key reproduces the same sample") {
    const auto spec = basic_spec();
    const Question q{3, 1};
    rng::StreamKey key{spec.seed, 7, 3, 2, rng::Purpose::BinChoice, 0};
    const auto a = realize_response(spec, q, 4, key);
    const auto b = realize_response(spec, q, 4, key);
    CHECK(a.sample.correct() == b.sample.correct());
    CHECK(a.sample.length == b.sample.length);
    CHECK(a.sample.length == 1024);
}

TEST_CASE("simulated judge compares latent quality with id tie-break") {
    RolloutOutcome a;
    a.sample.id = 2;
    a.latent_quality = 0.8;
    RolloutOutcome b;
    b.sample.id = 7;
    b.latent_quality = 0.3;

    CHECK(simulated_judge(a, b).better == 2);
    CHECK(simulated_judge(b, a).better == 2);  // antisymmetric

    b.latent_quality = 0.8;
    CHECK(simulated_judge(a, b).better == 2);  // tie -> lower id
    CHECK(simulated_judge(b, a).better == 2);
}

TEST_CASE("fuzzy latent quality saturates at sufficiency") {
    const DifficultyLevel level{1, 512, 0.85, 0.3, 0.0};
    CHECK(base_quality(level, 256) == doctest::Approx(0.5));
    CHECK(base_quality(level, 512) == 1.0);
    CHECK(base_quality(level, 2048) == 1.0);

    auto spec = basic_spec(TaskMode::FuzzyPairwise);
    spec.difficulty_levels[1].quality_noise = 0.0;
    rng::StreamKey key{spec.seed, 0, 0, 0, rng::Purpose::BinChoice, 0};
    const auto shorter = realize_response(spec, Question{0, 1}, 3, key);
    const auto longer = realize_response(spec, Question{0, 1}, 5, key);
    CHECK(shorter.latent_quality == longer.latent_quality);
}
